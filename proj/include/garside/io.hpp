#ifndef GARSIDE_IO_HPP
#define GARSIDE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "garside/rewrite.hpp"

namespace garside {

using Json = nlohmann::json;

/// System definition files. Malformed input raises InvalidInput naming the field.
GarsideSystem system_from_json(const Json& doc);
GarsideSystem load_system(const std::string& path);
CoxeterSpec coxeter_spec_from_json(const Json& doc);
TableSpec table_spec_from_json(const Json& doc);

/// Whitespace-separated atom names. When every atom name is one character,
/// a token may also spell several atoms ("sts").
std::vector<AtomId> parse_word(const GarsideSystem& sys, std::string_view text);
/// Group words: tokens may carry the suffix "^-1"; DELTA stands for Δ.
GroupEl parse_group_word(const GarsideSystem& sys, std::string_view text);
/// Comma-separated atom names; the empty string is the empty set.
AtomSet parse_atomset(const GarsideSystem& sys, std::string_view text);

/// Greedy letters joined by " . "; "1" for the identity.
std::string format_normal_form(const GarsideSystem& sys, const Positive& p);
/// "DELTA^n . letters" when the exponent is nonzero.
std::string format_group(const GarsideSystem& sys, const GroupEl& g);
/// Atom names separated by spaces; "1" for the identity.
std::string format_word(const GarsideSystem& sys, const Positive& p);
/// "{a,b}", or "{}" for the empty set.
std::string format_atomset(const GarsideSystem& sys, AtomSet x);

Json atomset_json(const GarsideSystem& sys, AtomSet x);
Json letters_json(const GarsideSystem& sys, const Positive& p);
Json word_json(const GarsideSystem& sys, const Positive& p);
Json group_json(const GarsideSystem& sys, const GroupEl& g);
Json nu_atom_json(const GarsideSystem& sys, const NuAtom& a);

Json presentation_json(const GarsideSystem& sys, const Presentation& p);
std::string presentation_text(const GarsideSystem& sys, const Presentation& p);
std::string presentation_rewriting(const GarsideSystem& sys, const Presentation& p);

/// Reads either output format back. Generator values are checked to be
/// ribbons between the stated objects.
Presentation presentation_from_json(const GarsideSystem& sys, const Json& doc);
Presentation presentation_from_rewriting(const GarsideSystem& sys, std::string_view text);
Presentation load_presentation(const GarsideSystem& sys, const std::string& path);

}  // namespace garside

#endif
