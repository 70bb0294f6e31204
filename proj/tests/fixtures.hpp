#ifndef GARSIDE_TESTS_FIXTURES_HPP
#define GARSIDE_TESTS_FIXTURES_HPP

#include <fstream>
#include <string>
#include <vector>

#include "garside/io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(GARSIDE_DATA_DIR) + "/" + name + ".json"; }

inline nlohmann::json raw_json(const std::string& name) {
  std::ifstream in(path(name));
  return nlohmann::json::parse(in);
}

inline garside::GarsideSystem load(const std::string& name) { return garside::load_system(path(name)); }

inline garside::Positive pos(const garside::GarsideSystem& sys, const std::string& word) {
  return garside::normalize(sys, garside::parse_word(sys, word));
}

inline garside::GroupEl grp(const garside::GarsideSystem& sys, const std::string& word) {
  return garside::parse_group_word(sys, word);
}

inline garside::AtomSet set(const garside::GarsideSystem& sys, const std::string& atoms) {
  return garside::parse_atomset(sys, atoms);
}

inline garside::AtomId atom(const garside::GarsideSystem& sys, const std::string& name) {
  return sys.find_atom(name).value();
}

inline std::string nf(const garside::GarsideSystem& sys, const garside::Positive& p) {
  return garside::format_normal_form(sys, p);
}

inline std::string word(const garside::GarsideSystem& sys, const garside::Positive& p) {
  return garside::format_word(sys, p);
}

}  // namespace fixtures

#endif
