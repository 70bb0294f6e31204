#ifndef GARSIDE_SRC_DETAIL_HPP
#define GARSIDE_SRC_DETAIL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "garside/system.hpp"

namespace garside::detail {

/// Finite Coxeter group with full right/left Cayley tables. Element ids
/// coincide with simple ids of the owning system.
struct CoxeterData {
  std::size_t rank = 0;
  std::vector<std::uint32_t> length;
  std::vector<SimpleId> right;  // right[w * rank + s] = w·s
  std::vector<SimpleId> left;   // left[w * rank + s] = s·w
  std::vector<SimpleId> inverse;
  SimpleId longest = 0;

  SimpleId times_atom(SimpleId w, AtomId s) const { return right[w * rank + s]; }
  SimpleId atom_times(AtomId s, SimpleId w) const { return left[w * rank + s]; }
  bool right_descent(SimpleId w, AtomId s) const { return length[times_atom(w, s)] < length[w]; }
  bool left_descent(SimpleId w, AtomId s) const { return length[atom_times(s, w)] < length[w]; }

  SimpleId multiply(SimpleId x, SimpleId y, const std::vector<std::vector<AtomId>>& words) const {
    for (AtomId s : words[y]) x = times_atom(x, s);
    return x;
  }
};

/// Dense tables for a declared (table-built) system. -1 marks "undefined".
struct TableData {
  std::size_t n = 0;
  std::vector<std::int32_t> product;     // a·b
  std::vector<std::int32_t> quot_left;   // [a*n+b] = c with a·c = b
  std::vector<std::int32_t> quot_right;  // [a*n+b] = c with c·a = b
  std::vector<SimpleId> meet_left, meet_right, join_left, join_right;
  std::vector<SimpleId> comp_left, comp_right;

  std::int32_t at(const std::vector<std::int32_t>& t, SimpleId a, SimpleId b) const { return t[a * n + b]; }
};

}  // namespace garside::detail

namespace garside {

class CoxeterBuilder {
public:
  static GarsideSystem build(const CoxeterSpec& spec, std::size_t cap);
};

class TableBuilder {
public:
  static GarsideSystem build(const TableSpec& spec);
};

}  // namespace garside

#endif
