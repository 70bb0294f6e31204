// Breadth-first enumeration of a finite Coxeter group.
//
// Elements are discovered level by level (by length). A new element x = w·s
// is identified by the pair (x·s₀, s₀) where s₀ is its smallest right
// descent. Right descents are decided combinatorially: t ≠ s is a right
// descent of x = w·s iff the alternating walk t, s, t, ... of m(s,t) − 1
// steps strictly descends from w, i.e. x ends with the longest element of
// the rank-2 parabolic ⟨s,t⟩. Every walk stays in lower levels, where the
// Cayley table is already complete.

#include <algorithm>
#include <bit>
#include <numeric>

#include "detail.hpp"

namespace garside {

namespace {

constexpr SimpleId unknown = static_cast<SimpleId>(-1);

void check_spec(const CoxeterSpec& spec) {
  const std::size_t r = spec.atoms.size();
  if (r == 0) throw Error(ErrorKind::invalid_input, "Coxeter system needs at least one atom");
  if (r > AtomSet::max_atoms) throw Error(ErrorKind::invalid_input, "too many atoms");
  if (spec.matrix.size() != r) throw Error(ErrorKind::invalid_input, "Coxeter matrix must be square of size " + std::to_string(r));
  for (std::size_t i = 0; i < r; ++i) {
    if (spec.matrix[i].size() != r) throw Error(ErrorKind::invalid_input, "Coxeter matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = i + 1; j < r; ++j)
      if (spec.atoms[i] == spec.atoms[j]) throw Error(ErrorKind::invalid_input, "duplicate atom name '" + spec.atoms[i] + "'");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      int m = spec.matrix[i][j];
      std::string where = "(" + spec.atoms[i] + "," + spec.atoms[j] + ")";
      if (m != spec.matrix[j][i]) throw Error(ErrorKind::invalid_input, "Coxeter matrix not symmetric at " + where);
      if (i == j && m != 1) throw Error(ErrorKind::invalid_input, "diagonal entry must be 1 at " + where);
      if (i != j && m == 0) throw Error(ErrorKind::not_spherical, "infinite entry at " + where);
      if (i != j && m < 2) throw Error(ErrorKind::invalid_input, "off-diagonal entry must be >= 2 at " + where);
    }
  }
}

struct Enumeration {
  std::size_t rank;
  const std::vector<std::vector<int>>& m;
  std::vector<SimpleId> right;  // rank entries per element
  std::vector<std::uint32_t> length;
  std::vector<std::uint64_t> descents;
  std::vector<std::pair<SimpleId, AtomId>> parent;

  SimpleId& at(SimpleId w, AtomId s) { return right[w * rank + s]; }

  SimpleId add(std::uint32_t len, std::uint64_t desc, SimpleId par, AtomId letter) {
    auto id = static_cast<SimpleId>(length.size());
    right.resize(right.size() + rank, unknown);
    length.push_back(len);
    descents.push_back(desc);
    parent.emplace_back(par, letter);
    return id;
  }

  // Alternating descending walk a, b, a, ... of the given number of steps.
  std::optional<SimpleId> walk_down(SimpleId w, AtomId a, AtomId b, int steps) {
    for (int i = 0; i < steps; ++i) {
      AtomId letter = (i % 2 == 0) ? a : b;
      if (!((descents[w] >> letter) & 1u)) return std::nullopt;
      w = at(w, letter);
    }
    return w;
  }

  // Given x = w·s with t a right descent of x, returns x·t.
  SimpleId times_other_descent(SimpleId w, AtomId s, AtomId t) {
    int mst = m[s][t];
    SimpleId v = *walk_down(w, t, s, mst - 1);
    // x·t = v · (alternating word of length m-1 ending with s)
    for (int i = 1; i <= mst - 1; ++i) {
      bool ends_with_s = ((mst - 1 - i) % 2 == 0);
      v = at(v, ends_with_s ? s : t);
    }
    return v;
  }
};

}  // namespace

GarsideSystem CoxeterBuilder::build(const CoxeterSpec& spec, std::size_t cap) {
  check_spec(spec);
  const std::size_t rank = spec.atoms.size();

  Enumeration e{rank, spec.matrix, {}, {}, {}, {}};
  e.add(0, 0, unknown, 0);
  std::vector<SimpleId> level{0};
  std::vector<SimpleId> last_level = level;

  while (!level.empty()) {
    std::vector<SimpleId> next;
    for (SimpleId w : level) {
      for (AtomId s = 0; s < rank; ++s) {
        if ((e.descents[w] >> s) & 1u) continue;
        if (e.at(w, s) != unknown) continue;

        std::uint64_t desc = std::uint64_t{1} << s;
        for (AtomId t = 0; t < rank; ++t)
          if (t != s && e.walk_down(w, t, s, e.m[s][t] - 1)) desc |= std::uint64_t{1} << t;

        auto smin = static_cast<AtomId>(std::countr_zero(desc));
        SimpleId wmin = (smin == s) ? w : e.times_other_descent(w, s, smin);
        SimpleId existing = e.at(wmin, smin);
        if (existing != unknown) {
          e.at(w, s) = existing;
          continue;
        }

        SimpleId x = e.add(e.length[w] + 1, desc, wmin, smin);
        e.at(w, s) = x;
        e.at(x, s) = w;
        e.at(wmin, smin) = x;
        e.at(x, smin) = wmin;
        for (AtomId t = 0; t < rank; ++t) {
          if (t == s || !((desc >> t) & 1u)) continue;
          SimpleId xt = e.times_other_descent(w, s, t);
          e.at(x, t) = xt;
          e.at(xt, t) = x;
        }
        next.push_back(x);
        if (e.length.size() > cap)
          throw Error(ErrorKind::group_too_large, "Coxeter group has more than " + std::to_string(cap) + " elements");
      }
    }
    if (!next.empty()) last_level = next;
    level = std::move(next);
  }

  if (last_level.size() != 1 || e.descents[last_level[0]] != AtomSet::first(rank).bits())
    throw Error(ErrorKind::not_spherical, "enumeration did not close on a unique longest element");

  const std::size_t n = e.length.size();

  // A reduced word for each element from the parent chain, then left multiplication.
  std::vector<std::vector<AtomId>> some_word(n);
  for (SimpleId x = 1; x < n; ++x) {
    some_word[x] = some_word[e.parent[x].first];
    some_word[x].push_back(e.parent[x].second);
  }
  std::vector<SimpleId> left(n * rank);
  for (SimpleId x = 0; x < n; ++x) {
    for (AtomId s = 0; s < rank; ++s) {
      SimpleId cur = e.at(0, s);
      for (AtomId a : some_word[x]) cur = e.at(cur, a);
      left[x * rank + s] = cur;
    }
  }

  // ShortLex words: repeatedly strip the smallest left descent.
  std::vector<SimpleId> by_length(n);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(), [&](SimpleId a, SimpleId b) { return e.length[a] < e.length[b]; });
  std::vector<std::vector<AtomId>> shortlex(n);
  for (SimpleId x : by_length) {
    if (x == 0) continue;
    for (AtomId s = 0; s < rank; ++s) {
      SimpleId sx = left[x * rank + s];
      if (e.length[sx] < e.length[x]) {
        shortlex[x].push_back(s);
        shortlex[x].insert(shortlex[x].end(), shortlex[sx].begin(), shortlex[sx].end());
        break;
      }
    }
  }

  std::vector<SimpleId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](SimpleId a, SimpleId b) {
    if (e.length[a] != e.length[b]) return e.length[a] < e.length[b];
    return shortlex[a] < shortlex[b];
  });
  std::vector<SimpleId> new_id(n);
  for (SimpleId i = 0; i < n; ++i) new_id[order[i]] = i;

  auto data = std::make_unique<detail::CoxeterData>();
  data->rank = rank;
  data->length.resize(n);
  data->right.resize(n * rank);
  data->left.resize(n * rank);
  data->inverse.resize(n);

  GarsideSystem sys;
  sys.provenance_ = Provenance::coxeter;
  sys.atom_names_ = spec.atoms;
  sys.coxeter_matrix_ = spec.matrix;
  sys.words_.resize(n);
  for (SimpleId old = 0; old < n; ++old) {
    SimpleId id = new_id[old];
    data->length[id] = e.length[old];
    sys.words_[id] = shortlex[old];
    for (AtomId s = 0; s < rank; ++s) {
      data->right[id * rank + s] = new_id[e.at(old, s)];
      data->left[id * rank + s] = new_id[left[old * rank + s]];
    }
  }
  for (SimpleId x = 0; x < n; ++x) {
    SimpleId cur = 0;
    for (auto it = sys.words_[x].rbegin(); it != sys.words_[x].rend(); ++it) cur = data->right[cur * rank + *it];
    data->inverse[x] = cur;
  }
  data->longest = new_id[last_level[0]];

  sys.atom_simple_.resize(rank);
  for (AtomId s = 0; s < rank; ++s) sys.atom_simple_[s] = data->right[s];  // identity·s
  sys.delta_ = data->longest;
  sys.phi_.resize(n);
  sys.phi_inv_.resize(n);
  for (SimpleId x = 0; x < n; ++x) {
    // w₀ is an involution, so Δ⁻¹·x·Δ = w₀·x·w₀.
    SimpleId y = data->multiply(data->multiply(data->longest, x, sys.words_), data->longest, sys.words_);
    sys.phi_[x] = y;
  }
  for (SimpleId x = 0; x < n; ++x) sys.phi_inv_[sys.phi_[x]] = x;
  sys.coxeter_ = std::move(data);
  return sys;
}

}  // namespace garside
