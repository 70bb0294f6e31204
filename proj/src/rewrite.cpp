#include "garside/rewrite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace garside {

std::vector<Path> enumerate_paths(const Quiver& q, AtomSet from, std::size_t max_len) {
  std::vector<std::pair<AtomSet, Path>> layer{{from, {}}};
  std::vector<Path> out{Path{}};
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<std::pair<AtomSet, Path>> next;
    for (const auto& [at, path] : layer) {
      for (std::size_t e : q.edges_from(at)) {
        Path longer = path;
        longer.push_back(e);
        out.push_back(longer);
        next.emplace_back(q.edges[e].target, std::move(longer));
      }
    }
    layer = std::move(next);
  }
  return out;
}

CongruenceClosure::CongruenceClosure(const Quiver& q, const std::vector<Relation>& relations, std::size_t max_len)
    : max_len_(max_len) {
  for (AtomSet x : q.objects)
    for (Path& p : enumerate_paths(q, x, max_len)) {
      index_.emplace(std::pair(x.bits(), p), paths_.size());
      paths_.push_back({x, std::move(p)});
    }
  parent_.resize(paths_.size());
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});

  // One rewrite step per (path, relation, direction, position); union-find supplies transitivity.
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    const RootedPath& path = paths_[i];
    for (const Relation& r : relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const Path& from = dir == 0 ? r.lhs : r.rhs;
        const Path& to = dir == 0 ? r.rhs : r.lhs;
        if (from.empty() || from.size() > path.edges.size()) continue;
        if (path.edges.size() - from.size() + to.size() > max_len) continue;
        for (std::size_t pos = 0; pos + from.size() <= path.edges.size(); ++pos) {
          if (!std::equal(from.begin(), from.end(), path.edges.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
          Path rewritten(path.edges.begin(), path.edges.begin() + static_cast<std::ptrdiff_t>(pos));
          rewritten.insert(rewritten.end(), to.begin(), to.end());
          rewritten.insert(rewritten.end(), path.edges.begin() + static_cast<std::ptrdiff_t>(pos + from.size()),
                           path.edges.end());
          auto j = index_of({path.start, rewritten});
          // A rewrite leaving the enumerated paths does not compose; only relations with mismatched endpoints do that.
          if (j) unite(i, *j);
        }
      }
    }
  }
}

std::optional<std::size_t> CongruenceClosure::index_of(const RootedPath& p) const {
  auto it = index_.find(std::pair(p.start.bits(), p.edges));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CongruenceClosure::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

void CongruenceClosure::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a > b) std::swap(a, b);
  parent_[b] = a;
}

std::size_t CongruenceClosure::class_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < paths_.size(); ++i)
    if (find(i) == i) ++n;
  return n;
}

VerifyReport verify_presentation(const GarsideSystem& sys, const Presentation& p, std::size_t level) {
  const Quiver& q = p.quiver;
  // Relations need not preserve length, so a rewrite chain between two short
  // paths can pass through longer ones. Close up to the longest path that
  // represents the value of some path of length ≤ level.
  std::size_t horizon = level;
  for (AtomSet x : q.objects) {
    std::set<Positive> values;
    for (const Path& path : enumerate_paths(q, x, level)) values.insert(evaluate_path(sys, q, path));
    for (const Positive& v : values)
      for (const Path& path : representing_paths(sys, q, x, v, false)) horizon = std::max(horizon, path.size());
  }
  CongruenceClosure closure(q, p.relations, horizon);
  VerifyReport report;
  report.level = level;
  report.horizon = horizon;
  report.paths = closure.paths().size();
  report.classes = closure.class_count();

  using Signature = std::tuple<std::uint64_t, std::uint64_t, Positive>;
  std::vector<Signature> signature;
  signature.reserve(closure.paths().size());
  for (const RootedPath& path : closure.paths())
    signature.emplace_back(path.start.bits(), path_target(q, path.start, path.edges).bits(),
                           evaluate_path(sys, q, path.edges));

  // Soundness: every class carries a single (start, target, value).
  std::map<std::size_t, std::size_t> representative;
  for (std::size_t i = 0; i < signature.size() && report.sound; ++i) {
    auto [it, fresh] = representative.emplace(closure.find(i), i);
    if (!fresh && signature[it->second] != signature[i]) {
      report.sound = false;
      report.counterexample = {closure.paths()[it->second], closure.paths()[i]};
      report.detail = "equivalent paths evaluate differently";
    }
  }

  // Completeness: equal (start, target, value) lies in a single class.
  std::map<Signature, std::size_t> by_value;
  for (std::size_t i = 0; i < signature.size() && report.complete; ++i) {
    if (closure.paths()[i].edges.size() > level) continue;
    auto [it, fresh] = by_value.emplace(signature[i], i);
    if (!fresh && !closure.equivalent(it->second, i)) {
      report.complete = false;
      if (!report.counterexample) {
        report.counterexample = {closure.paths()[it->second], closure.paths()[i]};
        report.detail = "paths with equal value are not equivalent";
      }
    }
  }
  return report;
}

}  // namespace garside
