#ifndef GARSIDE_REWRITE_HPP
#define GARSIDE_REWRITE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garside/ribbon.hpp"

namespace garside {

/// A path with its start object, so empty paths at different objects differ.
struct RootedPath {
  AtomSet start;
  Path edges;

  friend bool operator==(const RootedPath&, const RootedPath&) = default;
};

/// All paths of length at most `max_len` from `from`, shortest first, then
/// lexicographic in edge ids.
std::vector<Path> enumerate_paths(const Quiver& q, AtomSet from, std::size_t max_len);

/// Union-find over every path of length at most L from every object, closed
/// under applying each relation in both directions at every position.
class CongruenceClosure {
public:
  CongruenceClosure(const Quiver& q, const std::vector<Relation>& relations, std::size_t max_len);

  std::size_t max_len() const { return max_len_; }
  const std::vector<RootedPath>& paths() const { return paths_; }
  std::optional<std::size_t> index_of(const RootedPath& p) const;
  std::size_t find(std::size_t i) const;
  bool equivalent(std::size_t a, std::size_t b) const { return find(a) == find(b); }
  std::size_t class_count() const;

private:
  void unite(std::size_t a, std::size_t b);

  std::size_t max_len_;
  std::vector<RootedPath> paths_;
  std::map<std::pair<std::uint64_t, Path>, std::size_t> index_;
  mutable std::vector<std::size_t> parent_;
};

struct VerifyReport {
  std::size_t level = 0;
  std::size_t horizon = 0;  // closure length actually used, ≥ level
  std::size_t paths = 0;
  std::size_t classes = 0;
  bool sound = true;
  bool complete = true;
  /// Witness pair when a check fails: equivalent paths that differ
  /// (soundness) or equal paths left apart (completeness).
  std::optional<std::pair<RootedPath, RootedPath>> counterexample;
  std::string detail;
};

/// Soundness and bounded completeness of a presentation against evaluation in A⁺.
VerifyReport verify_presentation(const GarsideSystem& sys, const Presentation& p, std::size_t level);

}  // namespace garside

#endif
