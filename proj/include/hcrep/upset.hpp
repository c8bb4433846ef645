#pragma once

#include <cstddef>
#include <vector>

#include "hcrep/vectors.hpp"

namespace hcrep {

inline constexpr std::size_t kDefaultGridLimit = 10'000'000;

/// Upward-closed subset of N_0^d, stored as its antichain of minimal
/// generators (finite by Dickson's lemma). Generators are kept sorted
/// lexicographically, so two UpSets are equal iff they denote the same set.
///
/// Membership extends to (N_0 ∪ {∞})^d: x belongs to U iff some generator
/// lies below x. Because generators are finite this is also the upward
/// closure of U inside the extended space.
class UpSet {
 public:
  /// The empty upset.
  explicit UpSet(std::size_t dim) : dim_(dim) {}

  /// Upward closure of `points`; the generators become Min(points).
  static UpSet normalize(std::size_t dim, std::vector<NatVec> points);
  /// All of N_0^d.
  static UpSet whole(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<NatVec>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  bool contains(const NatVec& x) const;
  bool contains(const ExtVec& x) const;

  friend bool operator==(const UpSet&, const UpSet&) = default;

 private:
  std::size_t dim_;
  std::vector<NatVec> gens_;
};

UpSet unite(const UpSet& a, const UpSet& b);
/// Generators are the minimal pairwise sups.
UpSet intersect(const UpSet& a, const UpSet& b);
/// Generators of {x : x + s ∈ U}, i.e. Min{g - (g ⊓ s) : g generator}.
UpSet shift_back(const UpSet& u, const NatVec& s);

/// Max((N_0 ∪ {∞})^d \ U).
///
/// Every coordinate of a maximal non-member is either ∞ or g_i - 1 for a
/// generator g with g_i > 0: if b is maximal and b_i is finite, then
/// b + e_i ∈ U, so some g ≤ b + e_i with g_i = b_i + 1 (otherwise g ≤ b).
/// Hence all maximal non-members lie in the product grid of these
/// per-coordinate candidates. Conversely every non-member of the grid lies
/// below some maximal non-member (chains of non-members have their
/// supremum outside U, since generators are finite), and that maximal
/// element is itself in the grid. So the maximal elements of the filtered
/// grid are exactly the maximal non-members.
///
/// Throws DomainError if the grid has more than `grid_limit` points.
std::vector<ExtVec> complement_maxima(const UpSet& u,
                                      std::size_t grid_limit = kDefaultGridLimit);

/// Minimal elements, sorted lexicographically, duplicates removed.
std::vector<NatVec> minimal_elements(std::vector<NatVec> points);
/// Maximal elements, sorted lexicographically, duplicates removed.
std::vector<ExtVec> maximal_elements(std::vector<ExtVec> points);

}  // namespace hcrep
