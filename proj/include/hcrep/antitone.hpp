#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcrep/lattice.hpp"
#include "hcrep/upset.hpp"
#include "hcrep/vectors.hpp"

namespace hcrep {

struct Point {
  NatVec vec;
  Element value;

  friend auto operator<=>(const Point&, const Point&) = default;
};

struct ExtPoint {
  ExtVec vec;
  Element value;

  friend auto operator<=>(const ExtPoint&, const ExtPoint&) = default;
};

/// A finite set G of (vector, element) pairs. It represents the antitone
/// function
///
///     F_G(x) = ⋀ { γ : (c, γ) ∈ G, c ≤ x }      (empty meet = top),
///
/// the largest antitone map N_0^d → L lying below every point of G.
/// G need not be a subset of the graph of F_G. Points sharing a vector are
/// merged into one point carrying the meet of their values; points are
/// stored sorted by vector.
class Rep {
 public:
  Rep(LatticePtr lattice, std::size_t dim, std::vector<Point> points = {});

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Point>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

  /// G ∪ {p}.
  Rep with_point(Point p) const;

  friend bool operator==(const Rep& a, const Rep& b) {
    return a.dim_ == b.dim_ && same_lattice(a.lattice_, b.lattice_) &&
           a.points_ == b.points_;
  }

 private:
  LatticePtr lattice_;
  std::size_t dim_;
  std::vector<Point> points_;
};

/// A finite subset of (N_0 ∪ {∞})^d × L, meant as a set of points on the
/// graph of an extension F̂. Stored sorted, exact duplicates removed.
class ExtRep {
 public:
  ExtRep(LatticePtr lattice, std::size_t dim, std::vector<ExtPoint> points = {});

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  std::size_t dim() const { return dim_; }
  const std::vector<ExtPoint>& points() const { return points_; }

  friend bool operator==(const ExtRep& a, const ExtRep& b) {
    return a.dim_ == b.dim_ && same_lattice(a.lattice_, b.lattice_) &&
           a.points_ == b.points_;
  }

 private:
  LatticePtr lattice_;
  std::size_t dim_;
  std::vector<ExtPoint> points_;
};

Element eval(const Rep& g, const NatVec& x);
/// F̂_G(x) = ⋀ { F_G(b) : b ∈ N_0^d, b ≤ x }, which for a finite G is again
/// the meet over the points of G lying below x.
Element eval_ext(const Rep& g, const ExtVec& x);
/// A finite b ≤ x with F_G(b) = F̂_G(x): the sup of all point vectors of G
/// below x (zero if there are none).
NatVec witness(const Rep& g, const ExtVec& x);

/// {x ∈ N_0^d : F_G(x) ≤ alpha}.
UpSet sublevel(const Rep& g, Element alpha);
/// sublevel(g, a) for every element a, indexed by element index.
///
/// A minimal element x of a sublevel set is the sup of the point vectors
/// below it: that sup s satisfies s ≤ x and F_G(s) = F_G(x). So all minimal
/// elements lie in the sup-closure of the point vectors (with the zero
/// vector for the empty sup). The closure is computed once and every
/// candidate is evaluated once.
std::vector<UpSet> sublevels(const Rep& g);

/// The canonical representation: for every value a, the minimal vectors x
/// with F_G(x) = a. Computed per a as the generators of the a-sublevel minus
/// the generators of the sublevels of the lower covers of a.
Rep canonical(const Rep& g);

/// Canonical representation of the antitone function whose a-sublevel is
/// levels[a] for every element a. The family must come from an antitone
/// function (levels[top] is everything, levels are monotone and
/// levels[a ∧ b] = levels[a] ∩ levels[b]).
Rep from_sublevels(LatticePtr lattice, std::size_t dim,
                   const std::vector<UpSet>& levels);

/// A complete representation: the minimal elements of every sublevel and
/// the maximal elements of every sublevel's complement in the extended
/// space, each paired with its F̂_G value.
ExtRep complete(const Rep& g, std::size_t grid_limit = kDefaultGridLimit);

struct CompletenessVerdict {
  bool complete = true;
  std::string reason;

  explicit operator bool() const { return complete; }
};

/// Decides whether H is a complete representation of F_G: H must lie on
/// the graph of F̂_G, and for every a the points of H must force F ≤ a at
/// each minimal element of the a-sublevel (meet of H-values below) and
/// F ≰ a at each maximal element of its complement (join of H-values above).
CompletenessVerdict check_complete(const Rep& g, const ExtRep& h,
                                   std::size_t grid_limit = kDefaultGridLimit);

/// True iff F_G is the only antitone function through some finite subset of
/// its graph on N_0^d, i.e. F̂_G(∞·e_i) is bottom for every axis i.
bool finitely_determinable(const Rep& g);

/// F_{g1} ≤ F_{g2} pointwise; it suffices to compare at the points of g2.
bool le_pointwise(const Rep& g1, const Rep& g2);
bool equal_fn(const Rep& g1, const Rep& g2);

/// Step function: beta on b↑, top elsewhere.
Rep step(LatticePtr lattice, const NatVec& b, Element beta);

/// Canonical representation of x ↦ F_G(x + s).
Rep shift(const Rep& g, const NatVec& s);
/// Canonical representation of x ↦ F_{g1}(x) ∨ F_{g2}(x).
Rep pointwise_join(const Rep& g1, const Rep& g2);

void require_compatible(const Rep& a, const Rep& b, const char* what);

}  // namespace hcrep
