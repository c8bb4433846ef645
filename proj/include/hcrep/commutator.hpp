#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcrep/antitone.hpp"

namespace hcrep {

// Coordinate j of an encoding vector counts how often the j-th lattice
// element (declared order) occurs among the commutator arguments, so every
// function here needs a representation of dimension |L|.

/// [args] = rhs. Arguments form a multiset, stored sorted by element index.
struct CommEquality {
  std::vector<Element> args;
  Element rhs;

  CommEquality(std::vector<Element> args, Element rhs);
  friend auto operator<=>(const CommEquality&, const CommEquality&) = default;
};

/// [S; args] = rhs: the meet of all commutators whose arguments are `args`
/// plus any number of elements of S.
struct ExtCommEquality {
  std::vector<Element> scope;
  std::vector<Element> args;
  Element rhs;

  ExtCommEquality(std::vector<Element> scope, std::vector<Element> args,
                  Element rhs);
  friend auto operator<=>(const ExtCommEquality&,
                          const ExtCommEquality&) = default;
};

NatVec encode_args(const Lattice& l, std::span<const Element> args);
/// The multiset whose encoding is v, sorted by element index.
std::vector<Element> expand_args(const NatVec& v);

/// [args] under F_G; the empty commutator is top.
Element eval_commutator(const Rep& g, std::span<const Element> args);
/// [S; args] under F_G, via F̂_G at the vector that is ∞ on S and counts
/// args elsewhere.
Element eval_extended(const Rep& g, std::span<const Element> scope,
                      std::span<const Element> args);

/// One equality per canonical point. With `reduced`, equalities are dropped
/// greedily (in canonical order) while the largest function with HC1 to HC4
/// satisfying the remaining ones is still F_G; this requires F_G to satisfy
/// HC1 and HC2 (DomainError otherwise).
std::vector<CommEquality> to_equalities(const Rep& g, bool reduced = false);
/// One extended equality per point of complete(g).
std::vector<ExtCommEquality> to_extended_equalities(
    const Rep& g, std::size_t grid_limit = kDefaultGridLimit);

bool satisfies(const Rep& g, const CommEquality& eq);
bool satisfies(const Rep& g, const ExtCommEquality& eq);

struct LargestResult {
  Rep rep;
  /// attained[k] iff F_rep meets equality k exactly (not only from below).
  std::vector<bool> attained;
};

/// The largest antitone function with [args] ≤ rhs for every equality.
/// With `assume_hc12` the result is the largest one that also has HC1 and
/// HC2.
LargestResult largest_from_equalities(LatticePtr lattice,
                                      const std::vector<CommEquality>& eqs,
                                      bool assume_hc12 = false);

struct Example {
  LatticePtr lattice;
  Rep rep;
};

/// "div52", "B" or "B7". Throws DomainError for other names.
Example example(std::string_view name);
std::vector<std::string> example_names();

/// "[1,1] = alpha".
std::string format(const Lattice& l, const CommEquality& eq);
/// "[{1}; Λ] = alpha".
std::string format(const Lattice& l, const ExtCommEquality& eq);

}  // namespace hcrep
