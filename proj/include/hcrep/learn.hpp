#pragma once

#include <cstddef>
#include <functional>

#include "hcrep/antitone.hpp"

namespace hcrep {

/// Black-box access to the extension F̂ of an antitone function
/// N_0^d → L that has a finite representation.
class Oracle {
 public:
  using Query = std::function<Element(const ExtVec&)>;

  Oracle(LatticePtr lattice, std::size_t dim, Query query);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  std::size_t dim() const { return dim_; }

  /// Checks the dimension and that the answer is a lattice element.
  Element operator()(const ExtVec& x) const;

 private:
  LatticePtr lattice_;
  std::size_t dim_;
  Query query_;
};

/// query(x) = eval_ext(g, x).
Oracle oracle_from_rep(const Rep& g);

struct LearnStep {
  std::size_t round = 0;
  NatVec counterexample;
  Element value;
  bool via_shortcut = false;
};

struct LearnOptions {
  std::size_t max_rounds = 10'000;
  /// Cap on vectors visited by one counterexample search.
  std::size_t max_enumeration = 10'000'000;
  std::function<void(const LearnStep&)> on_round;
};

struct LearnResult {
  /// Points collected from the oracle; a subset of its graph.
  Rep learned;
  /// Complete representation of F_learned, verified against the oracle.
  ExtRep complete_rep;
  std::size_t rounds = 0;
  std::size_t queries = 0;
  std::size_t shortcut_rounds = 0;
  std::size_t enumeration_rounds = 0;
};

/// Learns G with F_G equal to the oracle's function. Starting from G = ∅,
/// each round computes a complete representation H of F_G and stops once H
/// agrees with the oracle. Otherwise it adds one point (a, F(a)) with
/// F(a) < F_G(a): a finite point of H if one disagrees, else the first such
/// a in order of coordinate sum, then lexicographic, among the vectors
/// below a disagreeing point of H.
///
/// Throws DomainError when max_rounds is exceeded or a search exceeds
/// max_enumeration (both signal an inconsistent oracle or tight limits).
LearnResult learn(const Oracle& oracle, const LearnOptions& options = {});

}  // namespace hcrep
