#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcrep/antitone.hpp"

namespace hcrep {

// Properties of the operation sequence encoded by a representation of
// dimension m = |L|: coordinate j counts the occurrences of the j-th lattice
// element (declared order) among the arguments. All checks throw
// DomainError when the dimension differs from the lattice size.

/// First counterexample found by a failing check.
struct Violation {
  std::vector<ExtVec> vectors;
  std::vector<Element> values;
  std::string detail;
};

struct PropertyCheck {
  bool holds = true;
  std::optional<Violation> violation;

  explicit operator bool() const { return holds; }
};

/// F(e_j) ≤ λ_j for every j.
PropertyCheck check_hc1(const Rep& g);
/// For every canonical point (b, β), every j with b_j > 0 and every i with
/// λ_i ≤ λ_j: F(b - e_j + e_i) ≤ β.
PropertyCheck check_hc2(const Rep& g);
/// Antitony; every F_G is antitone.
PropertyCheck check_hc3(const Rep& g);
/// Symmetry; built into the occurrence-count encoding.
PropertyCheck check_hc4(const Rep& g);
/// F(x + e_k) = F(x + e_i) ∨ F(x + e_j) for all x whenever λ_i ∨ λ_j = λ_k.
/// Decided per element a by comparing the a-sublevels of both sides.
PropertyCheck check_hc7(const Rep& g);
/// Requires HC2 (throws DomainError otherwise). For every canonical point
/// (a, α) and every b ≤ a, with λ_j = F(b): F(a - b + e_j) ≤ α.
/// Throws DomainError if some box below a canonical point exceeds
/// `box_limit` vectors.
PropertyCheck check_hc8(const Rep& g, std::size_t box_limit = kDefaultGridLimit);

struct AdmissibilityReport {
  PropertyCheck hc1;
  PropertyCheck hc2;
  PropertyCheck hc3;
  PropertyCheck hc4;
  PropertyCheck hc7;
  /// Empty when HC2 fails, since HC8 is only decided under HC2.
  std::optional<PropertyCheck> hc8;

  bool admissible() const {
    return hc1.holds && hc2.holds && hc3.holds && hc4.holds && hc7.holds &&
           hc8 && hc8->holds;
  }
};

AdmissibilityReport property_report(const Rep& g);
bool is_admissible(const Rep& g);

/// The largest function with HC1 to HC4 lying below every point of G:
/// closes G under replacing one argument by a strictly smaller element and
/// adds the points (e_j, λ_j).
Rep largest_hc12(const Rep& g);

}  // namespace hcrep
