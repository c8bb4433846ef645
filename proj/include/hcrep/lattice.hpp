#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcrep/error.hpp"

namespace hcrep {

/// Handle to an element of a finite lattice: a dense index into the
/// lattice's declared element order. Comparison operators compare indices,
/// not the lattice order; use Lattice::leq for the latter.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::size_t index) : index_(index) {}

  constexpr std::size_t index() const { return index_; }

  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::size_t index_ = 0;
};

using Table = std::vector<std::vector<std::size_t>>;

/// Raised when tables or an order matrix do not describe a bounded lattice.
/// `witness` holds the element indices exhibiting the failure; unused slots
/// repeat the last meaningful index.
class LatticeError : public DomainError {
 public:
  LatticeError(std::string axiom, std::array<std::size_t, 3> witness,
               const std::string& message)
      : DomainError(message), axiom_(std::move(axiom)), witness_(witness) {}

  const std::string& axiom() const { return axiom_; }
  const std::array<std::size_t, 3>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::array<std::size_t, 3> witness_;
};

/// A finite bounded lattice given by its meet and join tables.
///
/// Every Lattice value has passed full validation: meet and join are
/// idempotent, commutative and associative, absorption holds, the two
/// derived orders agree, and top/bottom exist. Instances are immutable.
class Lattice {
 public:
  static Lattice from_tables(std::vector<std::string> names, Table meet,
                             Table join);

  /// Builds meet and join from a partial order given as leq[a][b] = (a <= b).
  /// Fails if the matrix is not a partial order or some pair lacks a glb/lub.
  static Lattice from_order(std::vector<std::string> names,
                            const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return names_.size(); }
  std::vector<Element> elements() const;

  const std::string& name(Element a) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;
  /// Throws DomainError for unknown names.
  Element element(std::string_view name) const;
  /// Throws DomainError for out-of-range indices.
  Element element(std::size_t index) const;
  bool contains(Element a) const { return a.index() < size(); }

  Element meet(Element a, Element b) const {
    return Element(meet_[a.index()][b.index()]);
  }
  Element join(Element a, Element b) const {
    return Element(join_[a.index()][b.index()]);
  }
  bool leq(Element a, Element b) const { return meet(a, b) == a; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }

  Element top() const { return top_; }
  Element bottom() const { return bottom_; }

  /// All b with b < a and nothing strictly between, in index order.
  std::span<const Element> lower_covers(Element a) const;

  /// Empty meet is top, empty join is bottom.
  Element big_meet(std::span<const Element> s) const;
  Element big_meet(std::initializer_list<Element> s) const {
    return big_meet(std::span<const Element>(s.begin(), s.size()));
  }
  Element big_join(std::span<const Element> s) const;
  Element big_join(std::initializer_list<Element> s) const {
    return big_join(std::span<const Element>(s.begin(), s.size()));
  }

  const Table& meet_table() const { return meet_; }
  const Table& join_table() const { return join_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.names_ == b.names_ && a.meet_ == b.meet_ && a.join_ == b.join_;
  }

 private:
  Lattice() = default;
  void validate() const;
  void precompute();

  std::vector<std::string> names_;
  Table meet_;
  Table join_;
  Element top_;
  Element bottom_;
  std::vector<std::vector<Element>> lower_covers_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Same lattice object or structurally identical lattices.
inline bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace lattices {

/// Chain 0 < 1 < ... < n-1 with the given names (bottom first).
Lattice chain(std::vector<std::string> names);
Lattice chain(std::size_t n);
/// Positive divisors of n ordered by divisibility (meet = gcd, join = lcm).
Lattice divisors(unsigned n);
/// The four-element Boolean lattice {0, a, b, 1}.
Lattice diamond();

}  // namespace lattices

}  // namespace hcrep
