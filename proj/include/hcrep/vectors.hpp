#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "hcrep/error.hpp"

namespace hcrep {

using Coord = std::uint64_t;

/// A natural number or infinity. Infinity is a distinct tag, never a
/// sentinel value, and is the maximum of the total order.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(Coord v) : value_(v) {}  // NOLINT: naturals embed
  static constexpr ExtNat infinity() {
    ExtNat x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }
  /// Throws DomainError on infinity.
  Coord value() const;

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }

 private:
  Coord value_ = 0;
  bool infinite_ = false;
};

inline constexpr ExtNat kInf = ExtNat::infinity();

ExtNat operator+(ExtNat a, ExtNat b);
std::ostream& operator<<(std::ostream& os, ExtNat x);

/// Element of N_0^d.
class NatVec {
 public:
  NatVec() = default;
  explicit NatVec(std::size_t dim) : c_(dim, 0) {}
  NatVec(std::initializer_list<Coord> c) : c_(c) {}
  explicit NatVec(std::vector<Coord> c) : c_(std::move(c)) {}

  std::size_t dim() const { return c_.size(); }
  Coord operator[](std::size_t i) const { return c_[i]; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Coord>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  Coord total() const;

  // Lexicographic; used for canonical ordering only.
  friend auto operator<=>(const NatVec&, const NatVec&) = default;

 private:
  std::vector<Coord> c_;
};

/// Element of (N_0 ∪ {∞})^d.
class ExtVec {
 public:
  ExtVec() = default;
  explicit ExtVec(std::size_t dim) : c_(dim, ExtNat(0)) {}
  ExtVec(std::initializer_list<ExtNat> c) : c_(c) {}
  explicit ExtVec(std::vector<ExtNat> c) : c_(std::move(c)) {}
  ExtVec(const NatVec& v);  // NOLINT: N_0^d embeds into the extension

  std::size_t dim() const { return c_.size(); }
  ExtNat operator[](std::size_t i) const { return c_[i]; }
  ExtNat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<ExtNat>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_finite() const;
  /// Throws DomainError if some coordinate is infinite.
  NatVec to_nat() const;

  friend auto operator<=>(const ExtVec&, const ExtVec&) = default;

 private:
  std::vector<ExtNat> c_;
};

std::ostream& operator<<(std::ostream& os, const NatVec& v);
std::ostream& operator<<(std::ostream& os, const ExtVec& v);
std::string to_string(const NatVec& v);
std::string to_string(const ExtVec& v);

// Product order and lattice operations. All binary operations throw
// DomainError when dimensions differ.
bool leq(const NatVec& a, const NatVec& b);
bool leq(const NatVec& a, const ExtVec& b);
bool leq(const ExtVec& a, const ExtVec& b);
inline bool lt(const NatVec& a, const NatVec& b) { return a != b && leq(a, b); }
inline bool lt(const ExtVec& a, const ExtVec& b) { return a != b && leq(a, b); }

NatVec sup(const NatVec& a, const NatVec& b);
ExtVec sup(const ExtVec& a, const ExtVec& b);
NatVec inf(const NatVec& a, const NatVec& b);
ExtVec inf(const ExtVec& a, const ExtVec& b);

NatVec add(const NatVec& a, const NatVec& b);
ExtVec add(const ExtVec& a, const ExtVec& b);
/// a - b; requires b <= a. For extended vectors ∞ - n = ∞, while ∞ - ∞ and
/// n - ∞ are rejected.
NatVec sub(const NatVec& a, const NatVec& b);
ExtVec sub(const ExtVec& a, const ExtVec& b);
/// a - (a ⊓ b): always defined.
NatVec residual(const NatVec& a, const NatVec& b);

NatVec zero(std::size_t dim);
/// i-th unit vector e_i (0-based).
NatVec unit(std::size_t dim, std::size_t i);
/// c · e_i.
NatVec axis(std::size_t dim, std::size_t i, Coord c);
/// ∞ · e_i: infinite in coordinate i, zero elsewhere.
ExtVec axis_infinity(std::size_t dim, std::size_t i);
ExtVec all_infinity(std::size_t dim);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace hcrep
