#include "hcrep/vectors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hcrep {

Coord ExtNat::value() const {
  if (infinite_) throw DomainError("infinite coordinate has no finite value");
  return value_;
}

namespace {

Coord checked_add(Coord a, Coord b) {
  if (a > std::numeric_limits<Coord>::max() - b) {
    throw DomainError("coordinate overflow in vector addition");
  }
  return a + b;
}

template <class V>
std::ostream& print(std::ostream& os, const V& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

}  // namespace

ExtNat operator+(ExtNat a, ExtNat b) {
  if (a.is_infinite() || b.is_infinite()) return kInf;
  return ExtNat(checked_add(a.value(), b.value()));
}

std::ostream& operator<<(std::ostream& os, ExtNat x) {
  if (x.is_infinite()) return os << "inf";
  return os << x.value();
}

Coord NatVec::total() const {
  Coord s = 0;
  for (Coord c : c_) s = checked_add(s, c);
  return s;
}

ExtVec::ExtVec(const NatVec& v) {
  c_.reserve(v.dim());
  for (Coord c : v) c_.emplace_back(c);
}

bool ExtVec::is_finite() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](ExtNat x) { return x.is_finite(); });
}

NatVec ExtVec::to_nat() const {
  std::vector<Coord> out;
  out.reserve(c_.size());
  for (ExtNat x : c_) out.push_back(x.value());
  return NatVec(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const NatVec& v) { return print(os, v); }
std::ostream& operator<<(std::ostream& os, const ExtVec& v) { return print(os, v); }

std::string to_string(const NatVec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string to_string(const ExtVec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DomainError(os.str());
  }
}

bool leq(const NatVec& a, const NatVec& b) {
  require_same_dim(a.dim(), b.dim(), "leq");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool leq(const NatVec& a, const ExtVec& b) {
  require_same_dim(a.dim(), b.dim(), "leq");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (ExtNat(a[i]) > b[i]) return false;
  }
  return true;
}

bool leq(const ExtVec& a, const ExtVec& b) {
  require_same_dim(a.dim(), b.dim(), "leq");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

NatVec sup(const NatVec& a, const NatVec& b) {
  require_same_dim(a.dim(), b.dim(), "sup");
  NatVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExtVec sup(const ExtVec& a, const ExtVec& b) {
  require_same_dim(a.dim(), b.dim(), "sup");
  ExtVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

NatVec inf(const NatVec& a, const NatVec& b) {
  require_same_dim(a.dim(), b.dim(), "inf");
  NatVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

ExtVec inf(const ExtVec& a, const ExtVec& b) {
  require_same_dim(a.dim(), b.dim(), "inf");
  ExtVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

NatVec add(const NatVec& a, const NatVec& b) {
  require_same_dim(a.dim(), b.dim(), "add");
  NatVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

ExtVec add(const ExtVec& a, const ExtVec& b) {
  require_same_dim(a.dim(), b.dim(), "add");
  ExtVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

NatVec sub(const NatVec& a, const NatVec& b) {
  require_same_dim(a.dim(), b.dim(), "sub");
  NatVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b[i] > a[i]) {
      throw DomainError("sub: " + to_string(b) + " is not below " +
                        to_string(a));
    }
    r[i] = a[i] - b[i];
  }
  return r;
}

ExtVec sub(const ExtVec& a, const ExtVec& b) {
  require_same_dim(a.dim(), b.dim(), "sub");
  ExtVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b[i].is_infinite()) {
      throw DomainError("sub: cannot subtract an infinite coordinate");
    }
    if (a[i].is_infinite()) {
      r[i] = kInf;
    } else if (b[i] > a[i]) {
      throw DomainError("sub: " + to_string(b) + " is not below " +
                        to_string(a));
    } else {
      r[i] = ExtNat(a[i].value() - b[i].value());
    }
  }
  return r;
}

NatVec residual(const NatVec& a, const NatVec& b) {
  require_same_dim(a.dim(), b.dim(), "residual");
  NatVec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - std::min(a[i], b[i]);
  return r;
}

NatVec zero(std::size_t dim) { return NatVec(dim); }

NatVec unit(std::size_t dim, std::size_t i) { return axis(dim, i, 1); }

NatVec axis(std::size_t dim, std::size_t i, Coord c) {
  if (i >= dim) throw DomainError("axis index out of range");
  NatVec v(dim);
  v[i] = c;
  return v;
}

ExtVec axis_infinity(std::size_t dim, std::size_t i) {
  if (i >= dim) throw DomainError("axis index out of range");
  ExtVec v(dim);
  v[i] = kInf;
  return v;
}

ExtVec all_infinity(std::size_t dim) {
  return ExtVec(std::vector<ExtNat>(dim, kInf));
}

}  // namespace hcrep
