#include "hcrep/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hcrep {

namespace {

[[noreturn]] void fail(const std::string& axiom, std::size_t a, std::size_t b,
                       std::size_t c, const std::string& message) {
  throw LatticeError(axiom, {a, b, c}, message);
}

void check_shape(const Table& t, std::size_t m, const char* which) {
  if (t.size() != m) {
    std::ostringstream os;
    os << which << " table has " << t.size() << " rows, expected " << m;
    throw DomainError(os.str());
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (t[a].size() != m) {
      std::ostringstream os;
      os << which << " table row " << a << " has " << t[a].size()
         << " entries, expected " << m;
      throw DomainError(os.str());
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (t[a][b] >= m) {
        std::ostringstream os;
        os << which << "(" << a << "," << b << ") = " << t[a][b]
           << " is not an element index";
        throw DomainError(os.str());
      }
    }
  }
}

// Idempotence, commutativity and associativity of one binary table.
void check_semilattice(const Table& t, const std::vector<std::string>& names,
                       const char* op) {
  const std::size_t m = t.size();
  auto nm = [&](std::size_t i) { return names[i]; };
  for (std::size_t a = 0; a < m; ++a) {
    if (t[a][a] != a) {
      fail(std::string(op) + " idempotence", a, a, a,
           std::string(op) + "(" + nm(a) + "," + nm(a) + ") = " + nm(t[a][a]));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (t[a][b] != t[b][a]) {
        fail(std::string(op) + " commutativity", a, b, b,
             std::string(op) + "(" + nm(a) + "," + nm(b) + ") = " +
                 nm(t[a][b]) + " but " + op + "(" + nm(b) + "," + nm(a) +
                 ") = " + nm(t[b][a]));
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          fail(std::string(op) + " associativity", a, b, c,
               std::string(op) + " is not associative on (" + nm(a) + "," +
                   nm(b) + "," + nm(c) + ")");
        }
      }
    }
  }
}

}  // namespace

Lattice Lattice::from_tables(std::vector<std::string> names, Table meet,
                             Table join) {
  const std::size_t m = names.size();
  if (m == 0) throw DomainError("a lattice needs at least one element");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("element names must be nonempty");
    if (!seen.insert(n).second) {
      throw DomainError("duplicate element name '" + n + "'");
    }
  }
  check_shape(meet, m, "meet");
  check_shape(join, m, "join");

  Lattice l;
  l.names_ = std::move(names);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.validate();
  l.precompute();
  return l;
}

void Lattice::validate() const {
  const std::size_t m = size();
  check_semilattice(meet_, names_, "meet");
  check_semilattice(join_, names_, "join");
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (meet_[a][join_[a][b]] != a) {
        fail("absorption", a, b, b,
             "absorption fails: " + names_[a] + " meet (" + names_[a] +
                 " join " + names_[b] + ") != " + names_[a]);
      }
      if (join_[a][meet_[a][b]] != a) {
        fail("absorption", a, b, b,
             "absorption fails: " + names_[a] + " join (" + names_[a] +
                 " meet " + names_[b] + ") != " + names_[a]);
      }
      if ((meet_[a][b] == a) != (join_[a][b] == b)) {
        fail("order consistency", a, b, b,
             "meet and join induce different orders on (" + names_[a] + "," +
                 names_[b] + ")");
      }
    }
  }
  // In a finite lattice the fold of all elements is a bound; make sure it
  // is neutral, which also catches tables that are only semilattices.
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t a = 1; a < m; ++a) {
    lo = meet_[lo][a];
    hi = join_[hi][a];
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (meet_[hi][a] != a) {
      fail("top", hi, a, a, "no top element: " + names_[hi] + " meet " +
                                names_[a] + " != " + names_[a]);
    }
    if (join_[lo][a] != a) {
      fail("bottom", lo, a, a, "no bottom element: " + names_[lo] + " join " +
                                   names_[a] + " != " + names_[a]);
    }
  }
}

void Lattice::precompute() {
  const std::size_t m = size();
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t a = 1; a < m; ++a) {
    lo = meet_[lo][a];
    hi = join_[hi][a];
  }
  top_ = Element(hi);
  bottom_ = Element(lo);

  lower_covers_.assign(m, {});
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!lt(Element(b), Element(a))) continue;
      bool covered = true;
      for (std::size_t c = 0; c < m && covered; ++c) {
        if (lt(Element(b), Element(c)) && lt(Element(c), Element(a))) {
          covered = false;
        }
      }
      if (covered) lower_covers_[a].push_back(Element(b));
    }
  }
}

Lattice Lattice::from_order(std::vector<std::string> names,
                            const std::vector<std::vector<bool>>& leq) {
  const std::size_t m = names.size();
  if (m == 0) throw DomainError("a lattice needs at least one element");
  if (leq.size() != m) throw DomainError("leq matrix has wrong number of rows");
  for (const auto& row : leq) {
    if (row.size() != m) throw DomainError("leq matrix is not square");
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!leq[a][a]) {
      fail("reflexivity", a, a, a, "leq is not reflexive at " + names[a]);
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) {
        fail("antisymmetry", a, b, b,
             "leq is not antisymmetric on (" + names[a] + "," + names[b] + ")");
      }
      for (std::size_t c = 0; c < m; ++c) {
        if (leq[a][b] && leq[b][c] && !leq[a][c]) {
          fail("transitivity", a, b, c,
               "leq is not transitive on (" + names[a] + "," + names[b] + "," +
                   names[c] + ")");
        }
      }
    }
  }

  Table meet(m, std::vector<std::size_t>(m));
  Table join(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::optional<std::size_t> glb;
      std::optional<std::size_t> lub;
      for (std::size_t c = 0; c < m; ++c) {
        if (leq[c][a] && leq[c][b] && (!glb || leq[*glb][c])) {
          // c is a lower bound above the current candidate
          glb = c;
        }
        if (leq[a][c] && leq[b][c] && (!lub || leq[c][*lub])) lub = c;
      }
      // The candidates found greedily must dominate every bound.
      for (std::size_t c = 0; c < m; ++c) {
        if (leq[c][a] && leq[c][b] && !(glb && leq[c][*glb])) {
          fail("meet existence", a, b, b,
               "no greatest lower bound for (" + names[a] + "," + names[b] +
                   ")");
        }
        if (leq[a][c] && leq[b][c] && !(lub && leq[*lub][c])) {
          fail("join existence", a, b, b,
               "no least upper bound for (" + names[a] + "," + names[b] + ")");
        }
      }
      meet[a][b] = *glb;
      join[a][b] = *lub;
    }
  }
  return from_tables(std::move(names), std::move(meet), std::move(join));
}

std::vector<Element> Lattice::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

const std::string& Lattice::name(Element a) const {
  if (!contains(a)) {
    throw DomainError("element index " + std::to_string(a.index()) +
                      " is not in the lattice");
  }
  return names_[a.index()];
}

std::optional<Element> Lattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Element(i);
  }
  return std::nullopt;
}

Element Lattice::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw DomainError("unknown lattice element '" + std::string(name) + "'");
}

Element Lattice::element(std::size_t index) const {
  if (index >= size()) {
    throw DomainError("element index " + std::to_string(index) +
                      " is not in the lattice");
  }
  return Element(index);
}

std::span<const Element> Lattice::lower_covers(Element a) const {
  return lower_covers_.at(a.index());
}

Element Lattice::big_meet(std::span<const Element> s) const {
  Element r = top_;
  for (Element e : s) r = meet(r, e);
  return r;
}

Element Lattice::big_join(std::span<const Element> s) const {
  Element r = bottom_;
  for (Element e : s) r = join(r, e);
  return r;
}

namespace lattices {

Lattice chain(std::vector<std::string> names) {
  const std::size_t m = names.size();
  Table meet(m, std::vector<std::size_t>(m));
  Table join(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      meet[a][b] = std::min(a, b);
      join[a][b] = std::max(a, b);
    }
  }
  return Lattice::from_tables(std::move(names), std::move(meet),
                              std::move(join));
}

Lattice chain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return chain(std::move(names));
}

Lattice divisors(unsigned n) {
  if (n == 0) throw DomainError("divisor lattice needs a positive integer");
  std::vector<unsigned> ds;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) ds.push_back(d);
  }
  const std::size_t m = ds.size();
  auto index_of = [&](unsigned v) {
    return static_cast<std::size_t>(
        std::find(ds.begin(), ds.end(), v) - ds.begin());
  };
  std::vector<std::string> names;
  Table meet(m, std::vector<std::size_t>(m));
  Table join(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(std::to_string(ds[a]));
    for (std::size_t b = 0; b < m; ++b) {
      meet[a][b] = index_of(std::gcd(ds[a], ds[b]));
      join[a][b] = index_of(std::lcm(ds[a], ds[b]));
    }
  }
  return Lattice::from_tables(std::move(names), std::move(meet),
                              std::move(join));
}

Lattice diamond() {
  // 0 < a, b < 1 with a, b incomparable.
  return Lattice::from_order({"0", "a", "b", "1"}, {{true, true, true, true},
                                                    {false, true, false, true},
                                                    {false, false, true, true},
                                                    {false, false, false, true}});
}

}  // namespace lattices

}  // namespace hcrep
