#include "hcrep/hc.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace hcrep {

namespace {

void require_encoding(const Rep& g, const char* what) {
  if (g.dim() != g.lattice().size()) {
    std::ostringstream os;
    os << what << ": dimension " << g.dim()
       << " differs from the lattice size " << g.lattice().size();
    throw DomainError(os.str());
  }
}

PropertyCheck fail(std::vector<ExtVec> vectors, std::vector<Element> values,
                   std::string detail) {
  return {false, Violation{std::move(vectors), std::move(values),
                           std::move(detail)}};
}

// b - e_j + e_i, for b_j > 0.
NatVec replace(NatVec b, std::size_t j, std::size_t i) {
  --b[j];
  ++b[i];
  return b;
}

}  // namespace

PropertyCheck check_hc1(const Rep& g) {
  require_encoding(g, "HC1");
  const Lattice& l = g.lattice();
  for (std::size_t j = 0; j < g.dim(); ++j) {
    NatVec e = unit(g.dim(), j);
    Element v = eval(g, e);
    if (!l.leq(v, Element(j))) {
      return fail({e}, {v},
                  "[" + l.name(Element(j)) + "] = " + l.name(v) +
                      " is not below " + l.name(Element(j)));
    }
  }
  return {};
}

PropertyCheck check_hc2(const Rep& g) {
  require_encoding(g, "HC2");
  const Lattice& l = g.lattice();
  Rep c = canonical(g);
  for (const auto& p : c.points()) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (p.vec[j] == 0) continue;
      for (std::size_t i = 0; i < g.dim(); ++i) {
        if (i == j || !l.leq(Element(i), Element(j))) continue;
        NatVec q = replace(p.vec, j, i);
        Element v = eval(g, q);
        if (!l.leq(v, p.value)) {
          std::ostringstream os;
          os << "replacing " << l.name(Element(j)) << " by "
             << l.name(Element(i)) << " in " << p.vec << " raises "
             << l.name(p.value) << " to " << l.name(v);
          return fail({p.vec, q}, {p.value, v}, os.str());
        }
      }
    }
  }
  return {};
}

PropertyCheck check_hc3(const Rep& g) {
  require_encoding(g, "HC3");
  return {};
}

PropertyCheck check_hc4(const Rep& g) {
  require_encoding(g, "HC4");
  return {};
}

PropertyCheck check_hc7(const Rep& g) {
  require_encoding(g, "HC7");
  const Lattice& l = g.lattice();
  const std::size_t m = g.dim();
  auto levels = sublevels(g);
  // shifted[a][k] is the a-sublevel of x ↦ F(x + e_k).
  std::vector<std::vector<UpSet>> shifted(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t k = 0; k < m; ++k) {
      shifted[a].push_back(shift_back(levels[a], unit(m, k)));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const std::size_t k = l.join(Element(i), Element(j)).index();
      for (std::size_t a = 0; a < l.size(); ++a) {
        const UpSet& lhs = shifted[a][k];
        UpSet rhs = intersect(shifted[a][i], shifted[a][j]);
        if (lhs == rhs) continue;
        // Some generator of one side is missing from the other.
        NatVec x = zero(m);
        for (const auto& y : lhs.generators()) {
          if (!rhs.contains(y)) x = y;
        }
        for (const auto& y : rhs.generators()) {
          if (!lhs.contains(y)) x = y;
        }
        NatVec xi = add(x, unit(m, i));
        NatVec xj = add(x, unit(m, j));
        NatVec xk = add(x, unit(m, k));
        Element fi = eval(g, xi);
        Element fj = eval(g, xj);
        Element fk = eval(g, xk);
        std::ostringstream os;
        os << "at " << x << ": F(x + e_" << l.name(Element(k)) << ") = "
           << l.name(fk) << " but F(x + e_" << l.name(Element(i))
           << ") join F(x + e_" << l.name(Element(j))
           << ") = " << l.name(l.join(fi, fj));
        return fail({xk, xi, xj}, {fk, fi, fj}, os.str());
      }
    }
  }
  return {};
}

PropertyCheck check_hc8(const Rep& g, std::size_t box_limit) {
  require_encoding(g, "HC8");
  if (!check_hc2(g)) {
    throw DomainError("HC8 is only decided for functions satisfying HC2");
  }
  const Lattice& l = g.lattice();
  const std::size_t m = g.dim();
  Rep c = canonical(g);
  for (const auto& p : c.points()) {
    std::size_t box = 1;
    for (Coord v : p.vec) {
      if (box > box_limit / (v + 1)) {
        throw DomainError("box below " + to_string(p.vec) +
                          " exceeds the HC8 limit");
      }
      box *= v + 1;
    }
    NatVec b = zero(m);
    while (true) {
      Element fb = eval(g, b);
      NatVec q = add(sub(p.vec, b), unit(m, fb.index()));
      Element v = eval(g, q);
      if (!l.leq(v, p.value)) {
        std::ostringstream os;
        os << "nesting " << b << " (value " << l.name(fb) << ") inside "
           << p.vec << " gives " << l.name(v) << ", not below "
           << l.name(p.value);
        return fail({p.vec, b, q}, {p.value, fb, v}, os.str());
      }
      std::size_t i = 0;
      while (i < m) {
        if (b[i] < p.vec[i]) {
          ++b[i];
          break;
        }
        b[i] = 0;
        ++i;
      }
      if (i == m) break;
    }
  }
  return {};
}

AdmissibilityReport property_report(const Rep& g) {
  AdmissibilityReport r;
  r.hc1 = check_hc1(g);
  r.hc2 = check_hc2(g);
  r.hc3 = check_hc3(g);
  r.hc4 = check_hc4(g);
  r.hc7 = check_hc7(g);
  if (r.hc2.holds) r.hc8 = check_hc8(g);
  return r;
}

bool is_admissible(const Rep& g) {
  if (!check_hc1(g) || !check_hc2(g) || !check_hc7(g)) return false;
  return check_hc8(g).holds;
}

Rep largest_hc12(const Rep& g) {
  require_encoding(g, "largest_hc12");
  const Lattice& l = g.lattice();
  const std::size_t m = g.dim();
  std::set<Point> seen(g.points().begin(), g.points().end());
  std::deque<Point> queue(g.points().begin(), g.points().end());
  while (!queue.empty()) {
    Point p = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < m; ++j) {
      if (p.vec[j] == 0) continue;
      for (std::size_t i = 0; i < m; ++i) {
        if (!l.lt(Element(i), Element(j))) continue;
        Point q{replace(p.vec, j, i), p.value};
        if (seen.insert(q).second) queue.push_back(std::move(q));
      }
    }
  }
  std::vector<Point> pts(seen.begin(), seen.end());
  for (std::size_t j = 0; j < m; ++j) pts.push_back({unit(m, j), Element(j)});
  return canonical(Rep(g.lattice_ptr(), m, std::move(pts)));
}

}  // namespace hcrep
