#include "hcrep/antitone.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace hcrep {

namespace {

void require_lattice(const LatticePtr& l) {
  if (!l) throw DomainError("representation needs a lattice");
}

void require_element(const Lattice& l, Element e) {
  if (!l.contains(e)) {
    throw DomainError("element index " + std::to_string(e.index()) +
                      " is not in the lattice");
  }
}

// All sups of subsets of the point vectors, including the empty sup.
std::vector<NatVec> sup_closure(const Rep& g) {
  std::set<NatVec> seen{zero(g.dim())};
  std::deque<NatVec> queue{zero(g.dim())};
  while (!queue.empty()) {
    NatVec c = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : g.points()) {
      NatVec s = sup(c, p.vec);
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Rep::Rep(LatticePtr lattice, std::size_t dim, std::vector<Point> points)
    : lattice_(std::move(lattice)), dim_(dim) {
  require_lattice(lattice_);
  if (dim_ == 0) throw DomainError("dimension must be at least 1");
  for (const auto& p : points) {
    require_same_dim(dim_, p.vec.dim(), "Rep point");
    require_element(*lattice_, p.value);
  }
  std::sort(points.begin(), points.end());
  for (auto& p : points) {
    if (!points_.empty() && points_.back().vec == p.vec) {
      points_.back().value = lattice_->meet(points_.back().value, p.value);
    } else {
      points_.push_back(std::move(p));
    }
  }
}

Rep Rep::with_point(Point p) const {
  std::vector<Point> pts = points_;
  pts.push_back(std::move(p));
  return Rep(lattice_, dim_, std::move(pts));
}

ExtRep::ExtRep(LatticePtr lattice, std::size_t dim,
               std::vector<ExtPoint> points)
    : lattice_(std::move(lattice)), dim_(dim) {
  require_lattice(lattice_);
  if (dim_ == 0) throw DomainError("dimension must be at least 1");
  for (const auto& p : points) {
    require_same_dim(dim_, p.vec.dim(), "ExtRep point");
    require_element(*lattice_, p.value);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
}

void require_compatible(const Rep& a, const Rep& b, const char* what) {
  require_same_dim(a.dim(), b.dim(), what);
  if (!same_lattice(a.lattice_ptr(), b.lattice_ptr())) {
    throw DomainError(std::string(what) + ": representations use different lattices");
  }
}

Element eval(const Rep& g, const NatVec& x) {
  require_same_dim(g.dim(), x.dim(), "eval");
  const Lattice& l = g.lattice();
  Element r = l.top();
  for (const auto& p : g.points()) {
    if (leq(p.vec, x)) r = l.meet(r, p.value);
  }
  return r;
}

Element eval_ext(const Rep& g, const ExtVec& x) {
  require_same_dim(g.dim(), x.dim(), "eval_ext");
  const Lattice& l = g.lattice();
  Element r = l.top();
  for (const auto& p : g.points()) {
    if (leq(p.vec, x)) r = l.meet(r, p.value);
  }
  return r;
}

NatVec witness(const Rep& g, const ExtVec& x) {
  require_same_dim(g.dim(), x.dim(), "witness");
  NatVec b = zero(g.dim());
  for (const auto& p : g.points()) {
    if (leq(p.vec, x)) b = sup(b, p.vec);
  }
  return b;
}

std::vector<UpSet> sublevels(const Rep& g) {
  const Lattice& l = g.lattice();
  std::vector<NatVec> cands = sup_closure(g);
  std::vector<Element> vals;
  vals.reserve(cands.size());
  for (const auto& c : cands) vals.push_back(eval(g, c));

  std::vector<UpSet> out;
  out.reserve(l.size());
  for (Element a : l.elements()) {
    std::vector<NatVec> below;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (l.leq(vals[k], a)) below.push_back(cands[k]);
    }
    out.push_back(UpSet::normalize(g.dim(), std::move(below)));
  }
  return out;
}

UpSet sublevel(const Rep& g, Element alpha) {
  require_element(g.lattice(), alpha);
  return sublevels(g)[alpha.index()];
}

Rep from_sublevels(LatticePtr lattice, std::size_t dim,
                   const std::vector<UpSet>& levels) {
  require_lattice(lattice);
  const Lattice& l = *lattice;
  if (levels.size() != l.size()) {
    throw DomainError("need one sublevel set per lattice element");
  }
  std::vector<Point> pts;
  for (Element a : l.elements()) {
    const UpSet& u = levels[a.index()];
    require_same_dim(dim, u.dim(), "from_sublevels");
    auto covers = l.lower_covers(a);
    for (const auto& x : u.generators()) {
      bool lower = std::any_of(covers.begin(), covers.end(), [&](Element b) {
        return levels[b.index()].contains(x);
      });
      if (!lower) pts.push_back({x, a});
    }
  }
  return Rep(std::move(lattice), dim, std::move(pts));
}

Rep canonical(const Rep& g) {
  return from_sublevels(g.lattice_ptr(), g.dim(), sublevels(g));
}

ExtRep complete(const Rep& g, std::size_t grid_limit) {
  std::set<ExtVec> vecs;
  for (const auto& u : sublevels(g)) {
    for (const auto& a : u.generators()) vecs.insert(ExtVec(a));
    for (auto& b : complement_maxima(u, grid_limit)) vecs.insert(std::move(b));
  }
  std::vector<ExtPoint> pts;
  pts.reserve(vecs.size());
  for (const auto& v : vecs) pts.push_back({v, eval_ext(g, v)});
  return ExtRep(g.lattice_ptr(), g.dim(), std::move(pts));
}

CompletenessVerdict check_complete(const Rep& g, const ExtRep& h,
                                   std::size_t grid_limit) {
  require_same_dim(g.dim(), h.dim(), "check_complete");
  if (!same_lattice(g.lattice_ptr(), h.lattice_ptr())) {
    throw DomainError("check_complete: representations use different lattices");
  }
  const Lattice& l = g.lattice();
  for (const auto& p : h.points()) {
    Element v = eval_ext(g, p.vec);
    if (v != p.value) {
      std::ostringstream os;
      os << "point " << p.vec << " carries " << l.name(p.value)
         << " but the extension takes the value " << l.name(v);
      return {false, os.str()};
    }
  }
  auto levels = sublevels(g);
  for (Element a : l.elements()) {
    const UpSet& u = levels[a.index()];
    for (const auto& b : u.generators()) {
      Element m = l.top();
      for (const auto& p : h.points()) {
        if (leq(p.vec, ExtVec(b))) m = l.meet(m, p.value);
      }
      if (!l.leq(m, a)) {
        std::ostringstream os;
        os << "points below " << b << " do not force a value <= "
           << l.name(a);
        return {false, os.str()};
      }
    }
    for (const auto& b : complement_maxima(u, grid_limit)) {
      Element j = l.bottom();
      for (const auto& p : h.points()) {
        if (leq(b, p.vec)) j = l.join(j, p.value);
      }
      if (l.leq(j, a)) {
        std::ostringstream os;
        os << "points above " << b << " do not prevent a value <= "
           << l.name(a);
        return {false, os.str()};
      }
    }
  }
  return {};
}

bool finitely_determinable(const Rep& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (eval_ext(g, axis_infinity(g.dim(), i)) != g.lattice().bottom()) {
      return false;
    }
  }
  return true;
}

bool le_pointwise(const Rep& g1, const Rep& g2) {
  require_compatible(g1, g2, "le_pointwise");
  const Lattice& l = g1.lattice();
  return std::all_of(g2.points().begin(), g2.points().end(),
                     [&](const Point& p) {
                       return l.leq(eval(g1, p.vec), eval(g2, p.vec));
                     });
}

bool equal_fn(const Rep& g1, const Rep& g2) {
  return le_pointwise(g1, g2) && le_pointwise(g2, g1);
}

Rep step(LatticePtr lattice, const NatVec& b, Element beta) {
  return Rep(std::move(lattice), b.dim(), {{b, beta}});
}

Rep shift(const Rep& g, const NatVec& s) {
  require_same_dim(g.dim(), s.dim(), "shift");
  auto levels = sublevels(g);
  for (auto& u : levels) u = shift_back(u, s);
  return from_sublevels(g.lattice_ptr(), g.dim(), levels);
}

Rep pointwise_join(const Rep& g1, const Rep& g2) {
  require_compatible(g1, g2, "pointwise_join");
  auto a = sublevels(g1);
  auto b = sublevels(g2);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = intersect(a[k], b[k]);
  return from_sublevels(g1.lattice_ptr(), g1.dim(), a);
}

}  // namespace hcrep
