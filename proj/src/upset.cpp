#include "hcrep/upset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hcrep {

std::vector<NatVec> minimal_elements(std::vector<NatVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // If a < b in the product order then a precedes b lexicographically, so
  // any dominating element has already been kept when b is examined.
  std::vector<NatVec> kept;
  for (auto& p : points) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const NatVec& k) { return leq(k, p); });
    if (!dominated) kept.push_back(std::move(p));
  }
  return kept;
}

std::vector<ExtVec> maximal_elements(std::vector<ExtVec> points) {
  std::sort(points.begin(), points.end(), std::greater<>());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<ExtVec> kept;
  for (auto& p : points) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const ExtVec& k) { return leq(p, k); });
    if (!dominated) kept.push_back(std::move(p));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

UpSet UpSet::normalize(std::size_t dim, std::vector<NatVec> points) {
  for (const auto& p : points) require_same_dim(dim, p.dim(), "UpSet");
  UpSet u(dim);
  u.gens_ = minimal_elements(std::move(points));
  return u;
}

UpSet UpSet::whole(std::size_t dim) { return normalize(dim, {zero(dim)}); }

bool UpSet::contains(const NatVec& x) const {
  require_same_dim(dim_, x.dim(), "UpSet::contains");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const NatVec& g) { return leq(g, x); });
}

bool UpSet::contains(const ExtVec& x) const {
  require_same_dim(dim_, x.dim(), "UpSet::contains");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const NatVec& g) { return leq(g, x); });
}

UpSet unite(const UpSet& a, const UpSet& b) {
  require_same_dim(a.dim(), b.dim(), "unite");
  std::vector<NatVec> pts = a.generators();
  pts.insert(pts.end(), b.generators().begin(), b.generators().end());
  return UpSet::normalize(a.dim(), std::move(pts));
}

UpSet intersect(const UpSet& a, const UpSet& b) {
  require_same_dim(a.dim(), b.dim(), "intersect");
  std::vector<NatVec> pts;
  pts.reserve(a.generators().size() * b.generators().size());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) pts.push_back(sup(x, y));
  }
  return UpSet::normalize(a.dim(), std::move(pts));
}

UpSet shift_back(const UpSet& u, const NatVec& s) {
  require_same_dim(u.dim(), s.dim(), "shift_back");
  std::vector<NatVec> pts;
  pts.reserve(u.generators().size());
  for (const auto& g : u.generators()) pts.push_back(residual(g, s));
  return UpSet::normalize(u.dim(), std::move(pts));
}

std::vector<ExtVec> complement_maxima(const UpSet& u, std::size_t grid_limit) {
  const std::size_t d = u.dim();
  std::vector<std::vector<ExtNat>> axes(d);
  std::size_t grid_size = 1;
  for (std::size_t i = 0; i < d; ++i) {
    std::set<Coord> vals;
    for (const auto& g : u.generators()) {
      if (g[i] > 0) vals.insert(g[i] - 1);
    }
    for (Coord v : vals) axes[i].emplace_back(v);
    axes[i].push_back(kInf);
    if (grid_size > grid_limit / axes[i].size()) {
      std::ostringstream os;
      os << "complement grid exceeds the limit of " << grid_limit << " points";
      throw DomainError(os.str());
    }
    grid_size *= axes[i].size();
  }

  std::vector<ExtVec> survivors;
  std::vector<std::size_t> idx(d, 0);
  ExtVec x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = axes[i][0];
  while (true) {
    if (!u.contains(x)) survivors.push_back(x);
    std::size_t i = 0;
    while (i < d) {
      if (++idx[i] < axes[i].size()) {
        x[i] = axes[i][idx[i]];
        break;
      }
      idx[i] = 0;
      x[i] = axes[i][0];
      ++i;
    }
    if (i == d) break;
  }
  return maximal_elements(std::move(survivors));
}

}  // namespace hcrep
