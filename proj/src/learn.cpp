#include "hcrep/learn.hpp"

#include <optional>
#include <sstream>

namespace hcrep {

namespace {

// Visits the vectors b ≤ bound with coordinate sum `total` in
// lexicographic order until `visit` returns true.
template <class Visit>
bool for_each_with_sum(const ExtVec& bound, Coord total, NatVec& b,
                       std::size_t i, Visit&& visit) {
  const std::size_t d = b.dim();
  if (i + 1 == d) {
    if (bound[i] < ExtNat(total)) return false;
    b[i] = total;
    return visit(b);
  }
  Coord hi = total;
  if (bound[i].is_finite() && bound[i].value() < hi) hi = bound[i].value();
  for (Coord c = 0; c <= hi; ++c) {
    b[i] = c;
    if (for_each_with_sum(bound, total - c, b, i + 1, visit)) return true;
  }
  return false;
}

Coord finite_total(const ExtVec& x) {
  Coord s = 0;
  for (ExtNat c : x) {
    if (c.is_infinite()) return 0;
    s += c.value();
  }
  return s;
}

}  // namespace

Oracle::Oracle(LatticePtr lattice, std::size_t dim, Query query)
    : lattice_(std::move(lattice)), dim_(dim), query_(std::move(query)) {
  if (!lattice_) throw DomainError("oracle needs a lattice");
  if (dim_ == 0) throw DomainError("dimension must be at least 1");
  if (!query_) throw DomainError("oracle needs a query function");
}

Element Oracle::operator()(const ExtVec& x) const {
  require_same_dim(dim_, x.dim(), "oracle query");
  Element v = query_(x);
  if (!lattice_->contains(v)) {
    throw DomainError("oracle answered with a foreign element at " +
                      to_string(x));
  }
  return v;
}

Oracle oracle_from_rep(const Rep& g) {
  return Oracle(g.lattice_ptr(), g.dim(),
                [g](const ExtVec& x) { return eval_ext(g, x); });
}

LearnResult learn(const Oracle& oracle, const LearnOptions& options) {
  if (options.max_rounds == 0) throw DomainError("max_rounds must be positive");
  const Lattice& l = oracle.lattice();
  const std::size_t d = oracle.dim();
  std::size_t queries = 0;
  auto ask = [&](const ExtVec& x) {
    ++queries;
    return oracle(x);
  };

  Rep g(oracle.lattice_ptr(), d);
  std::size_t rounds = 0;
  std::size_t shortcut_rounds = 0;
  std::size_t enumeration_rounds = 0;
  while (true) {
    ExtRep h = complete(g);
    std::optional<NatVec> found;
    std::optional<Element> found_value;
    bool via_shortcut = false;
    std::optional<ExtVec> disagreement;
    for (const auto& p : h.points()) {
      Element v = ask(p.vec);
      if (v == p.value) continue;
      if (!disagreement) disagreement = p.vec;
      if (p.vec.is_finite() && l.lt(v, p.value)) {
        found = p.vec.to_nat();
        found_value = v;
        via_shortcut = true;
        break;
      }
    }
    if (!disagreement) {
      return {std::move(g), std::move(h), rounds, queries, shortcut_rounds,
              enumeration_rounds};
    }
    if (rounds == options.max_rounds) {
      std::ostringstream os;
      os << "learning did not converge within " << options.max_rounds
         << " rounds";
      throw DomainError(os.str());
    }

    if (!found) {
      // Some finite b below the disagreeing point already disagrees.
      std::size_t visited = 0;
      NatVec b(d);
      const ExtVec& bound = *disagreement;
      const bool bounded = bound.is_finite();
      const Coord last = finite_total(bound);
      for (Coord total = 0; !found; ++total) {
        if (bounded && total > last) break;
        for_each_with_sum(bound, total, b, 0, [&](const NatVec& x) {
          if (++visited > options.max_enumeration) {
            std::ostringstream os;
            os << "no counterexample below " << bound << " within "
               << options.max_enumeration << " vectors";
            throw DomainError(os.str());
          }
          Element v = ask(x);
          if (l.lt(v, eval(g, x))) {
            found = x;
            found_value = v;
            return true;
          }
          return false;
        });
      }
      if (!found) {
        throw DomainError("oracle disagrees at " + to_string(bound) +
                          " but at no finite vector below it");
      }
    }

    ++rounds;
    if (via_shortcut) {
      ++shortcut_rounds;
    } else {
      ++enumeration_rounds;
    }
    if (options.on_round) {
      options.on_round({rounds, *found, *found_value, via_shortcut});
    }
    g = g.with_point({*found, *found_value});
  }
}

}  // namespace hcrep
