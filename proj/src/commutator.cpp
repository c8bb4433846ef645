#include "hcrep/commutator.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "hcrep/hc.hpp"

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

std::vector<Element> sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void print_list(std::ostream& os, const Lattice& l,
                std::span<const Element> v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << l.name(v[k]);
  }
}

}  // namespace

CommEquality::CommEquality(std::vector<Element> a, Element r)
    : args(sorted(std::move(a))), rhs(r) {}

ExtCommEquality::ExtCommEquality(std::vector<Element> s, std::vector<Element> a,
                                 Element r)
    : scope(sorted(std::move(s))), args(sorted(std::move(a))), rhs(r) {
  scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
}

NatVec encode_args(const Lattice& l, std::span<const Element> args) {
  NatVec v(l.size());
  for (Element a : args) {
    if (!l.contains(a)) {
      throw DomainError("commutator argument " + std::to_string(a.index()) +
                        " is not in the lattice");
    }
    ++v[a.index()];
  }
  return v;
}

std::vector<Element> expand_args(const NatVec& v) {
  std::vector<Element> out;
  for (std::size_t j = 0; j < v.dim(); ++j) {
    out.insert(out.end(), v[j], Element(j));
  }
  return out;
}

Element eval_commutator(const Rep& g, std::span<const Element> args) {
  require_encoding(g, "eval_commutator");
  return eval(g, encode_args(g.lattice(), args));
}

Element eval_extended(const Rep& g, std::span<const Element> scope,
                      std::span<const Element> args) {
  require_encoding(g, "eval_extended");
  ExtVec x(encode_args(g.lattice(), args));
  for (Element s : scope) {
    if (!g.lattice().contains(s)) {
      throw DomainError("scope element " + std::to_string(s.index()) +
                        " is not in the lattice");
    }
    x[s.index()] = kInf;
  }
  return eval_ext(g, x);
}

std::vector<CommEquality> to_equalities(const Rep& g, bool reduced) {
  require_encoding(g, "to_equalities");
  Rep c = canonical(g);
  std::vector<CommEquality> all;
  for (const auto& p : c.points()) all.emplace_back(expand_args(p.vec), p.value);
  if (!reduced) return all;

  if (!check_hc1(g) || !check_hc2(g)) {
    throw DomainError(
        "reduced equalities need a function satisfying HC1 and HC2");
  }
  auto entails = [&](const std::vector<CommEquality>& eqs) {
    return equal_fn(largest_from_equalities(g.lattice_ptr(), eqs, true).rep, c);
  };
  std::vector<CommEquality> kept = all;
  for (const auto& e : all) {
    std::vector<CommEquality> trial;
    for (const auto& k : kept) {
      if (!(k == e)) trial.push_back(k);
    }
    if (entails(trial)) kept = std::move(trial);
  }
  return kept;
}

std::vector<ExtCommEquality> to_extended_equalities(const Rep& g,
                                                    std::size_t grid_limit) {
  require_encoding(g, "to_extended_equalities");
  std::vector<ExtCommEquality> out;
  const ExtRep h = complete(g, grid_limit);
  for (const auto& p : h.points()) {
    std::vector<Element> scope;
    std::vector<Element> args;
    for (std::size_t j = 0; j < p.vec.dim(); ++j) {
      if (p.vec[j].is_infinite()) {
        scope.emplace_back(j);
      } else {
        args.insert(args.end(), p.vec[j].value(), Element(j));
      }
    }
    out.emplace_back(std::move(scope), std::move(args), p.value);
  }
  return out;
}

bool satisfies(const Rep& g, const CommEquality& eq) {
  return eval_commutator(g, eq.args) == eq.rhs;
}

bool satisfies(const Rep& g, const ExtCommEquality& eq) {
  return eval_extended(g, eq.scope, eq.args) == eq.rhs;
}

LargestResult largest_from_equalities(LatticePtr lattice,
                                      const std::vector<CommEquality>& eqs,
                                      bool assume_hc12) {
  if (!lattice) throw DomainError("equalities need a lattice");
  const std::size_t m = lattice->size();
  std::vector<Point> pts;
  for (const auto& e : eqs) {
    if (!lattice->contains(e.rhs)) {
      throw DomainError("right-hand side " + std::to_string(e.rhs.index()) +
                        " is not in the lattice");
    }
    pts.push_back({encode_args(*lattice, e.args), e.rhs});
  }
  Rep rep(lattice, m, std::move(pts));
  if (assume_hc12) rep = largest_hc12(rep);
  std::vector<bool> attained;
  for (const auto& e : eqs) attained.push_back(satisfies(rep, e));
  return {std::move(rep), std::move(attained)};
}

std::vector<std::string> example_names() { return {"div52", "B", "B7"}; }

Example example(std::string_view name) {
  if (name == "div52") {
    auto l = std::make_shared<const Lattice>(lattices::divisors(52));
    Rep g(l, 2,
          {{{10, 20}, l->element("26")}, {{30, 5}, l->element("4")}});
    return {l, std::move(g)};
  }
  if (name == "B" || name == "B7") {
    auto l = std::make_shared<const Lattice>(
        lattices::chain({"0", "alpha", "1"}));
    const Element zero = l->element("0");
    const Element alpha = l->element("alpha");
    std::vector<Point> pts = {
        {{0, 0, 0}, l->top()}, {{0, 1, 0}, alpha}, {{0, 0, 2}, alpha},
        {{1, 0, 0}, zero},     {{0, 1, 1}, zero},  {{0, 2, 0}, zero},
    };
    if (name == "B7") pts.push_back({{0, 0, 8}, zero});
    return {l, Rep(l, 3, std::move(pts))};
  }
  throw DomainError("unknown example '" + std::string(name) + "'");
}

std::string format(const Lattice& l, const CommEquality& eq) {
  std::ostringstream os;
  os << '[';
  print_list(os, l, eq.args);
  os << "] = " << l.name(eq.rhs);
  return os.str();
}

std::string format(const Lattice& l, const ExtCommEquality& eq) {
  std::ostringstream os;
  os << "[{";
  print_list(os, l, eq.scope);
  os << "}; ";
  if (eq.args.empty()) {
    os << "Λ";
  } else {
    print_list(os, l, eq.args);
  }
  os << "] = " << l.name(eq.rhs);
  return os.str();
}

}  // namespace hcrep
