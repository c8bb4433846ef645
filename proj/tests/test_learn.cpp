#include <gtest/gtest.h>

#include "hcrep/commutator.hpp"
#include "hcrep/learn.hpp"
#include "support/generators.hpp"

using namespace hcrep;
using namespace hcrep::testing;

TEST(Oracle, FromRep) {
  Example ex = example("div52");
  Oracle o = oracle_from_rep(ex.rep);
  EXPECT_EQ(o({29, kInf}), ex.lattice->element("26"));
  EXPECT_EQ(o(ExtVec(NatVec{30, 20})), eval(ex.rep, {30, 20}));
  EXPECT_EQ(o(all_infinity(2)), ex.lattice->element("2"));
  EXPECT_THROW(o(ExtVec{1, 2, 3}), DomainError);
}

TEST(Oracle, RejectsForeignAnswers) {
  auto l = std::make_shared<const Lattice>(lattices::chain(2));
  Oracle o(l, 1, [](const ExtVec&) { return Element(7); });
  EXPECT_THROW(o(ExtVec{0}), DomainError);
}

TEST(Learn, Div52) {
  Example ex = example("div52");
  LearnResult r = learn(oracle_from_rep(ex.rep));
  EXPECT_TRUE(equal_fn(r.learned, ex.rep));
  EXPECT_TRUE(check_complete(ex.rep, r.complete_rep));
  EXPECT_EQ(r.rounds, r.shortcut_rounds + r.enumeration_rounds);
  EXPECT_GT(r.queries, 0u);
}

TEST(Learn, ConstantTopNeedsNoRounds) {
  auto l = std::make_shared<const Lattice>(lattices::chain(3));
  LearnResult r = learn(oracle_from_rep(Rep(l, 2)));
  EXPECT_TRUE(r.learned.empty());
  EXPECT_EQ(r.rounds, 0u);
}

TEST(Learn, AlgebraB) {
  Example b = example("B");
  LearnResult r = learn(oracle_from_rep(b.rep));
  const Lattice& l = *b.lattice;
  const Element zero = l.element("0"), alpha = l.element("alpha"),
                one = l.element("1");
  std::vector<ExtPoint> h = {{{0, 0, 2}, alpha}, {{0, 1, 1}, zero},
                             {{0, 2, 0}, zero},  {{1, 0, 0}, zero},
                             {{0, 1, 0}, alpha}, {{0, 0, 1}, one},
                             {{0, 0, kInf}, alpha}, {all_infinity(3), zero}};
  for (const auto& p : h) EXPECT_EQ(eval_ext(r.learned, p.vec), p.value) << p.vec;
  EXPECT_TRUE(equal_fn(r.learned, b.rep));
}

TEST(Learn, RoundLimit) {
  Example ex = example("div52");
  LearnOptions opts;
  opts.max_rounds = 1;
  EXPECT_THROW(learn(oracle_from_rep(ex.rep), opts), DomainError);
  opts.max_rounds = 0;
  EXPECT_THROW(learn(oracle_from_rep(ex.rep), opts), DomainError);
}

TEST(Learn, InconsistentOracleHitsTheSearchGuard) {
  // bottom at every point with an infinite coordinate, top elsewhere
  auto l = std::make_shared<const Lattice>(lattices::chain(2));
  Oracle o(l, 1, [&](const ExtVec& x) {
    return x.is_finite() ? l->top() : l->bottom();
  });
  LearnOptions opts;
  opts.max_enumeration = 1000;
  EXPECT_THROW(learn(o, opts), DomainError);
}

TEST(LearnProperties, RandomTargets) {
  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    auto l = random_lattice(rng);
    const std::size_t d = pick(rng, 1, 3);
    Rep target = random_rep(rng, l, d);
    Rep seen(l, d);
    LearnOptions opts;
    opts.on_round = [&](const LearnStep& s) {
      // each round strictly lowers F_G at the new point, staying on the graph
      EXPECT_TRUE(l->lt(s.value, eval(seen, s.counterexample)));
      EXPECT_EQ(s.value, eval(target, s.counterexample));
      seen = seen.with_point({s.counterexample, s.value});
    };
    LearnResult r = learn(oracle_from_rep(target), opts);
    EXPECT_TRUE(equal_fn(r.learned, target));
    EXPECT_EQ(r.learned, seen);
    for (const auto& p : r.learned.points()) EXPECT_EQ(eval(target, p.vec), p.value);
  }
}
