#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sdepth/bounds.hpp"
#include "sdepth/error.hpp"
#include "sdepth/solver.hpp"
#include "support/corpus.hpp"
#include "support/examples.hpp"

namespace sdepth {
namespace {

using testing::prime_block;

const BoundResult* find(const std::vector<BoundResult>& all, const std::string& name, BoundTarget target) {
  for (const auto& b : all) {
    if (b.name == name && b.target == target) return &b;
  }
  return nullptr;
}

void expect_value(const BoundResult& b, std::int64_t value) {
  EXPECT_TRUE(b.applicable) << b.name << ": " << b.reason;
  EXPECT_EQ(b.effective, value) << b.name;
  EXPECT_FALSE(b.paper_ref.empty());
}

TEST(Binomial, ZeroBelowDiagonal) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(15, 4), 1365);
}

TEST(PrimeFormula, Values) {
  EXPECT_EQ(sdepth_prime(5, 5), 3u);
  EXPECT_EQ(sdepth_prime(6, 2), 5u);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(sdepth_prime(n, n), (n + 1) / 2);
}

TEST(AssPrimes, UpperBound) {
  expect_value(ub_assoc_primes(testing::six_var_example()), 4);
  expect_value(ub_assoc_primes(prime_block(6, 1, 6)), 3);
  expect_value(ub_assoc_primes(intersect_primes(primes_of(DisjointShape{5, 5, 5}))), 13);
}

TEST(TallPrime, Exact) {
  const Ring r(3);
  const auto path = MonomialIdeal::minimize_generators(r, {Monomial(r, {1, 1, 0}), Monomial(r, {0, 1, 1})});
  expect_value(exact_from_tall_prime(path, ass_primes(path)), 2);
  const auto m = prime_block(3, 1, 3);
  expect_value(exact_from_tall_prime(m, ass_primes(m)), 2);
  const Ring r4(4);
  const auto cycle = MonomialIdeal::minimize_generators(
      r4, {Monomial(r4, {1, 1, 0, 0}), Monomial(r4, {0, 1, 1, 0}), Monomial(r4, {0, 0, 1, 1}),
           Monomial(r4, {1, 0, 0, 1})});
  const auto b = exact_from_tall_prime(cycle, ass_primes(cycle));
  EXPECT_FALSE(b.applicable);
  EXPECT_FALSE(b.reason.empty());
}

TEST(TwoNewVariables, UpperBound) {
  const auto m = prime_block(2, 1, 2);
  expect_value(ub_two_new_vars(m, ass_primes(m)), 2);
  const Ring r(2);
  const auto xy = MonomialIdeal::minimize_generators(r, {Monomial(r, {1, 1})});
  expect_value(ub_two_new_vars(xy, ass_primes(xy)), 3);
}

TEST(Generators, LowerBound) {
  expect_value(lb_generators(testing::six_var_example()), 4);
  const Ring r(5);
  expect_value(lb_generators(MonomialIdeal::minimize_generators(r, {Monomial(r, {1, 2, 0, 0, 1})})), 5);
  for (std::size_t n = 1; n <= 7; ++n) expect_value(lb_generators(prime_block(n, 1, n)), (n + 1) / 2);
}

TEST(DisjointBlocks, LowerBound) {
  const std::vector<BlockSummary> eleven{{{1, 2, 3, 4, 5, 6}, 5, 4}, {{7, 8, 9, 10, 11}, 5, 3}};
  expect_value(lb_disjoint_blocks(eleven, 11), 7);
  const std::vector<BlockSummary> three{{{1, 2, 3, 4, 5}, 5, {}}, {{6, 7, 8, 9, 10}, 5, {}}, {{11, 12, 13, 14, 15}, 5, {}}};
  expect_value(lb_disjoint_blocks(three, 15), 9);
  const std::vector<BlockSummary> four{{{1, 2, 3, 4, 5}, 5, {}},
                                       {{6, 7, 8, 9, 10}, 5, {}},
                                       {{11, 12, 13, 14, 15}, 5, {}},
                                       {{16, 17}, 2, {}}};
  expect_value(lb_disjoint_blocks(four, 17), 10);
  const std::vector<BlockSummary> overlap{{{1, 2}, 1, {}}, {{2, 3}, 1, {}}};
  EXPECT_THROW(lb_disjoint_blocks(overlap, 3), InvalidArgument);
}

TEST(DisjointAss, LowerBound) {
  const auto three = intersect_primes(primes_of(DisjointShape{1, 2, 2}));
  expect_value(lb_ideal_disjoint_ass(ass_primes(three)), 3);
  const Ring r(1);
  const auto sq = MonomialIdeal::minimize_generators(r, {Monomial(r, {2})});
  expect_value(lb_ideal_disjoint_ass(ass_primes(sq)), 1);
}

TEST(DisjointPrimary, QuotientLowerBound) {
  const Ring r(3);
  const auto a = MonomialIdeal::minimize_generators(r, {Monomial(r, {2, 0, 0}), Monomial(r, {0, 1, 0})});
  const auto b = MonomialIdeal::minimize_generators(r, {Monomial(r, {0, 0, 3})});
  const std::vector<MonomialIdeal> two{a, b};
  expect_value(lb_quotient_disjoint_primary(two), 1);
  const std::vector<MonomialIdeal> one{a};
  expect_value(lb_quotient_disjoint_primary(one), 0);
  const std::vector<MonomialIdeal> shared{a, prime_block(3, 2, 2)};
  EXPECT_THROW(lb_quotient_disjoint_primary(shared), InvalidArgument);
}

TEST(DepthInfo, Values) {
  auto info = depth_bound_info(primes_of(DisjointShape{1, 2, 2}));
  ASSERT_EQ(info.size(), 2u);
  expect_value(info[0], 3);
  expect_value(info[1], 2);
  EXPECT_EQ(info[0].kind, BoundKind::info);
  const std::vector<PrimeIdeal> single{PrimeIdeal(Ring(2), {1, 2})};
  info = depth_bound_info(single);
  expect_value(info[0], 1);
  expect_value(info[1], 0);
  const Ring r(3);
  const std::vector<PrimeIdeal> triangle{PrimeIdeal(r, {1, 2}), PrimeIdeal(r, {1, 3}), PrimeIdeal(r, {2, 3})};
  EXPECT_FALSE(depth_bound_info(triangle)[0].applicable);
}

TEST(ThreeDisjointQuotient, Formulas) {
  expect_value(ub_quotient_e_q({1, 2, 2}), 3);
  expect_value(ub_quotient_e_q({2, 2, 2}), 3);
  expect_value(ub_quotient_e_q({1, 1, 1}), 2);

  expect_value(ub_quotient_improved({2, 3, 4}), 4);
  expect_value(ub_quotient_improved({1, 1, 1}), 2);
  const auto exc = ub_quotient_improved({1, 2, 5});
  EXPECT_FALSE(exc.applicable);
  EXPECT_NE(exc.reason.find("r odd"), std::string::npos);

  expect_value(lb_quotient_three({1, 2, 2}), 2);
  expect_value(lb_quotient_three({2, 2, 2}), 2);
  expect_value(lb_quotient_three({1, 1, 2}), 2);

  expect_value(exact_quotient_three({1, 2, 2}), 2);
  expect_value(exact_quotient_three({1, 3, 3}), 3);
  EXPECT_FALSE(exact_quotient_three({2, 2, 2}).applicable);
}

TEST(ThreeDisjointQuotient, ExceptionHygiene) {
  for (std::size_t r = 1; r <= 7; r += 2) {
    for (std::size_t q = r + 1; q <= 10; ++q) EXPECT_FALSE(ub_quotient_improved({r, r + 1, q}).applicable);
  }
}

TEST(ShapeValidation, RejectsBadParameters) {
  EXPECT_THROW(DisjointShape({3, 2, 1}).validate(), InvalidArgument);
  EXPECT_THROW(CircularShape({6, 2, 4}).validate(), InvalidArgument);
  EXPECT_THROW(FourPrimeShape({{1, 2, 3, 4}}).validate(), InvalidArgument);
}

TEST(Counting, ClosedForms) {
  const auto circ = ub_circular_three_primes({6, 4, 2});
  expect_value(circ, 3);
  EXPECT_EQ(circ.raw, Rational(2) + Rational(20, 12));
  expect_value(ub_circular_three_primes({3, 2, 1}), 2);

  expect_value(ub_overlapping_three_primes({6, 3, 2, 1, 4, 5}), 5);

  const auto disj = ub_disjoint_three_primes(5, 5, 5);
  expect_value(disj, 9);
  EXPECT_EQ(disj.raw, Rational(9));
  expect_value(ub_disjoint_three_primes(1, 1, 1), 3);

  expect_value(ub_chain_three_primes({10, 4, 4, 8, 6}), 7);
  expect_value(ub_chain_three_primes({8, 4, 2, 6, 5}), 5);

  expect_value(ub_disjoint_four_primes({{5, 5, 5, 2}}), 11);
  expect_value(ub_disjoint_four_primes({{1, 1, 1, 1}}), 4);
  const auto printed = ub_disjoint_four_primes({{5, 5, 5, 2}}, FourPrimeVariant::printed);
  EXPECT_EQ(printed.kind, BoundKind::info);
  EXPECT_EQ(printed.effective, 10);
  EXPECT_EQ(printed.raw, Rational(5) + Rational(690, 125));
}

TEST(Counting, GenericOnBuiltPosets) {
  expect_value(counting_ub_generic(build_ideal_poset(intersect_primes(primes_of(CircularShape{6, 4, 2})))), 3);
  expect_value(counting_ub_generic(build_ideal_poset(intersect_primes(primes_of(DisjointShape{5, 5, 5})))), 9);
  const Ring r(4);
  expect_value(counting_ub_generic(build_ideal_poset(MonomialIdeal::minimize_generators(r, {Monomial(r, {1, 1, 0, 0})}))), 4);
  const auto mixed = MonomialIdeal::minimize_generators(r, {Monomial(r, {1, 0, 0, 0}), Monomial(r, {0, 1, 1, 0})});
  EXPECT_FALSE(counting_ub_generic(build_ideal_poset(mixed)).applicable);
}

TEST(Counting, CircularClosedFormMatchesEnumeration) {
  for (std::size_t n = 3; n <= 9; ++n) {
    for (std::size_t t = 2; t < n; ++t) {
      for (std::size_t u = 1; u < t; ++u) {
        const CircularShape s{n, t, u};
        const auto generic = counting_ub_generic(build_ideal_poset(intersect_primes(primes_of(s))));
        EXPECT_EQ(ub_circular_three_primes(s).raw, generic.raw) << n << "," << t << "," << u;
      }
    }
  }
}

TEST(Counting, DisjointClosedFormMatchesEnumerationSmall) {
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t e = r; e <= 3; ++e) {
      for (std::size_t q = e; q <= 3; ++q) {
        const auto generic = counting_ub_generic(build_ideal_poset(intersect_primes(primes_of(DisjointShape{r, e, q}))));
        EXPECT_EQ(ub_disjoint_three_primes(r, e, q).raw, generic.raw);
      }
    }
  }
}

TEST(Shapes, Detection) {
  auto s = detect_shapes(primes_of(DisjointShape{1, 2, 3}, 2));
  ASSERT_TRUE(s.disjoint);
  EXPECT_EQ(*s.disjoint, (DisjointShape{1, 2, 3}));
  EXPECT_EQ(s.free_vars, 2u);
  EXPECT_TRUE(s.chains.empty());

  s = detect_shapes(primes_of(CircularShape{6, 4, 2}));
  ASSERT_TRUE(s.circular);
  EXPECT_FALSE(s.disjoint_supports);
  EXPECT_EQ(s.circular->n, 6u);

  // Relabeled circular shape: swap x1 and x6.
  const Ring r(6);
  const std::vector<PrimeIdeal> relabeled{PrimeIdeal(r, {6, 2, 3, 4}), PrimeIdeal(r, {3, 4, 5, 1}),
                                          PrimeIdeal(r, {5, 1, 6, 2})};
  EXPECT_TRUE(detect_shapes(relabeled).circular);

  s = detect_shapes(primes_of(ChainShape{10, 4, 4, 8, 6}));
  EXPECT_FALSE(s.chains.empty());

  const Ring r17(17);
  const std::vector<PrimeIdeal> four{PrimeIdeal(r17, {16, 17}), PrimeIdeal(r17, {1, 2, 3, 4, 5}),
                                     PrimeIdeal(r17, {6, 7, 8, 9, 10}), PrimeIdeal(r17, {11, 12, 13, 14, 15})};
  s = detect_shapes(four);
  ASSERT_TRUE(s.four);
  EXPECT_EQ(s.four->d, (std::array<std::size_t, 4>{5, 5, 5, 2}));
}

TEST(Blocks, FactorAndRestrict) {
  const auto eleven = testing::eleven_var_example();
  const auto blocks = factor_disjoint_blocks(eleven, {}, min_primes(eleven));
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].variables, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(restrict_to_block(blocks[0].ideal, blocks[0].variables), testing::six_var_example());
  const auto local = restrict_to_block(blocks[1].ideal, blocks[1].variables);
  EXPECT_EQ(local, prime_block(5, 1, 5));
}

TEST(Report, ElevenVariableExample) {
  const auto all = report_all(testing::eleven_var_example());
  const auto* b = find(all, "lb_disjoint_blocks", BoundTarget::ideal);
  ASSERT_NE(b, nullptr);
  EXPECT_TRUE(b->applicable);
  EXPECT_GE(b->effective, 7);
}

TEST(Report, ThreePowerBlocksDeriveExact) {
  const auto all = report_all(testing::power_blocks({5, 5, 5}));
  expect_value(*find(all, "lb_disjoint_blocks", BoundTarget::ideal), 9);
  expect_value(*find(all, "ub_disjoint_three_primes", BoundTarget::ideal), 9);
  expect_value(*find(all, "derived_exact", BoundTarget::ideal), 9);
}

TEST(Report, FourPowerBlocks) {
  const auto all = report_all(testing::power_blocks({5, 5, 5, 2}));
  expect_value(*find(all, "lb_disjoint_blocks", BoundTarget::ideal), 10);
  expect_value(*find(all, "ub_disjoint_four_primes", BoundTarget::ideal), 11);
  // The rank-counting bound on the radical is sharper than the closed form:
  // 4 + floor(1625 / 250) = 10.
  expect_value(*find(all, "counting_ub_generic", BoundTarget::ideal), 10);
  expect_value(*find(all, "derived_exact", BoundTarget::ideal), 10);

  ReportOptions printed;
  printed.four_prime_variant = FourPrimeVariant::printed;
  const auto alt = report_all(testing::power_blocks({5, 5, 5, 2}), printed);
  const auto* p = find(alt, "ub_disjoint_four_primes", BoundTarget::ideal);
  EXPECT_EQ(p->kind, BoundKind::info);
  EXPECT_EQ(best_bracket(alt, BoundTarget::ideal).upper, 10);
}

TEST(Report, MaximalIdeal) {
  const auto all = report_all(prime_block(6, 1, 6));
  expect_value(*find(all, "derived_exact", BoundTarget::ideal), 3);
}

TEST(Report, SortedAndAnnotated) {
  const auto all = report_all(intersect_primes(primes_of(DisjointShape{1, 2, 2})));
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].target, all[i].target);
  for (const auto& b : all) {
    EXPECT_FALSE(b.paper_ref.empty()) << b.name;
    if (!b.applicable) EXPECT_FALSE(b.reason.empty()) << b.name;
  }
}

TEST(Report, RejectsZeroAndUnit) {
  const Ring r(2);
  EXPECT_THROW(report_all(MonomialIdeal(r)), InvalidArgument);
  EXPECT_THROW(report_all(MonomialIdeal::minimize_generators(r, {Monomial(r)})), InvalidArgument);
}

TEST(Report, BlockwiseAssMatchesDirect) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto a = testing::random_ideal(rng, 1 + t % 3, 3, 3);
    const auto b = testing::random_ideal(rng, 1 + (t / 3) % 3, 3, 3);
    if (a.is_unit() || b.is_unit()) continue;
    const auto both = testing::disjoint_product(a, b);
    const auto all = report_all(both);
    const auto direct = ass_primes(both);
    EXPECT_EQ(find(all, "ub_assoc_primes", BoundTarget::ideal)->effective, ub_assoc_primes(both, direct).effective);
    EXPECT_EQ(find(all, "lb_ideal_disjoint_ass", BoundTarget::ideal)->applicable,
              lb_ideal_disjoint_ass(direct).applicable);
  }
}

void expect_sandwich(const MonomialIdeal& ideal) {
  const auto all = report_all(ideal);
  const auto up = static_cast<std::int64_t>(sdepth_exact_ideal(ideal).value);
  const auto down = static_cast<std::int64_t>(sdepth_exact_quotient(ideal).value);
  for (const auto& b : all) {
    if (!b.applicable || b.kind == BoundKind::info) continue;
    const std::int64_t exact = b.target == BoundTarget::ideal ? up : down;
    if (b.kind != BoundKind::upper) EXPECT_LE(b.effective, exact) << b.name << " " << ideal.to_string();
    if (b.kind != BoundKind::lower) EXPECT_GE(b.effective, exact) << b.name << " " << ideal.to_string();
  }
}

TEST(Sandwich, SquarefreeUpToThreeVariables) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& i : testing::all_squarefree_ideals(n)) expect_sandwich(i);
  }
}

TEST(Sandwich, SmallDisjointShapes) {
  for (std::size_t r = 1; r <= 2; ++r) {
    for (std::size_t e = r; e <= 2; ++e) {
      for (std::size_t q = e; q <= 2; ++q) expect_sandwich(intersect_primes(primes_of(DisjointShape{r, e, q})));
    }
  }
}

}  // namespace
}  // namespace sdepth
