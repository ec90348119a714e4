#include <gtest/gtest.h>

#include "halfflat/form_parser.hpp"
#include "halfflat/splitting.hpp"
#include "support.hpp"

namespace halfflat {
namespace {

using testing::e;

KForm f(const char* text) { return parse_form(text, 6); }

std::pair<int, int> h03_h04(const char* notation, const char* generator) {
  const LieAlgebra g = parse_notation(notation);
  const auto s = splitting_from_generator(g, f(generator));
  const HpqTable t = hpq(g, s);
  return {t.at(0, 3), t.at(0, 4)};
}

TEST(GeneratorSpace, Examples) {
  EXPECT_EQ(generator_space(parse_notation("0,0,12,13,23,14")), span({e(6, {1, 2})}));
  EXPECT_EQ(generator_space(parse_notation("0,0,0,12,13,23")), span({e(6, {1, 2}), e(6, {1, 3}), e(6, {2, 3})}));
  EXPECT_TRUE(generator_space(parse_notation("0,0,12,13,14,34+52")).is_zero());
  EXPECT_TRUE(generator_space(parse_notation("0,0,0,0,0,0")).is_whole());
  EXPECT_EQ(generator_space(parse_notation("0,0,0,0,0,0")).dim(), 15);
  EXPECT_THROW(generator_space(parse_notation("0,12,13,14,15,16")), DomainError);
}

// Independent route: every simple element of the solution space yields a
// coherent splitting, checked through the generator-level definition.
TEST(GeneratorSpace, SimpleElementsAreCoherent) {
  for (const char* notation : {"0,0,0,12,13,23", "0,0,0,0,12,13", "0,0,0,0,0,12+34", "0,0,0,0,13-24,14+23"}) {
    const LieAlgebra g = parse_notation(notation);
    for (const KForm& alpha : generator_space(g).basis()) {
      if (!is_simple(alpha)) continue;
      const auto [xi, zeta] = *factor_simple(alpha);
      EXPECT_TRUE(is_coherent(g, span({xi, zeta}))) << notation << " " << alpha;
    }
  }
  // e^{34} is simple but not a solution for (0,0,0,12,13,23): V1 = <e^3,e^4> is not coherent.
  const LieAlgebra g = parse_notation("0,0,0,12,13,23");
  EXPECT_FALSE(is_coherent(g, span({KForm::generator(6, 3), KForm::generator(6, 4)})));
  EXPECT_THROW(splitting_from_generator(g, e(6, {3, 4})), IncoherentSplitting);
}

TEST(SplittingFromGenerator, Examples) {
  const LieAlgebra g = parse_notation("0,0,12,13,23,14");
  const auto s = splitting_from_generator(g, e(6, {1, 2}));
  EXPECT_EQ(s.v1(), span({KForm::generator(6, 1), KForm::generator(6, 2)}));
  EXPECT_EQ(s.v2(), span({KForm::generator(6, 3), KForm::generator(6, 4), KForm::generator(6, 5), KForm::generator(6, 6)}));
  EXPECT_EQ(s.rank(), 2);

  const LieAlgebra solvable = parse_notation("0,12,13,14,15,16");
  const auto t = make_splitting(solvable, span({KForm::generator(6, 1), KForm::generator(6, 2)}));
  EXPECT_EQ(t.v2().dim(), 4);
  EXPECT_TRUE(is_coherent(solvable, t.v1()));

  EXPECT_THROW(splitting_from_generator(g, e(6, {1, 2}) + e(6, {3, 4})), std::invalid_argument);
  EXPECT_THROW(splitting_from_generator(g, KForm(6, 2)), std::invalid_argument);
  EXPECT_THROW(make_splitting(g, span({KForm::generator(6, 1), KForm::generator(6, 2)}),
                              span({KForm::generator(6, 1), KForm::generator(6, 4), KForm::generator(6, 5),
                                    KForm::generator(6, 6)})),
               std::invalid_argument);
}

void expect_double_complex(const CoherentSplitting& s) {
  const SplitDifferential d = split_d(s.algebra(), s);
  for (int p = 0; p <= d.rank(); ++p)
    for (int q = 0; q <= d.corank(); ++q) {
      EXPECT_TRUE((d.delta1(p + 1, q) * d.delta1(p, q)).is_zero());
      EXPECT_TRUE((d.delta2(p + 2, q - 1) * d.delta2(p, q)).is_zero());
      Matrix a = d.delta1(p + 2, q - 1) * d.delta2(p, q);
      Matrix b = d.delta2(p + 1, q) * d.delta1(p, q);
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_TRUE((a.at(i, j) + b.at(i, j)).is_zero());
    }
}

TEST(SplitD, DoubleComplexIdentities) {
  expect_double_complex(splitting_from_generator(parse_notation("0,0,0,12,14,15+23"), e(6, {1, 2})));
  expect_double_complex(splitting_from_generator(parse_notation("0,0,12,13,23,14-25"), e(6, {1, 2})));
  expect_double_complex(splitting_from_generator(parse_notation("0,0,0,0,13-24,14+23"), e(6, {1, 2})));
  const LieAlgebra solvable = parse_notation("0,12,13,14,15,16");
  const auto s = make_splitting(solvable, span({KForm::generator(6, 1), KForm::generator(6, 2)}));
  expect_double_complex(s);
  // delta1 on L^{0,1} is injective.
  EXPECT_EQ(rank(split_d(solvable, s).delta1(0, 1)), 4u);
  const LieAlgebra abelian = parse_notation("0,0,0,0,0,0");
  const auto a = splitting_from_generator(abelian, e(6, {1, 2}));
  const SplitDifferential d = split_d(abelian, a);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 4; ++q) {
      EXPECT_TRUE(d.delta1(p, q).is_zero());
      EXPECT_TRUE(d.delta2(p, q).is_zero());
    }
}

TEST(Hpq, WorkedExamples) {
  EXPECT_EQ(h03_h04("0,0,0,0,12,13", "e12"), std::make_pair(2, 0));
  EXPECT_EQ(h03_h04("0,0,0,0,12,13", "e14"), std::make_pair(2, 1));
  EXPECT_EQ(h03_h04("0,0,0,0,12,13", "e23"), std::make_pair(3, 1));
  EXPECT_EQ(h03_h04("0,0,0,12,13,14", "e12"), std::make_pair(0, 0));
  EXPECT_EQ(h03_h04("0,0,0,12,13,14", "e13"), std::make_pair(2, 0));

  const LieAlgebra solvable = parse_notation("0,12,13,14,15,16");
  const HpqTable t = hpq(solvable, make_splitting(solvable, span({KForm::generator(6, 1), KForm::generator(6, 2)})));
  // h^{0,0} = b_0 = 1 for every splitting; delta1 is injective on L^{0,q} for q >= 1.
  EXPECT_EQ(t.at(0, 0), 1);
  for (int q = 1; q <= 4; ++q) EXPECT_EQ(t.at(0, q), 0) << q;
  EXPECT_TRUE(t.sums_to_betti());
}

TEST(Hpq, IndependentOfComplement) {
  const LieAlgebra g = parse_notation("0,0,0,12,14,15+23");
  const Subspace v1 = span({KForm::generator(6, 1), KForm::generator(6, 2)});
  const auto a = make_splitting(g, v1);
  const auto b = make_splitting(g, v1,
                                span({f("e3+e1"), f("e4-2*e2+e3"), f("e5+e6"), f("e6+1/2*e1")}));
  EXPECT_EQ(hpq(g, a).h, hpq(g, b).h);
  EXPECT_EQ(e1_term(g, a).e2, e1_term(g, b).e2);
}

TEST(E1, Table2Bases) {
  const LieAlgebra g = parse_notation("0,0,0,12,14,24");
  auto t = e1_term(g, splitting_from_generator(g, e(6, {1, 2})));
  EXPECT_EQ(t.e1_02, span({e(6, {3, 4}), e(6, {4, 5}), e(6, {4, 6})}));

  const LieAlgebra h = parse_notation("0,0,12,13,14,15");
  t = e1_term(h, splitting_from_generator(h, e(6, {1, 2})));
  EXPECT_EQ(t.e1_02, span({e(6, {3, 4}), f("-e36+e45")}));

  const LieAlgebra abelian = parse_notation("0,0,0,0,0,0");
  t = e1_term(abelian, splitting_from_generator(abelian, e(6, {1, 2})));
  EXPECT_EQ(t.e1_02.dim(), 6);
  EXPECT_EQ(t.e1_at(0, 2), 6);
}

TEST(Prop2, ClosedFormulas) {
  LieAlgebra g = parse_notation("0,0,0,0,12,15");
  auto s = splitting_from_generator(g, e(6, {1, 2}));
  EXPECT_EQ(prop2_h03(g, s), 0);
  EXPECT_EQ(e1_term(g, s).e1_02.dim(), 4);
  EXPECT_TRUE(prop2_h04_zero(g, s));

  g = parse_notation("0,0,0,12,13,14");
  s = splitting_from_generator(g, e(6, {1, 2}));
  EXPECT_EQ(prop2_h03(g, s), 0);
  EXPECT_TRUE(prop2_h04_zero(g, s));

  g = parse_notation("0,0,0,0,12,13");
  s = splitting_from_generator(g, e(6, {1, 4}));
  EXPECT_FALSE(prop2_h04_zero(g, s));
  EXPECT_EQ(hpq(g, s).at(0, 4), 1);

  const LieAlgebra solvable = parse_notation("0,12,13,14,15,16");
  const auto t = make_splitting(solvable, span({KForm::generator(6, 1), KForm::generator(6, 2)}));
  EXPECT_THROW(prop2_h03(solvable, t), DomainError);
}

TEST(Prop2, IdentitiesOnManySplittings) {
  for (const char* notation : {"0,0,0,0,12,13", "0,0,0,12,13,14", "0,0,12,13,23,14", "0,0,0,12,14,15+23",
                               "0,0,0,0,13-24,14+23", "0,0,0,0,0,12+34", "0,0,0,0,0,0", "0,0,0,12,13,24"}) {
    const LieAlgebra g = parse_notation(notation);
    const Subspace space = generator_space(g);
    std::vector<KForm> candidates = space.basis();
    const auto basis = space.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) candidates.push_back(basis[i] - basis[j]);
    for (const auto& alpha : candidates) {
      if (!is_simple(alpha)) continue;
      const auto s = splitting_from_generator(g, alpha);
      const auto violations = check_proposition2(g, s);
      EXPECT_TRUE(violations.empty()) << notation << " " << alpha << ": " << violations.front();
    }
  }
}

TEST(Canonical, SameCohomology) {
  for (const char* notation : {"0,0,0,12,13,24", "0,0,0,12,13,14"}) {
    const HpqTable t = canonical_hpq(parse_notation(notation));
    EXPECT_EQ(t.rank, 3);
    EXPECT_EQ(t.at(0, 2), 0);
    EXPECT_EQ(t.at(1, 1), 5);
    EXPECT_EQ(t.at(2, 0), 1);
    EXPECT_EQ(t.at(0, 3), 0);
    EXPECT_EQ(t.at(1, 2), 4);
    EXPECT_TRUE(t.satisfies_duality());
    EXPECT_TRUE(t.sums_to_betti());
  }
  EXPECT_EQ(canonical_hpq(parse_notation("0,0,0,12,13,24")).h, canonical_hpq(parse_notation("0,0,0,12,13,14")).h);
  EXPECT_THROW(canonical_hpq(parse_notation("0,0,12,13,14,34+52")), DomainError);
  EXPECT_THROW(canonical_hpq(parse_notation("23,-13,12")), DomainError);
  const HpqTable abelian = canonical_hpq(parse_notation("0,0,0,0,0,0"));
  EXPECT_EQ(abelian.rank, 6);
  EXPECT_EQ(abelian.at(3, 0), 20);
}

}  // namespace
}  // namespace halfflat
