#include "nodal/curve.hpp"
#include "nodal/errors.hpp"

#include "support/property.hpp"

#include <gtest/gtest.h>

namespace nodal {
namespace {

using testing::for_all;

Poly P(std::initializer_list<std::int64_t> c) { return Poly::from_coefficients(c); }

const Poly kF = P({-1, 0, 1});
const WeylOp d = WeylOp::d();

CurveRing second_curve() { return new_curve({Poly::t(), P({-1, 1})}); }

TEST(NewCurve, Examples) {
  const CurveRing nodal = new_curve({P({-1, 1}), P({1, 1})});
  EXPECT_EQ(nodal.f(), kF);
  EXPECT_EQ(nodal.r(), 2u);
  EXPECT_THROW(new_curve({P({-1, 1}), P({-1, 1})}), CurveError);
  const CurveRing three = new_curve({Poly::t(), P({-1, 1}), P({1, 1})});
  EXPECT_EQ(three.f(), P({0, -1, 0, 1}));
  EXPECT_EQ(three.r(), 3u);
}

TEST(NewCurve, RejectsDegenerateInput) {
  try {
    new_curve({P({-1, 1})});
    FAIL() << "expected CurveError";
  } catch (const CurveError& e) {
    EXPECT_NE(std::string(e.what()).find("r >= 2 required"), std::string::npos);
  }
  EXPECT_THROW(new_curve({}), CurveError);
  EXPECT_THROW(new_curve({Poly(3), P({-1, 1})}), CurveError);
  EXPECT_THROW(new_curve({Poly(), P({-1, 1})}), CurveError);
  try {
    new_curve({P({-1, 0, 1}), P({1, 1})});
    FAIL() << "expected CurveError";
  } catch (const CurveError& e) {
    EXPECT_NE(std::string(e.what()).find("factors not pairwise coprime"), std::string::npos);
  }
}

TEST(NewCurve, NormalizesMonicIntoFirstFactor) {
  const CurveRing c = new_curve({P({-2, 2}), P({3, 3})});
  EXPECT_EQ(c.f(), kF);
  EXPECT_EQ(c.factors()[0] * c.factors()[1], c.f());
  EXPECT_EQ(c.factors()[1], P({3, 3}));
}

TEST(NewCurve, IrreducibilityModes) {
  // t^2 and t - 1 are coprime; t^2 is reducible.
  const CurveRing loose = new_curve({Poly::monomial(2), P({-1, 1})});
  EXPECT_EQ(loose.irreducibility()[0], Irreducibility::Reducible);
  EXPECT_FALSE(loose.warnings().empty());
  EXPECT_THROW(new_curve({Poly::monomial(2), P({-1, 1})}, {.strict_irreducible = true}), CurveError);
  // t^2 + 1 has no rational root.
  const CurveRing strict = new_curve({P({1, 0, 1}), P({-1, 1})}, {.strict_irreducible = true});
  EXPECT_TRUE(strict.warnings().empty());
}

TEST(CheckIrreducible, RationalRootTest) {
  EXPECT_EQ(check_irreducible(P({-1, 1})), Irreducibility::Verified);
  EXPECT_EQ(check_irreducible(P({-2, 0, 1})), Irreducibility::Verified);     // t^2 - 2
  EXPECT_EQ(check_irreducible(P({-4, 0, 9})), Irreducibility::Reducible);    // (3t-2)(3t+2)
  EXPECT_EQ(check_irreducible(P({-2, 0, 0, 1})), Irreducibility::Verified);  // t^3 - 2
  EXPECT_EQ(check_irreducible(P({-1, 0, 0, 8})), Irreducibility::Reducible); // root 1/2
  EXPECT_EQ(check_irreducible(Poly(Rational(1, 3)) + Poly::monomial(3, Rational(1, 2))),
            Irreducibility::Verified);                                     // t^3/2 + 1/3
  EXPECT_EQ(check_irreducible(P({3, 0, 0, 0, 1})), Irreducibility::Unchecked);
}

TEST(IdealPowerMember, Examples) {
  const CurveRing c = nodal_cubic_preset();
  const Poly p = P({0, -2, 0, 2});
  EXPECT_TRUE(ideal_power_member(c, p, 1));
  EXPECT_FALSE(ideal_power_member(c, p, 2));
  EXPECT_TRUE(ideal_power_member(c, Poly::t(), 0));
  EXPECT_TRUE(ideal_power_member(c, kF * kF * kF, 3));
  EXPECT_TRUE(ideal_power_member(c, Poly(), 5));
}

TEST(SubalgebraMember, Examples) {
  const CurveRing c = nodal_cubic_preset();
  EXPECT_EQ(subalgebra_member(c, P({4, 0, 1})), Rational(5));
  EXPECT_EQ(subalgebra_member(c, kF), Rational(0));
  EXPECT_FALSE(subalgebra_member(c, Poly::t()).has_value());
}

TEST(SubalgebraMember, ConsistentWithIdealMembership) {
  const CurveRing c = nodal_cubic_preset();
  for_all(31, 300, [&](SampleSource& s, int k) {
    const Poly p = k % 2 == 0 ? s.a_element(c, 5) : s.poly(7);
    const auto lambda = subalgebra_member(c, p);
    if (lambda) {
      EXPECT_TRUE(ideal_power_member(c, p - Poly(*lambda), 1));
    } else {
      // No constant shift lands in I: the remainder mod f is nonconstant.
      EXPECT_FALSE(poly_divrem(p, c.f()).remainder.is_constant());
    }
  });
}

TEST(DaDecompose, Examples) {
  const CurveRing c = nodal_cubic_preset();
  const auto dec = da_decompose(c, weyl_mul(from_poly(kF), d));
  ASSERT_TRUE(dec);
  EXPECT_EQ(dec->lambda, Rational(0));
  EXPECT_EQ(dec->dprime, d);
  EXPECT_FALSE(da_decompose(c, d));
  const auto scalar = da_decompose(c, WeylOp(5));
  ASSERT_TRUE(scalar);
  EXPECT_EQ(scalar->lambda, Rational(5));
  EXPECT_TRUE(scalar->dprime.is_zero());
  // t is order 0 but t mod f is not constant.
  EXPECT_FALSE(da_decompose(c, WeylOp::t()));
}

TEST(DaDecompose, RoundTrip) {
  for (const CurveRing& c : {nodal_cubic_preset(), second_curve()}) {
    for_all(32, 300, [&](SampleSource& s, int) {
      const WeylOp op = s.da_element(c, 5, 5);
      const auto dec = da_decompose(c, op);
      ASSERT_TRUE(dec);
      EXPECT_EQ(recompose(c, *dec), op);
    });
  }
}

TEST(DaDecompose, ClosedUnderProduct) {
  const CurveRing c = nodal_cubic_preset();
  for_all(33, 150, [&](SampleSource& s, int) {
    const WeylOp a = s.da_element(c, 3, 3);
    const WeylOp b = s.da_element(c, 3, 3);
    EXPECT_TRUE(da_decompose(c, weyl_mul(a, b)).has_value());
  });
}

TEST(IdealStability, RandomOperatorsPreserveI) {
  for (const CurveRing& c : {nodal_cubic_preset(), second_curve()}) {
    for_all(34, 500, [&](SampleSource& s, int) {
      const WeylOp op = s.da_element(c, 6, 6);
      const Poly g = s.ideal_element(c, 1, 6);
      EXPECT_TRUE(ideal_power_member(c, weyl_apply(op, g), 1));
    });
  }
}

TEST(MapsAIntoI, Examples) {
  const CurveRing c = nodal_cubic_preset();
  const WeylOp f_d = weyl_mul(from_poly(kF), d);
  EXPECT_TRUE(maps_A_into_I(c, f_d));
  EXPECT_FALSE(maps_A_into_I(c, WeylOp(1)));
  EXPECT_FALSE(maps_A_into_I(c, WeylOp(3) + f_d));
  try {
    maps_A_into_I(c, d);
    FAIL() << "expected MembershipError";
  } catch (const MembershipError& e) {
    EXPECT_NE(std::string(e.what()).find("operator not in D_A"), std::string::npos);
  }
}

TEST(MapsAIntoI, AgreesWithBoundedSpanningCheck) {
  const CurveRing c = nodal_cubic_preset();
  const auto span = a_spanning_set(c, 10);
  for_all(35, 200, [&](SampleSource& s, int k) {
    const WeylOp op = s.da_element(c, 4, 4, k % 2 == 0);
    const bool bounded = std::all_of(span.begin(), span.end(), [&](const Poly& a) {
      return ideal_power_member(c, weyl_apply(op, a), 1);
    });
    EXPECT_EQ(maps_A_into_I(c, op), bounded);
  });
}

TEST(ASpanningSet, Examples) {
  const CurveRing c = nodal_cubic_preset();
  EXPECT_EQ(a_spanning_set(c, 0), (std::vector<Poly>{Poly(1), kF}));
  EXPECT_EQ(a_spanning_set(c, 1), (std::vector<Poly>{Poly(1), kF, P({0, -1, 0, 1})}));
  EXPECT_EQ(a_spanning_set(c, 2),
            (std::vector<Poly>{Poly(1), kF, P({0, -1, 0, 1}), P({0, 0, -1, 0, 1})}));
}

TEST(NodalCubicPreset, EmbeddingData) {
  const CurveRing c = nodal_cubic_preset();
  const PlaneEmbedding e = nodal_cubic_embedding();
  EXPECT_EQ(c.f(), kF);
  EXPECT_EQ(e.x_image, kF);
  EXPECT_EQ(subalgebra_member(c, e.x_image), Rational(0));
  EXPECT_EQ(subalgebra_member(c, e.y_image), Rational(0));
  EXPECT_EQ(e.y_image, P({0, -1, 0, 1}));
}

TEST(VerifyEmbedding, Examples) {
  const CurveRing c = nodal_cubic_preset();
  EXPECT_TRUE(verify_embedding(c, kF, P({0, -1, 0, 1})));
  EXPECT_FALSE(verify_embedding(c, kF, kF));
  EXPECT_TRUE(verify_embedding(c, Poly(), Poly()));
  // (t^2, t^3) satisfies y^2 = x^3 but not the nodal relation.
  EXPECT_FALSE(verify_embedding(c, Poly::monomial(2), Poly::monomial(3)));
}

}  // namespace
}  // namespace nodal
