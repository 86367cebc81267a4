#include "gcdlab/heights.hpp"
#include "gcdlab/multipoly.hpp"
#include "gcdlab/rng.hpp"

#include <gtest/gtest.h>

using namespace gcdlab;

namespace {

LogReal L(long n) { return LogReal::log_of(Integer(n)); }
const Place inf = Place::archimedean();

}  // namespace

TEST(Height, Scalars) {
    EXPECT_TRUE(height(1).is_zero());
    EXPECT_TRUE(height(0).is_zero());
    EXPECT_EQ(height(Rational(3, 2)), L(3));
    EXPECT_EQ(height(-5), L(5));
    EXPECT_EQ(height(Rational(-7, 12)), L(12));
}

TEST(Height, PowerRule) {
    for (const Rational x : {Rational(3, 2), Rational(-5, 9), Rational(12)}) {
        for (long n = -4; n <= 4; ++n) {
            if (n == 0) continue;
            EXPECT_EQ(height(pow(x, n)), height(x) * Rational(std::abs(n)));
        }
    }
}

TEST(LocalHeight, Examples) {
    EXPECT_EQ(local_height(Rational(3, 2), Place::finite(2)), L(2));
    EXPECT_TRUE(local_height(Rational(3, 2), Place::finite(3)).is_zero());
    EXPECT_EQ(local_height(Rational(3, 2), inf), L(3) - L(2));
    EXPECT_TRUE(local_height(0, inf).is_zero());
}

TEST(ProjHeight, Examples) {
    EXPECT_TRUE(proj_height(ProjPoint({1, 1})).is_zero());
    EXPECT_EQ(proj_height(ProjPoint({2, 3})), L(3));
    EXPECT_EQ(proj_height(ProjPoint({1, Rational(3, 2)})), L(3));
    EXPECT_EQ(proj_height(ProjPoint({Rational(-4), Rational(6)})), L(3));
    EXPECT_THROW(ProjPoint({0, 0}), DomainError);
    EXPECT_THROW(ProjPoint(std::vector<Rational>{}), DomainError);
}

TEST(ProjPoint, Canonical) {
    const ProjPoint P({Rational(-1, 2), Rational(3, 4)});
    EXPECT_EQ(P.coords(), (std::vector<Integer>{2, -3}));
    EXPECT_EQ(P, ProjPoint({Rational(-2), Rational(3)}));
    EXPECT_EQ(ProjPoint({0, -5}).coords(), (std::vector<Integer>{0, 1}));
}

TEST(TupleHeights, Examples) {
    EXPECT_EQ(tuple_heights(TorusPoint({2, 3})).height, L(3));
    EXPECT_TRUE(tuple_heights(TorusPoint({1, 1})).height.is_zero());
    const auto t = tuple_heights(TorusPoint({Rational(1, 2), Rational(1, 3)}));
    EXPECT_EQ(t.height, L(2) + L(3));
    EXPECT_EQ(t.local.at(Place::finite(2)), L(2));
    EXPECT_EQ(t.local.at(Place::finite(3)), L(3));
    EXPECT_EQ(t.standard_height, L(2) + L(3));
    EXPECT_EQ(tuple_heights(TorusPoint({2, 3})).standard_height, L(6));
    EXPECT_THROW(TorusPoint({1, 0}), DomainError);
}

TEST(HSbar, Examples) {
    const PlaceSet S2 = PlaceSet::with_archimedean({2});
    EXPECT_TRUE(h_sbar(8, S2).is_zero());
    EXPECT_EQ(h_sbar(3072, S2), L(3));
    EXPECT_EQ(h_sbar(6, PlaceSet::with_archimedean({})), L(6));
    EXPECT_THROW(h_sbar(Rational(0), S2), DomainError);
    EXPECT_TRUE(h_sbar(TorusPoint({2, Rational(-1, 4)}), S2).is_zero());
    EXPECT_EQ(h_sbar(TorusPoint({3, Rational(1, 5)}), S2), L(15));
    EXPECT_EQ(h_sbar_standard(TorusPoint({3, 3}), S2), L(9));
}

TEST(HSbar, BoundedByTwiceHeight) {
    Rng rng(5);
    const PlaceSet S = PlaceSet::with_archimedean({3});
    for (int t = 0; t < 200; ++t) {
        const Rational x = make_rational(rng.uniform(1, 5000), rng.uniform(1, 5000));
        EXPECT_NE(compare(height(x) * Rational(2), h_sbar(x, S)), Sign::negative);
    }
}

TEST(AlmostUnit, Examples) {
    EXPECT_TRUE(is_almost_unit(3072, AlmostUnitConfig(PlaceSet::with_archimedean({2}), Rational(1, 5))));
    EXPECT_FALSE(is_almost_unit(6, AlmostUnitConfig(PlaceSet::with_archimedean({}), Rational(1, 10))));
    EXPECT_TRUE(is_almost_unit(Rational(-27, 4), AlmostUnitConfig(PlaceSet::with_archimedean({2, 3}), 0)));
    EXPECT_TRUE(is_almost_unit(TorusPoint({2, 3}), AlmostUnitConfig(PlaceSet::with_archimedean({2, 3}), 0)));
    EXPECT_FALSE(is_almost_unit(TorusPoint({2, 5}), AlmostUnitConfig(PlaceSet::with_archimedean({2, 3}), 0)));
    EXPECT_THROW(AlmostUnitConfig(PlaceSet(false, {2}), Rational(1, 2)), DomainError);
    EXPECT_THROW(AlmostUnitConfig(PlaceSet::with_archimedean({2}), 1), DomainError);
}

TEST(AlmostUnit, StandardHeightBridge) {
    Rng rng(21);
    const PlaceSet S = PlaceSet::with_archimedean({2, 3});
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> c;
        for (int i = 0; i < 3; ++i) {
            Rational x = pow(Rational(2), rng.uniform(-6, 6)) * pow(Rational(3), rng.uniform(-6, 6));
            if (rng.uniform(0, 2) == 0) x *= make_rational(rng.uniform(1, 7), rng.uniform(1, 7));
            c.push_back(x);
        }
        const TorusPoint P(c);
        const auto th = tuple_heights(P);
        const Rational n(static_cast<long>(P.size()));
        const LogReal lhs = h_sbar_standard(P, S);
        const LogReal mid = h_sbar(P, S) * n;
        EXPECT_NE(compare(lhs, mid), Sign::positive);
        EXPECT_NE(compare(th.height, th.standard_height), Sign::positive);
        const Rational delta(1, 3);
        if (is_almost_unit(P, AlmostUnitConfig(S, delta)) && n * delta < 1) {
            EXPECT_TRUE(is_almost_unit_standard(P, AlmostUnitConfig(S, n * delta)));
        }
    }
}

TEST(QuasiSInteger, Predicate) {
    const PlaceSet S = PlaceSet::with_archimedean({});
    EXPECT_TRUE(is_quasi_s_integer(7, S, Rational(1, 2)));
    EXPECT_FALSE(is_quasi_s_integer(Rational(1, 7), S, Rational(1, 2)));
    // 7/2: lambda_inf = log(7/2), h = log 7.
    EXPECT_TRUE(is_quasi_s_integer(Rational(7, 2), S, Rational(1, 2)));
    EXPECT_FALSE(is_quasi_s_integer(Rational(7, 2), S, Rational(9, 10)));
}

TEST(HypersurfaceLocalHeight, Examples) {
    const MultiPoly x0 = MultiPoly::parse("x0", 2, 0);
    const MultiPoly sum = MultiPoly::parse("x0 + x1", 2, 0);
    EXPECT_TRUE(hypersurface_local_height(x0, ProjPoint({1, 1}), inf).is_zero());
    EXPECT_EQ(hypersurface_local_height(sum, ProjPoint({1, 1}), inf), -L(2));
    EXPECT_EQ(hypersurface_local_height(x0, ProjPoint({2, 3}), Place::finite(2)), L(2));
    EXPECT_THROW(hypersurface_local_height(sum, ProjPoint({1, -1}), inf), DomainError);
    EXPECT_THROW(hypersurface_local_height(MultiPoly::parse("x0 + 1", 2, 0), ProjPoint({1, 1}), inf), DomainError);
}

TEST(HypersurfaceLocalHeight, ScalingInvariance) {
    const MultiPoly F = MultiPoly::parse("x0^2 + 3*x1*x2 - x2^2", 3, 0);
    const std::vector<Rational> P{2, 5, 7};
    for (const Rational s : {Rational(3), Rational(-2, 9), Rational(1, 10)}) {
        std::vector<Rational> Q;
        for (const auto& c : P) Q.push_back(c * s);
        for (const Place v : {inf, Place::finite(2), Place::finite(3), Place::finite(5)}) {
            EXPECT_EQ(hypersurface_local_height(F, Q, v), hypersurface_local_height(F, P, v));
        }
    }
}
