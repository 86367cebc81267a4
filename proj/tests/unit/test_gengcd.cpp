#include "gcdlab/gengcd.hpp"
#include "gcdlab/rng.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace gcdlab;

namespace {

LogReal L(long n) { return LogReal::log_of(Integer(n)); }

std::uint64_t euclid(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace

TEST(LogGcd, Examples) {
    EXPECT_EQ(log_gcd(12, 18).value, L(6));
    EXPECT_TRUE(log_gcd(Rational(77, 3), 1).value.is_zero());
    EXPECT_TRUE(log_gcd(0, 1).value.is_zero());
    EXPECT_EQ(log_gcd(Rational(3, 2), Rational(9, 4)).value, L(3));
    EXPECT_EQ(log_gcd(0, 12).value, L(12));
    EXPECT_THROW(log_gcd(0, 0), DomainError);
}

TEST(LogGcd, Outside) {
    EXPECT_EQ(log_gcd_outside(12, 18, PlaceSet::with_archimedean({2})).value, L(3));
    EXPECT_EQ(log_gcd_outside(12, 18, PlaceSet::with_archimedean({})).value, L(6));
    EXPECT_TRUE(log_gcd_outside(Rational(1, 5), Rational(1, 7), PlaceSet::with_archimedean({})).value.is_zero());
    EXPECT_THROW(log_gcd_outside(0, 0, PlaceSet()), DomainError);
}

TEST(LogGcd, Within) {
    EXPECT_EQ(log_gcd_within(Rational(1, 2), Rational(1, 3), PlaceSet::with_archimedean({})).value, L(2));
    EXPECT_TRUE(log_gcd_within(2, 3, PlaceSet::with_archimedean({})).value.is_zero());
    EXPECT_EQ(log_gcd_within(12, 18, PlaceSet::with_archimedean({2})).value, L(2));
}

TEST(LogGcd, LocalTerm) {
    EXPECT_EQ(gcd_local_term(Rational(1, 2), Rational(1, 3), Place::archimedean()), L(2));
    EXPECT_EQ(gcd_local_term(8, 12, Place::finite(2)), L(4));
    EXPECT_TRUE(gcd_local_term(8, 12, Place::finite(3)).is_zero());
}

TEST(LogGcd, MatchesEuclid) {
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        const auto a = static_cast<std::uint64_t>(rng.uniform(1, 1'000'000'000));
        const auto b = static_cast<std::uint64_t>(rng.uniform(1, 1'000'000'000)) * (t % 3 == 0 ? a % 97 + 1 : 1);
        const long sa = rng.coin() ? -1 : 1;
        const GcdValue g = log_gcd(Rational(from_u64(a)) * sa, Rational(from_u64(b)));
        ASSERT_EQ(g.value, LogReal::log_of(from_u64(euclid(a, b))));
    }
}

TEST(LogGcd, PartitionAndSymmetry) {
    Rng rng(4);
    const std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13};
    for (int t = 0; t < 200; ++t) {
        const Rational a = make_rational(rng.uniform(-5000, 5000), rng.uniform(1, 300));
        const Rational b = make_rational(rng.uniform(1, 5000), rng.uniform(1, 300));
        std::vector<Place> places{Place::archimedean()};
        for (auto p : primes) {
            if (rng.coin()) places.push_back(Place::finite(p));
        }
        const PlaceSet S = PlaceSet::from_places(places);
        const GcdValue total = log_gcd(a, b);
        EXPECT_EQ(total.value, log_gcd_outside(a, b, S).value + log_gcd_within(a, b, S).value);
        EXPECT_EQ(total, log_gcd(b, a));
        EXPECT_NE(total.value.sign(), Sign::negative);
    }
}
