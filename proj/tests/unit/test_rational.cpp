#include "gcdlab/interval.hpp"
#include "gcdlab/logreal.hpp"
#include "gcdlab/primes.hpp"
#include "gcdlab/rational.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace gcdlab;

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("+0/5"), Rational(0));
    EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_THROW(parse_rational("1.5"), DomainError);
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("1 /2"), DomainError);
    EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Rational, PowBinomialSqrt) {
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(pow(Rational(5), 0), Rational(1));
    EXPECT_THROW(pow(Rational(0), -1), DomainError);
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(2, 5), 0);
    EXPECT_EQ(binomial(-1, 2), 0);
    EXPECT_EQ(binomial(4, -1), 0);
    EXPECT_EQ(floor_sqrt(Rational(17, 1)), 4);
    EXPECT_EQ(floor_sqrt(Rational(1, 4)), 0);
    EXPECT_EQ(floor_sqrt(Rational(64, 1)), 8);
    Rational r;
    EXPECT_TRUE(is_rational_square(Rational(9, 4), &r));
    EXPECT_EQ(r, Rational(3, 2));
    EXPECT_FALSE(is_rational_square(Rational(2)));
}

TEST(Primes, MillerRabinAgainstSieve) {
    for (std::uint64_t n = 0; n < 5000; ++n) {
        bool trial = n >= 2;
        for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
        ASSERT_EQ(is_prime_u64(n), trial) << n;
    }
    EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
    EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST(Primes, FactorizeReassembles) {
    const Integer n = Integer("600851475143") * Integer(1024) * Integer("1000000007");
    Integer prod = 1;
    for (const auto& f : factorize(n)) {
        EXPECT_TRUE(f.prime);
        prod *= pow(f.base, static_cast<unsigned long>(f.exponent));
    }
    EXPECT_EQ(prod, n);
    const Integer big = pow(Integer(2), 89) - 1;  // Mersenne prime
    const auto fs = factorize(big * 3);
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[1].base, big);
}

TEST(Primes, CoprimeBase) {
    const std::vector<Integer> v{12, 18, 35};
    const auto base = coprime_base(v);
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i + 1; j < base.size(); ++j) EXPECT_EQ(gcd(base[i], base[j]), 1);
    }
    EXPECT_EQ(multiplicity(Integer(48), Integer(2)), 4);
}

TEST(Interval, EnclosesAndSigns) {
    const Interval a = Interval::log_of(Integer(3), 64) - Interval::log_of(Integer(2), 64);
    EXPECT_EQ(a.strict_sign(), Sign::positive);
    const Interval z = Interval::exact(Rational(1, 3), 64) - Interval::exact(Rational(1, 3), 64);
    EXPECT_TRUE(z.contains_zero());
    EXPECT_NEAR(Interval::log_of(Integer(2), 128).midpoint_double(), 0.6931471805599453, 1e-15);
    const Sign s = certified_sign([](long prec) {
        const Integer big = Integer(1) << 200;
        return Interval::log_of(big, prec) - Interval::log_of(Integer(big + 1), prec);
    });
    EXPECT_EQ(s, Sign::negative);
}

TEST(LogReal, SignExamples) {
    const LogReal l2 = LogReal::log_prime(2), l3 = LogReal::log_prime(3);
    EXPECT_EQ(logreal_sign(l3 - l2, 64), Sign::positive);
    EXPECT_EQ(logreal_sign(l2 - l3, 64), Sign::negative);
    EXPECT_EQ(logreal_sign(l2 * Rational(2) - LogReal::log_of(Integer(4))), Sign::zero);
    EXPECT_TRUE((l2 * Rational(2) - LogReal::log_of(Integer(4))).is_zero());
}

TEST(LogReal, ArithmeticAndPrinting) {
    const LogReal x = LogReal::log_of(Rational(12, 5));
    EXPECT_EQ(x.coefficient(2), 2);
    EXPECT_EQ(x.coefficient(3), 1);
    EXPECT_EQ(x.coefficient(5), -1);
    EXPECT_EQ(x.to_string(), "2*log(2) + log(3) - log(5)");
    EXPECT_EQ((LogReal::log_of(Integer(3)) - LogReal::log_of(Integer(2))).to_string(), "-log(2) + log(3)");
    EXPECT_EQ(LogReal().to_string(), "0");
    EXPECT_EQ(LogReal::log_of(Integer(1000)).to_decimal(6), "6.90776");
    EXPECT_EQ(-x + x, LogReal());
}

TEST(LogReal, ComparisonsWithRationals) {
    const LogReal l65 = LogReal::log_of(Integer(65));
    EXPECT_EQ(compare(l65, Rational(18, 5)), Sign::positive);  // 4.174 > 3.6
    EXPECT_EQ(compare(LogReal(), Rational(0)), Sign::zero);
    EXPECT_EQ(compare(LogReal(), Rational(-1)), Sign::positive);
    // log 4 vs 2 sqrt(1) log 2 is an exact tie.
    EXPECT_EQ(compare_sqrt_scaled(LogReal::log_of(Integer(4)), 2, 1, LogReal::log_prime(2)), Sign::zero);
    EXPECT_EQ(compare_sqrt_scaled(LogReal::log_of(Integer(4)), 1, 2, LogReal::log_prime(2)), Sign::positive);
}

TEST(LogReal, OrderCompatibleWithAddition) {
    const std::vector<LogReal> pos{LogReal::log_of(Rational(3, 2)), LogReal::log_of(Rational(9, 8)),
                                   LogReal::log_of(Rational(1025, 1024))};
    for (const auto& a : pos) {
        for (const auto& b : pos) {
            ASSERT_EQ(a.sign(), Sign::positive);
            EXPECT_EQ((a + b).sign(), Sign::positive);
        }
    }
}

TEST(LogReal, UnfactoredAtomsStayIndependent) {
    // Product of two 80-bit primes: may stay a composite atom; equality is still exact.
    const Integer p = Integer("1208925819614629174706189");
    const Integer q = Integer("1208925819614629174706293");
    const LogReal a = LogReal::log_of(Integer(p * q));
    EXPECT_EQ(a * Rational(2), LogReal::log_of(Integer(p * q * p * q)));
    EXPECT_EQ(compare(a, Rational(110)), Sign::positive);
}
