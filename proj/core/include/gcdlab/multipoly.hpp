#pragma once

// Multivariate polynomials and Laurent polynomials with rational coefficients.
//
// Text format: "3/2*x1^2*x2 - x3 + 1". Variables are x<k> with k counted from
// `first_index` (1 by default, 0 for homogeneous coordinates x0..xn). Laurent
// polynomials also accept negative exponents ("x1^-2").

#include "gcdlab/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcdlab {

/// Exponent vector of a monomial; |i| = sum of entries.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {}
    MultiIndex(std::initializer_list<int> exps) : exps_(exps) {}
    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }
    static MultiIndex unit(std::size_t n, std::size_t i, int power = 1);

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    auto begin() const { return exps_.begin(); }
    auto end() const { return exps_.end(); }

    long degree() const;
    bool is_nonnegative() const;
    /// Entrywise a >= b.
    bool divides(const MultiIndex& other) const;

    MultiIndex operator+(const MultiIndex& rhs) const;
    MultiIndex operator-(const MultiIndex& rhs) const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.exps_ <=> b.exps_; }

private:
    std::vector<int> exps_;
};

/// Graded lexicographic order: total degree first, then x_1 > x_2 > ...
struct GrLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices in n variables with |i| <= max_degree, in ascending grlex order.
std::vector<MultiIndex> monomials_up_to(std::size_t n, long max_degree);
/// All multi-indices in n variables with |i| == degree, in ascending grlex order.
std::vector<MultiIndex> monomials_of_degree(std::size_t n, long degree);

using TermMap = std::map<MultiIndex, Rational, GrLex>;

class MultiPoly {
public:
    explicit MultiPoly(std::size_t nvars = 1) : nvars_(nvars) {}
    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t i);
    static MultiPoly monomial(const MultiIndex& i, const Rational& c = 1);
    /// Throws DomainError for unknown symbols, negative exponents or
    /// variables beyond nvars.
    static MultiPoly parse(std::string_view text, std::size_t nvars, int first_index = 1);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    Rational coefficient(const MultiIndex& i) const;
    Rational constant_term() const;
    /// Largest term in grlex order. Precondition: nonzero.
    const std::pair<const MultiIndex, Rational>& leading_term() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;
    MultiPoly pow(unsigned e) const;
    /// Multiplies by the monomial x^i.
    MultiPoly shifted(const MultiIndex& i) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    Rational eval(std::span<const Rational> point) const;

    /// x0^deg f * f(x1/x0, ..., xn/x0): the new variable is index 0 and the
    /// old variables shift up by one. Precondition: f nonzero.
    MultiPoly homogenize() const;
    /// Sets variable `var` to 1 and removes it.
    MultiPoly dehomogenize(std::size_t var = 0) const;

    /// Exact quotient; throws DomainError when divisor does not divide.
    MultiPoly divide_exact(const MultiPoly& divisor) const;
    /// Scales so the leading coefficient is 1 (zero stays zero).
    MultiPoly monic() const;

    std::string to_string(int first_index = 1) const;

private:
    void add_term(const MultiIndex& i, const Rational& c);

    std::size_t nvars_;
    TermMap terms_;
};

/// Greatest common divisor in Q[x_1..x_n], monic in grlex. gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

/// True iff gcd(f, g) is a nonzero constant. Both inputs must be nonzero.
bool coprime(const MultiPoly& f, const MultiPoly& g);

/// True iff the constant term is zero (so the zero polynomial counts).
bool vanishes_at_origin(const MultiPoly& f);

class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t nvars = 1) : nvars_(nvars) {}
    explicit LaurentPoly(const MultiPoly& p);
    static LaurentPoly monomial(const MultiIndex& i, const Rational& c = 1);
    static LaurentPoly parse(std::string_view text, std::size_t nvars, int first_index = 1);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Coordinates under a negative exponent must be nonzero.
    Rational eval(std::span<const Rational> point) const;

    std::string to_string(int first_index = 1) const;

private:
    friend struct LaurentAccess;
    std::size_t nvars_;
    TermMap terms_;
};

/// f = x^monomial * f0 with f0 a polynomial divisible by no variable.
struct LaurentNormalForm {
    MultiIndex monomial;
    MultiPoly f0;
};

LaurentNormalForm laurent_normalize(const LaurentPoly& f);

}  // namespace gcdlab
