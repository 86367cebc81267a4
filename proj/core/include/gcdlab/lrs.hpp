#pragma once

// Linear recurrence sequences over Q as generalized power sums
// F(n) = sum_i p_i(n) alpha_i^n, with rational roots alpha_i.

#include "gcdlab/logreal.hpp"
#include "gcdlab/multipoly.hpp"
#include "gcdlab/places.hpp"
#include "gcdlab/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcdlab {

/// Dense univariate polynomial in n, little-endian: c[0] + c[1] n + ...
using IndexPoly = std::vector<Rational>;

struct PowerSumTerm {
    IndexPoly coeff;
    Rational root;
    friend bool operator==(const PowerSumTerm&, const PowerSumTerm&) = default;
};

class PowerSum {
public:
    PowerSum() = default;
    /// Canonicalizes: merges equal roots, trims coefficients, drops zero terms,
    /// sorts by root. Throws DomainError on a zero root.
    explicit PowerSum(std::vector<PowerSumTerm> terms);

    /// c * root^n.
    static PowerSum geometric(const Rational& root, const Rational& c = 1);
    static PowerSum constant(const Rational& c) { return geometric(1, c); }
    /// The sequence n -> n.
    static PowerSum index();

    /// Closed form of a(n+k) = c_1 a(n+k-1) + ... + c_k a(n) with a(0..k-1)
    /// given. Throws DomainError unless c_k != 0 and the characteristic
    /// polynomial splits over Q.
    static PowerSum from_recurrence(std::span<const Rational> relation, std::span<const Rational> initial);

    const std::vector<PowerSumTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::vector<Rational> roots() const;

    Rational eval(long n) const;

    PowerSum& operator+=(const PowerSum& rhs);
    PowerSum& operator-=(const PowerSum& rhs);
    friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
    friend PowerSum operator-(PowerSum a, const PowerSum& b) { return a -= b; }
    friend PowerSum operator*(const PowerSum& a, const PowerSum& b);
    friend PowerSum operator*(const Rational& c, const PowerSum& a);
    PowerSum operator-() const;
    friend bool operator==(const PowerSum&, const PowerSum&) = default;

    /// t -> F(a t + b).
    PowerSum compose_ap(long a, long b) const;

    /// Text such as "n*2^n + 1" or "(2*n + 1)*(3/2)^n - (-2)^n".
    std::string to_string() const;

private:
    void canonicalize();
    std::vector<PowerSumTerm> terms_;
};

PowerSum add(const PowerSum& F, const PowerSum& G);
PowerSum mul(const PowerSum& F, const PowerSum& G);

/// Some pair of distinct roots has ratio -1.
bool is_degenerate(const PowerSum& F);

struct Progression {
    long modulus;
    long residue;
    friend bool operator==(const Progression&, const Progression&) = default;
};

struct ZeroStructure {
    std::vector<long> zeros;               ///< all n in [0, N] with F(n) = 0
    std::vector<Progression> progressions;  ///< classes on which F vanishes identically
    std::vector<long> sporadic;             ///< zeros outside every progression
};

ZeroStructure zero_scan(const PowerSum& F, long N);

/// Multiplicative group generated by a list of nonzero rationals.
class RootGroup {
public:
    /// Writes x = (-1)^negate * prod_j generator_j^exponents_j.
    struct Expression {
        std::vector<Integer> exponents;
        bool negate = false;
    };

    explicit RootGroup(std::vector<Rational> roots);

    const std::vector<Rational>& roots() const { return roots_; }
    /// Free generators. Without torsion they generate the group; with torsion
    /// they are positive and the group is {+1, -1} x <generators>.
    const std::vector<Rational>& generators() const { return generators_; }
    std::size_t rank() const { return generators_.size(); }
    bool has_torsion() const { return torsion_; }
    /// Primes (or coprime atoms) indexing the exponent columns.
    const std::vector<Integer>& bases() const { return bases_; }
    /// Exponent vectors of the generators over bases(), in Hermite normal form.
    const std::vector<std::vector<Integer>>& lattice() const { return lattice_; }

    /// Expression of x in the generators, or nullopt when x is not in the group.
    std::optional<Expression> express(const Rational& x) const;
    bool contains(const Rational& x) const { return express(x).has_value(); }

private:
    std::vector<Rational> roots_;
    std::vector<Integer> bases_;
    std::vector<std::vector<Integer>> lattice_;
    std::vector<Rational> generators_;
    bool torsion_ = false;
};

RootGroup root_group(const std::vector<Rational>& roots);

/// rank(F) + rank(G) == rank(F together with G).
bool multiplicative_independence(const std::vector<Rational>& rootsF, const std::vector<Rational>& rootsG);

/// f in Q[x0, x1^(+-1), ..., xr^(+-1)] with F(n) = f(n, u_1^n, ..., u_r^n).
/// Throws DomainError if the group has torsion or misses a root of F.
LaurentPoly to_laurent(const PowerSum& F, const RootGroup& G);

/// Coprimality of the associated Laurent polynomials over the combined root
/// group. With torsion present, split_residues = true tests both classes
/// n = 2t and n = 2t + 1; otherwise torsion is a DomainError.
bool lrs_coprime(const PowerSum& F, const PowerSum& G, bool split_residues = false);

/// Places where every root of both sequences has absolute value < 1.
PlaceSet compute_S0(const std::vector<Rational>& rootsF, const std::vector<Rational>& rootsG);

/// h(prod_j u_j^{i_j}).
LogReal monomial_height(const std::vector<Rational>& u, const std::vector<long>& i);

struct EmpiricalConstant {
    LogReal value;             ///< min of h(u^i) / max|i_j| over the box
    std::vector<long> argmin;  ///< first exponent vector attaining it
};

/// Minimum of h(u^i)/max_j |i_j| over nonzero i with |i_j| <= box.
EmpiricalConstant empirical_height_constant(const std::vector<Rational>& u, long box);

}  // namespace gcdlab
