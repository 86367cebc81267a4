#pragma once

// Hilbert-function combinatorics for pairs of coprime polynomials: truncated
// ideals as vector spaces, quotient monomial bases, greedy bases ordered by a
// point's local sizes, the Veronese-type basis and the explicit constants.

#include "gcdlab/heights.hpp"
#include "gcdlab/linalg.hpp"
#include "gcdlab/logreal.hpp"
#include "gcdlab/multipoly.hpp"
#include "gcdlab/places.hpp"
#include "gcdlab/rational.hpp"
#include "gcdlab/rng.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace gcdlab {

/// Coordinate-wise sum of all (n+1)-tuples of naturals with entry sum m, by enumeration.
std::vector<Integer> multiindex_sum(long n, long m);
/// The same sum from m*C(n+m, n)/(n+1) in every coordinate.
std::vector<Integer> multiindex_sum_closed_form(long n, long m);

/// C(l+n,n) - C(l+n-d1,n) - C(l+n-d2,n) + C(l+n-d1-d2,n).
Integer dim_quotient_formula(long n, long l, long d1, long d2);

/// Indexes a fixed list of monomials as columns of a coordinate space.
class MonomialColumns {
public:
    explicit MonomialColumns(std::vector<MultiIndex> monomials);
    std::size_t size() const { return monomials_.size(); }
    const std::vector<MultiIndex>& monomials() const { return monomials_; }
    const MultiIndex& operator[](std::size_t col) const { return monomials_[col]; }
    std::optional<std::size_t> column_of(const MultiIndex& i) const;
    /// Throws DomainError when p has a monomial outside the list.
    RowSpace::Vector vector_of(const MultiPoly& p) const;
    MultiPoly poly_of(const RowSpace::Vector& v, std::size_t nvars) const;

private:
    std::vector<MultiIndex> monomials_;
    std::map<MultiIndex, std::size_t> index_;
};

/// The space (f,g)_(m) = {f p + g q : deg f p, deg g q <= m} in k[x_1..x_n]_{<=m}.
class TruncatedIdeal {
public:
    /// Throws DomainError if f or g is zero or m < max(deg f, deg g).
    TruncatedIdeal(MultiPoly f, MultiPoly g, long m);

    const MultiPoly& f() const { return f_; }
    const MultiPoly& g() const { return g_; }
    long m() const { return m_; }
    std::size_t nvars() const { return f_.nvars(); }
    const MonomialColumns& columns() const { return columns_; }
    const RowSpace& space() const { return space_; }

    std::size_t N() const { return space_.rank(); }
    std::size_t Nprime() const { return columns_.size() - space_.rank(); }

    /// Spanning products x^a f and x^b g.
    const std::vector<RowSpace::Vector>& generators() const { return generators_; }
    /// Basis of the space in reduced echelon form (pivot entries 1, pivot
    /// columns cleared elsewhere).
    std::vector<MultiPoly> basis() const;

    /// Remainder of p after eliminating every pivot monomial; zero iff p is in the ideal.
    MultiPoly residual(const MultiPoly& p) const;
    bool contains(const MultiPoly& p) const { return residual(p).is_zero(); }

private:
    MultiPoly f_, g_;
    long m_;
    MonomialColumns columns_;
    std::vector<RowSpace::Vector> generators_;
    RowSpace space_;
};

/// Monomials representing a basis of k[x]_{<=m} / (f,g)_(m), chosen greedily
/// by increasing |u^i|_v (ties broken by ascending graded-lex order).
struct GreedyBasis {
    Place place;
    TorusPoint point;
    std::vector<MultiIndex> monomials;
    std::vector<LogReal> weights;  ///< log |u^i|_v for each chosen monomial
};

/// log |u^i|_v as an exact log-linear form.
LogReal monomial_log_abs(const TorusPoint& u, const MultiIndex& i, const Place& v);

GreedyBasis greedy_monomial_basis(const TruncatedIdeal& T, const TorusPoint& u, const Place& v);

struct DominanceViolation {
    MultiIndex monomial;
    MultiIndex basis_monomial;
};

struct DominanceReport {
    std::size_t monomials_checked = 0;
    std::vector<DominanceViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// For each monomial x^i outside the basis, expresses x^i modulo the ideal in
/// the basis and reports any x^j used with log|u^j|_v > log|u^i|_v.
DominanceReport check_greedy_dominance(const TruncatedIdeal& T, const GreedyBasis& B);

/// Rows x^a F1, x^b F2 spanning (F1, F2)_[l] inside the degree-l forms.
struct HomogeneousComponent {
    MonomialColumns columns;
    RowSpace space;
    std::size_t dimension() const { return columns.size(); }
    std::size_t ideal_rank() const { return space.rank(); }
    std::size_t quotient_dim() const { return columns.size() - space.rank(); }
};

/// F1, F2 homogeneous in the same variables x_0..x_n.
HomogeneousComponent homogeneous_component(const MultiPoly& F1, const MultiPoly& F2, long l);
/// Non-pivot monomials of the degree-l component: a monomial basis of the quotient.
std::vector<MultiIndex> quotient_monomial_basis(const HomogeneousComponent& C);

/// Sum over B of the exponent of x_i.
long ord_sum(const std::vector<MultiIndex>& B, std::size_t i);
/// First bound: C(m+n,n+1) - C(m+n-d1,n+1) - C(m+n-d2,n+1) + C(m+n-d1-d2,n+1).
Integer ord_sum_bound(long n, long m, long d1, long d2);
/// Second bound: d1 d2 C(m+n-2, n-1).
Integer ord_sum_coarse_bound(long n, long m, long d1, long d2);
/// True iff ord_sum(B, i) <= first bound <= second bound.
bool ord_sum_check(const std::vector<MultiIndex>& B, std::size_t i, long d1, long d2, long m, long n);

/// d1 d2 C(m+n-2, n-2).
Integer nprime_bound(long n, long m, long d1, long d2);

struct TheoremConstants {
    Integer C_main;      ///< 2(n^2 d1 + n d2)
    Integer m_main;      ///< floor(2 d1 n / sqrt(delta))
    Integer C_combined;  ///< 6(d1 + d2) n^2
    Integer C_spart;     ///< 4 n d
    long m_spart;        ///< ceil((n - 2^(1/d) + 1) / (d (2^(1/d) - 1)) + 1)
    Integer I_spart;     ///< 1 + sum_{j=1}^{m_spart-1} C(n + j d, n)
    /// m_spart <= 2n, which the 4nd bound relies on; false for n = 1, d >= 4.
    bool m_spart_within_2n;
};

/// Throws DomainError unless 0 < delta < 1 and n, d1, d2, d >= 1.
TheoremConstants theorem_constants(long n, long d1, long d2, const Rational& delta, long d);
/// floor(2 d1 n / sqrt(delta)), exact.
Integer m_main(long n, long d1, const Rational& delta);
/// Smallest integer m with m >= (n - t + 1)/(d (t - 1)) + 1, t = 2^(1/d), decided exactly.
long m_spart(long n, long d);
/// 1 + sum_{j=1}^{m-1} C(n + j d, n).
Integer i_spart(long n, long d, long m);
/// delta = eps^2 / (4 n^2 (n^2 d1 + n d2)^2), turning the main bound into eps * max h(u_i).
Rational main_corollary_delta(const Rational& eps, long n, long d1, long d2);
/// delta = (eps / (6 n^3 (d1 + d2)))^2.
Rational combined_corollary_delta(const Rational& eps, long n, long d1, long d2);

struct VeroneseElement {
    MultiIndex monomial;  ///< x^i
    long k;               ///< floor(ord_{x0} x^i / d)
    MultiPoly element;    ///< x^i / x0^{k d} * F^k
};

struct VeroneseBasis {
    std::vector<VeroneseElement> elements;
    std::size_t rank = 0;  ///< rank of the elements among degree-md forms
    Integer I;             ///< sum of k over the elements
};

/// F homogeneous of degree d in x_0..x_n with nonzero x0^d coefficient.
VeroneseBasis veronese_basis(const MultiPoly& F, long m);

/// Random homogeneous form of the given degree with small integer
/// coefficients and at least one nonzero coefficient.
MultiPoly random_form(std::size_t nvars, long degree, Rng& rng, long coeff_bound = 3, long keep_one_in = 2);

}  // namespace gcdlab
