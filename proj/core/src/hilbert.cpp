#include "gcdlab/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gcdlab {

std::vector<Integer> multiindex_sum(long n, long m) {
    if (n < 1 || m < 1) throw DomainError("multiindex_sum needs n, m >= 1");
    std::vector<Integer> sum(static_cast<std::size_t>(n + 1), 0);
    for (const auto& i : monomials_of_degree(static_cast<std::size_t>(n + 1), m)) {
        for (std::size_t k = 0; k < i.size(); ++k) sum[k] += i[k];
    }
    return sum;
}

std::vector<Integer> multiindex_sum_closed_form(long n, long m) {
    if (n < 1 || m < 1) throw DomainError("multiindex_sum needs n, m >= 1");
    Integer total = Integer(m) * binomial(n + m, n);
    if (total % (n + 1) != 0) throw std::logic_error("closed form is not integral");
    return std::vector<Integer>(static_cast<std::size_t>(n + 1), Integer(total / (n + 1)));
}

Integer dim_quotient_formula(long n, long l, long d1, long d2) {
    return binomial(l + n, n) - binomial(l + n - d1, n) - binomial(l + n - d2, n) + binomial(l + n - d1 - d2, n);
}

// ------------------------------------------------------------ MonomialColumns

MonomialColumns::MonomialColumns(std::vector<MultiIndex> monomials) : monomials_(std::move(monomials)) {
    for (std::size_t c = 0; c < monomials_.size(); ++c) {
        if (!index_.emplace(monomials_[c], c).second) throw DomainError("duplicate monomial column");
    }
}

std::optional<std::size_t> MonomialColumns::column_of(const MultiIndex& i) const {
    auto it = index_.find(i);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RowSpace::Vector MonomialColumns::vector_of(const MultiPoly& p) const {
    RowSpace::Vector v;
    for (const auto& [i, c] : p.terms()) {
        auto col = column_of(i);
        if (!col) throw DomainError("polynomial has a monomial outside the coordinate space");
        v.emplace(*col, c);
    }
    return v;
}

MultiPoly MonomialColumns::poly_of(const RowSpace::Vector& v, std::size_t nvars) const {
    MultiPoly p(nvars);
    for (const auto& [col, c] : v) p += MultiPoly::monomial(monomials_.at(col), c);
    return p;
}

// ------------------------------------------------------------ TruncatedIdeal

namespace {

void check_same_ring(const MultiPoly& f, const MultiPoly& g) {
    if (f.nvars() != g.nvars()) throw DomainError("polynomials live in different rings");
    if (f.is_zero() || g.is_zero()) throw DomainError("polynomials must be nonzero");
}

void add_multiples(std::vector<RowSpace::Vector>& rows, const MonomialColumns& cols, const MultiPoly& p,
                   const std::vector<MultiIndex>& shifts) {
    for (const auto& a : shifts) rows.push_back(cols.vector_of(p.shifted(a)));
}

}  // namespace

TruncatedIdeal::TruncatedIdeal(MultiPoly f, MultiPoly g, long m)
    : f_(std::move(f)),
      g_(std::move(g)),
      m_(m),
      columns_(monomials_up_to(f_.nvars(), m)),
      space_(columns_.size()) {
    check_same_ring(f_, g_);
    if (m < std::max(f_.total_degree(), g_.total_degree()) || m < 1) {
        throw DomainError("truncation degree below the degrees of f and g");
    }
    add_multiples(generators_, columns_, f_, monomials_up_to(nvars(), m - f_.total_degree()));
    add_multiples(generators_, columns_, g_, monomials_up_to(nvars(), m - g_.total_degree()));
    for (const auto& row : generators_) space_.insert(row);
}

std::vector<MultiPoly> TruncatedIdeal::basis() const {
    std::vector<MultiPoly> out;
    for (const auto& row : space_.reduced_rows()) out.push_back(columns_.poly_of(row, nvars()));
    return out;
}

MultiPoly TruncatedIdeal::residual(const MultiPoly& p) const {
    if (p.nvars() != nvars()) throw DomainError("polynomial lives in a different ring");
    if (p.total_degree() > m_) throw DomainError("polynomial degree exceeds the truncation");
    return columns_.poly_of(space_.reduce(columns_.vector_of(p)), nvars());
}

// ------------------------------------------------------------ greedy bases

LogReal monomial_log_abs(const TorusPoint& u, const MultiIndex& i, const Place& v) {
    if (u.size() != i.size()) throw DomainError("point and monomial have different dimensions");
    LogReal out;
    for (std::size_t k = 0; k < i.size(); ++k) {
        if (i[k] != 0) out += log_abs(u[k], v) * Rational(i[k]);
    }
    return out;
}

namespace {

std::vector<LogReal> column_weights(const MonomialColumns& cols, const TorusPoint& u, const Place& v) {
    std::vector<LogReal> logs;
    for (std::size_t k = 0; k < u.size(); ++k) logs.push_back(log_abs(u[k], v));
    std::vector<LogReal> w;
    w.reserve(cols.size());
    for (const auto& i : cols.monomials()) {
        LogReal acc;
        for (std::size_t k = 0; k < i.size(); ++k) {
            if (i[k] != 0) acc += logs[k] * Rational(i[k]);
        }
        w.push_back(std::move(acc));
    }
    return w;
}

}  // namespace

GreedyBasis greedy_monomial_basis(const TruncatedIdeal& T, const TorusPoint& u, const Place& v) {
    if (u.size() != T.nvars()) throw DomainError("point dimension differs from the number of variables");
    const auto& cols = T.columns();
    const auto weights = column_weights(cols, u, v);

    std::vector<std::size_t> order(cols.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Columns are already in ascending grlex order, so index order breaks ties.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare(weights[a], weights[b]) == Sign::negative;
    });

    GreedyBasis out{v, u, {}, {}};
    const std::size_t target = T.Nprime();
    RowSpace space = T.space();
    for (std::size_t col : order) {
        if (out.monomials.size() == target) break;
        if (space.insert(RowSpace::Vector{{col, Rational(1)}})) {
            out.monomials.push_back(cols[col]);
            out.weights.push_back(weights[col]);
        }
    }
    if (out.monomials.size() != target) throw std::logic_error("greedy basis did not reach the quotient dimension");
    return out;
}

DominanceReport check_greedy_dominance(const TruncatedIdeal& T, const GreedyBasis& B) {
    const auto& cols = T.columns();
    const auto weights = column_weights(cols, B.point, B.place);

    std::vector<bool> in_basis(cols.size(), false);
    for (const auto& i : B.monomials) {
        auto c = cols.column_of(i);
        if (!c) throw DomainError("basis monomial outside the truncation");
        in_basis[*c] = true;
    }
    std::vector<std::size_t> priority;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (!in_basis[c]) priority.push_back(c);
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (in_basis[c]) priority.push_back(c);
    }
    RowSpace space(cols.size(), priority);
    for (const auto& row : T.generators()) space.insert(row);

    DominanceReport report;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (in_basis[c]) continue;
        ++report.monomials_checked;
        for (const auto& [j, coeff] : space.reduce(RowSpace::Vector{{c, Rational(1)}})) {
            if (!in_basis[j]) throw std::logic_error("basis monomials do not span the quotient");
            if (compare(weights[j], weights[c]) == Sign::positive) {
                report.violations.push_back({cols[c], cols[j]});
            }
        }
    }
    return report;
}

// ------------------------------------------------------------ homogeneous components

HomogeneousComponent homogeneous_component(const MultiPoly& F1, const MultiPoly& F2, long l) {
    check_same_ring(F1, F2);
    if (!F1.is_homogeneous() || !F2.is_homogeneous()) throw DomainError("forms must be homogeneous");
    if (l < 0) throw DomainError("negative degree");
    const std::size_t nvars = F1.nvars();
    HomogeneousComponent C{MonomialColumns(monomials_of_degree(nvars, l)), RowSpace(0)};
    C.space = RowSpace(C.columns.size());
    std::vector<RowSpace::Vector> rows;
    add_multiples(rows, C.columns, F1, monomials_of_degree(nvars, l - F1.total_degree()));
    add_multiples(rows, C.columns, F2, monomials_of_degree(nvars, l - F2.total_degree()));
    for (const auto& r : rows) C.space.insert(r);
    return C;
}

std::vector<MultiIndex> quotient_monomial_basis(const HomogeneousComponent& C) {
    std::set<std::size_t> pivots;
    for (auto c : C.space.pivot_columns()) pivots.insert(c);
    std::vector<MultiIndex> out;
    for (std::size_t c = 0; c < C.columns.size(); ++c) {
        if (!pivots.count(c)) out.push_back(C.columns[c]);
    }
    return out;
}

long ord_sum(const std::vector<MultiIndex>& B, std::size_t i) {
    long s = 0;
    for (const auto& j : B) s += j[i];
    return s;
}

Integer ord_sum_bound(long n, long m, long d1, long d2) {
    return binomial(m + n, n + 1) - binomial(m + n - d1, n + 1) - binomial(m + n - d2, n + 1) +
           binomial(m + n - d1 - d2, n + 1);
}

Integer ord_sum_coarse_bound(long n, long m, long d1, long d2) { return Integer(d1 * d2) * binomial(m + n - 2, n - 1); }

bool ord_sum_check(const std::vector<MultiIndex>& B, std::size_t i, long d1, long d2, long m, long n) {
    const Integer fine = ord_sum_bound(n, m, d1, d2);
    return Integer(ord_sum(B, i)) <= fine && fine <= ord_sum_coarse_bound(n, m, d1, d2);
}

Integer nprime_bound(long n, long m, long d1, long d2) { return Integer(d1 * d2) * binomial(m + n - 2, n - 2); }

// ------------------------------------------------------------ constants

Integer m_main(long n, long d1, const Rational& delta) {
    if (delta <= 0 || delta >= 1) throw DomainError("delta must lie in (0, 1)");
    const Rational top(2 * d1 * n);
    return floor_sqrt(Rational(top * top / delta));
}

long m_spart(long n, long d) {
    if (n < 1 || d < 1) throw DomainError("m_spart needs n, d >= 1");
    // m >= (n+1-t)/(d(t-1)) + 1 with t^d = 2  <=>  2((m-1)d+1)^d >= (n+1+(m-1)d)^d.
    for (long m = 1;; ++m) {
        const long a = (m - 1) * d;
        if (2 * pow(Integer(a + 1), static_cast<unsigned long>(d)) >= pow(Integer(n + 1 + a), static_cast<unsigned long>(d))) {
            return m;
        }
    }
}

Integer i_spart(long n, long d, long m) {
    Integer s = 1;
    for (long j = 1; j <= m - 1; ++j) s += binomial(n + j * d, n);
    return s;
}

TheoremConstants theorem_constants(long n, long d1, long d2, const Rational& delta, long d) {
    if (n < 1 || d1 < 1 || d2 < 1 || d < 1) throw DomainError("degrees and dimension must be positive");
    if (delta <= 0 || delta >= 1) throw DomainError("delta must lie in (0, 1)");
    TheoremConstants c;
    c.C_main = 2 * (n * n * d1 + n * d2);
    c.m_main = m_main(n, d1, delta);
    c.C_combined = 6 * (d1 + d2) * n * n;
    c.C_spart = 4 * n * d;
    c.m_spart = m_spart(n, d);
    c.m_spart_within_2n = c.m_spart <= 2 * n;
    c.I_spart = i_spart(n, d, c.m_spart);
    return c;
}

Rational main_corollary_delta(const Rational& eps, long n, long d1, long d2) {
    if (eps <= 0) throw DomainError("epsilon must be positive");
    const Rational c(n * n * d1 + n * d2);
    return Rational(eps * eps / (4 * n * n * c * c));
}

Rational combined_corollary_delta(const Rational& eps, long n, long d1, long d2) {
    if (eps <= 0) throw DomainError("epsilon must be positive");
    const Rational r = eps / Rational(6 * n * n * n * (d1 + d2));
    return Rational(r * r);
}

// ------------------------------------------------------------ Veronese basis

VeroneseBasis veronese_basis(const MultiPoly& F, long m) {
    if (F.is_zero() || !F.is_homogeneous()) throw DomainError("F must be a nonzero form");
    if (m < 1) throw DomainError("m must be positive");
    const long d = F.total_degree();
    const std::size_t nvars = F.nvars();
    if (d < 1) throw DomainError("F must have positive degree");
    if (F.coefficient(MultiIndex::unit(nvars, 0, static_cast<int>(d))) == 0) {
        throw DomainError("F has zero x0^d coefficient");
    }
    MonomialColumns cols(monomials_of_degree(nvars, m * d));
    RowSpace space(cols.size());
    VeroneseBasis out;
    out.I = 0;
    std::vector<MultiPoly> powers{MultiPoly::constant(nvars, 1)};
    for (const auto& i : cols.monomials()) {
        const long k = i[0] / d;
        while (static_cast<long>(powers.size()) <= k) powers.push_back(powers.back() * F);
        MultiIndex rest = i;
        rest[0] -= static_cast<int>(k * d);
        MultiPoly element = powers[static_cast<std::size_t>(k)].shifted(rest);
        space.insert(cols.vector_of(element));
        out.I += k;
        out.elements.push_back({i, k, std::move(element)});
    }
    out.rank = space.rank();
    return out;
}

MultiPoly random_form(std::size_t nvars, long degree, Rng& rng, long coeff_bound, long keep_one_in) {
    if (coeff_bound < 1 || keep_one_in < 1) throw DomainError("invalid sampling parameters");
    const auto monos = monomials_of_degree(nvars, degree);
    while (true) {
        MultiPoly p(nvars);
        for (const auto& i : monos) {
            if (rng.uniform(0, keep_one_in - 1) != 0) continue;
            long c = rng.uniform(-coeff_bound, coeff_bound - 1);
            if (c >= 0) ++c;
            p += MultiPoly::monomial(i, c);
        }
        if (!p.is_zero()) return p;
    }
}

}  // namespace gcdlab
