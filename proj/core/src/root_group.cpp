// Root groups via the Hermite normal form of prime-exponent vectors. Signs
// are tracked separately: products of roots with trivial exponent vector are
// +1 or -1, and -1 among them means torsion.

#include "gcdlab/lrs.hpp"
#include "gcdlab/primes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gcdlab {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Row-style HNF: U * A = H with U unimodular; nonzero rows of H come first.
struct Hnf {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
};

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void axpy_row(std::vector<Integer>& dst, const std::vector<Integer>& src, const Integer& q) {
    for (std::size_t c = 0; c < dst.size(); ++c) dst[c] -= q * src[c];
}

Hnf hermite_normal_form(IntMatrix A, std::size_t cols) {
    const std::size_t rows = A.size();
    Hnf h;
    h.U.assign(rows, std::vector<Integer>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) h.U[i][i] = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = row; i < rows; ++i) {
                if (A[i][col] != 0 && (best == rows || abs(A[i][col]) < abs(A[best][col]))) best = i;
            }
            if (best == rows) break;
            std::swap(A[row], A[best]);
            std::swap(h.U[row], h.U[best]);
            bool clean = true;
            for (std::size_t i = row + 1; i < rows; ++i) {
                if (A[i][col] == 0) continue;
                const Integer q = floor_div(A[i][col], A[row][col]);
                axpy_row(A[i], A[row], q);
                axpy_row(h.U[i], h.U[row], q);
                if (A[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (A[row][col] == 0) continue;
        if (A[row][col] < 0) {
            for (auto& x : A[row]) x = -x;
            for (auto& x : h.U[row]) x = -x;
        }
        for (std::size_t i = 0; i < row; ++i) {
            const Integer q = floor_div(A[i][col], A[row][col]);
            if (q == 0) continue;
            axpy_row(A[i], A[row], q);
            axpy_row(h.U[i], h.U[row], q);
        }
        ++row;
    }
    h.rank = row;
    h.H = std::move(A);
    return h;
}

Rational power_product(const std::vector<Rational>& xs, const std::vector<Integer>& exps) {
    Rational acc = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!exps[i].fits_slong_p()) throw DomainError("exponent too large");
        acc *= pow(xs[i], exps[i].get_si());
    }
    return acc;
}

std::vector<Integer> exponent_vector(const Rational& x, const std::vector<Integer>& bases) {
    std::vector<Integer> e;
    e.reserve(bases.size());
    for (const auto& b : bases) e.emplace_back(multiplicity(x.get_num(), b) - multiplicity(x.get_den(), b));
    return e;
}

// Removes the monomial unit in x1..xr; x0 stands for the index n and is not a unit.
MultiPoly strip_units(const LaurentPoly& f) {
    if (f.is_zero()) return MultiPoly(f.nvars());
    LaurentNormalForm nf = laurent_normalize(f);
    return nf.f0.shifted(MultiIndex::unit(f.nvars(), 0, nf.monomial[0]));
}

}  // namespace

RootGroup::RootGroup(std::vector<Rational> roots) : roots_(std::move(roots)) {
    std::vector<Integer> parts;
    for (const auto& r : roots_) {
        if (r == 0) throw DomainError("roots must be nonzero");
        for (const Integer& z : {Integer(abs(r.get_num())), Integer(r.get_den())}) {
            if (z > 1) {
                for (const auto& f : factorize(z)) parts.push_back(f.base);
            }
        }
    }
    bases_ = coprime_base(parts);

    IntMatrix A;
    for (const auto& r : roots_) A.push_back(exponent_vector(r, bases_));
    Hnf h = hermite_normal_form(A, bases_.size());

    for (std::size_t i = h.rank; i < roots_.size(); ++i) {
        if (power_product(roots_, h.U[i]) < 0) torsion_ = true;
    }
    for (std::size_t i = 0; i < h.rank; ++i) {
        lattice_.push_back(h.H[i]);
        Rational g = power_product(roots_, h.U[i]);
        generators_.push_back(torsion_ ? Rational(abs(g)) : g);
    }
}

std::optional<RootGroup::Expression> RootGroup::express(const Rational& x) const {
    if (x == 0) return std::nullopt;
    // Any prime of x outside the bases rules membership out.
    Rational rest = abs(x);
    std::vector<Integer> target = exponent_vector(x, bases_);
    for (std::size_t c = 0; c < bases_.size(); ++c) {
        if (target[c] != 0) rest /= pow(Rational(bases_[c]), target[c].get_si());
    }
    if (rest != 1) return std::nullopt;

    // Back-substitution against the echelon lattice.
    Expression e;
    e.exponents.assign(lattice_.size(), 0);
    std::vector<Integer> residual = target;
    std::size_t c = 0;
    for (std::size_t j = 0; j < lattice_.size(); ++j) {
        while (lattice_[j][c] == 0) {
            if (residual[c] != 0) return std::nullopt;
            ++c;
        }
        if (residual[c] % lattice_[j][c] != 0) return std::nullopt;
        e.exponents[j] = residual[c] / lattice_[j][c];
        axpy_row(residual, lattice_[j], e.exponents[j]);
        ++c;
    }
    if (std::any_of(residual.begin(), residual.end(), [](const Integer& z) { return z != 0; })) return std::nullopt;

    const Rational value = power_product(generators_, e.exponents);
    if (value != x) {
        if (value != -x || !torsion_) return std::nullopt;
        e.negate = true;
    }
    return e;
}

RootGroup root_group(const std::vector<Rational>& roots) { return RootGroup(roots); }

bool multiplicative_independence(const std::vector<Rational>& rootsF, const std::vector<Rational>& rootsG) {
    std::vector<Rational> all = rootsF;
    all.insert(all.end(), rootsG.begin(), rootsG.end());
    return RootGroup(rootsF).rank() + RootGroup(rootsG).rank() == RootGroup(all).rank();
}

LaurentPoly to_laurent(const PowerSum& F, const RootGroup& G) {
    if (G.has_torsion()) throw DomainError("root group has torsion; split into residue classes first");
    const std::size_t r = G.rank();
    LaurentPoly f(r + 1);
    for (const auto& t : F.terms()) {
        auto e = G.express(t.root);
        if (!e) throw DomainError("root " + to_string(t.root) + " is not in the root group");
        std::vector<int> exps(r + 1, 0);
        for (std::size_t j = 0; j < r; ++j) {
            if (!e->exponents[j].fits_sint_p()) throw DomainError("exponent too large");
            exps[j + 1] = static_cast<int>(e->exponents[j].get_si());
        }
        for (std::size_t k = 0; k < t.coeff.size(); ++k) {
            if (t.coeff[k] == 0) continue;
            exps[0] = static_cast<int>(k);
            f += LaurentPoly::monomial(MultiIndex(exps), t.coeff[k]);
        }
    }
    for (long n = 0; n <= 5; ++n) {
        std::vector<Rational> point{Rational(n)};
        for (const auto& u : G.generators()) point.push_back(pow(u, n));
        if (f.eval(point) != F.eval(n)) throw std::logic_error("Laurent image does not reproduce the sequence");
    }
    return f;
}

bool lrs_coprime(const PowerSum& F, const PowerSum& G, bool split_residues) {
    std::vector<Rational> roots = F.roots();
    for (const auto& r : G.roots()) roots.push_back(r);
    const RootGroup group(roots);
    if (group.has_torsion()) {
        if (!split_residues) throw DomainError("combined root group has torsion; enable the residue-class split");
        for (long r = 0; r < 2; ++r) {
            if (!lrs_coprime(F.compose_ap(2, r), G.compose_ap(2, r), false)) return false;
        }
        return true;
    }
    const MultiPoly f0 = strip_units(to_laurent(F, group));
    const MultiPoly g0 = strip_units(to_laurent(G, group));
    if (f0.is_zero() && g0.is_zero()) return false;
    if (f0.is_zero()) return g0.is_constant();
    if (g0.is_zero()) return f0.is_constant();
    return coprime(f0, g0);
}

}  // namespace gcdlab
