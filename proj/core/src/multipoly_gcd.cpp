// Multivariate gcd over Q by recursive content / primitive-part splitting and
// primitive pseudo-remainder sequences, viewing Q[x_1..x_n] as R[x_k] with R
// the polynomials in the remaining variables.

#include "gcdlab/multipoly.hpp"

#include <optional>

namespace gcdlab {

namespace {

std::optional<std::size_t> main_variable(const MultiPoly& f, const MultiPoly& g) {
    for (std::size_t k = f.nvars(); k-- > 0;) {
        if (f.degree_in(k) > 0 || g.degree_in(k) > 0) return k;
    }
    return std::nullopt;
}

// Coefficient of var^power, as a polynomial free of var.
MultiPoly coefficient_in(const MultiPoly& f, std::size_t var, long power) {
    MultiPoly out(f.nvars());
    for (const auto& [i, c] : f.terms()) {
        if (i[var] != power) continue;
        MultiIndex j = i;
        j[var] = 0;
        out += MultiPoly::monomial(j, c);
    }
    return out;
}

MultiPoly content_in(const MultiPoly& f, std::size_t var);

MultiPoly primitive_part(const MultiPoly& f, std::size_t var) {
    if (f.is_zero()) return f;
    return f.divide_exact(content_in(f, var));
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    const long db = b.degree_in(var);
    const MultiPoly lb = coefficient_in(b, var, db);
    MultiPoly r = a;
    long steps = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const long dr = r.degree_in(var);
        MultiPoly lr = coefficient_in(r, var, dr);
        r = r * lb - (lr * b).shifted(MultiIndex::unit(a.nvars(), var, static_cast<int>(dr - db)));
        --steps;
    }
    if (steps > 0) r = r * lb.pow(static_cast<unsigned>(steps));
    return r;
}

}  // namespace

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.nvars() != g.nvars()) throw DomainError("gcd of polynomials in different rings");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    auto var = main_variable(f, g);
    if (!var) return MultiPoly::constant(f.nvars(), 1);
    const std::size_t x = *var;
    if (f.degree_in(x) == 0) return gcd(f, content_in(g, x));
    if (g.degree_in(x) == 0) return gcd(content_in(f, x), g);

    MultiPoly cf = content_in(f, x);
    MultiPoly cg = content_in(g, x);
    MultiPoly c = gcd(cf, cg);
    MultiPoly a = f.divide_exact(cf);
    MultiPoly b = g.divide_exact(cg);
    if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
    while (true) {
        MultiPoly r = pseudo_remainder(a, b, x);
        if (r.is_zero()) break;
        if (r.degree_in(x) == 0) {
            b = MultiPoly::constant(f.nvars(), 1);
            break;
        }
        a = std::move(b);
        b = primitive_part(r, x);
    }
    return (c * primitive_part(b, x)).monic();
}

namespace {

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
    MultiPoly acc(f.nvars());
    for (long d = f.degree_in(var); d >= 0; --d) {
        MultiPoly c = coefficient_in(f, var, d);
        if (c.is_zero()) continue;
        acc = gcd(acc, c);
        if (acc.is_constant()) return MultiPoly::constant(f.nvars(), 1);
    }
    return acc.is_zero() ? MultiPoly::constant(f.nvars(), 1) : acc;
}

}  // namespace

bool coprime(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("coprime() requires nonzero polynomials");
    return gcd(f, g).is_constant();
}

}  // namespace gcdlab
