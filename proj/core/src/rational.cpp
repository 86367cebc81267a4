#include "gcdlab/rational.hpp"

#include <cctype>

namespace gcdlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (negative) n = -n;
    return make_rational(n, d);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw DomainError("zero raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exp);
    }
    Rational r(pow(base.get_num(), static_cast<unsigned long>(exp)),
               pow(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
}

std::uint64_t to_u64(const Integer& z) {
    if (!fits_u64(z)) throw std::out_of_range("integer does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
    return out;
}

Integer from_u64(std::uint64_t v) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return z;
}

Integer binomial(long top, long bottom) {
    if (bottom < 0 || top < bottom || top < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return r;
}

Integer floor_sqrt(const Rational& q) {
    if (q < 0) throw DomainError("floor_sqrt of a negative rational");
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Integer r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    return r;
}

bool is_rational_square(const Rational& q, Rational* root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    if (root != nullptr) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        *root = make_rational(n, d);
    }
    return true;
}

}  // namespace gcdlab
