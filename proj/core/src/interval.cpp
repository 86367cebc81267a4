#include "gcdlab/interval.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace gcdlab {

std::string to_string(Sign s) {
    switch (s) {
        case Sign::negative:
            return "negative";
        case Sign::zero:
            return "zero";
        case Sign::positive:
            return "positive";
    }
    return "?";
}

Interval::Interval(long precision) : precision_(precision) {
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : precision_(other.precision_) {
    mpfr_init2(lo_, precision_);
    mpfr_init2(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision_) { swap(other); }

Interval& Interval::operator=(Interval other) noexcept {
    swap(other);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Interval::swap(Interval& other) noexcept {
    std::swap(precision_, other.precision_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval Interval::exact(const Rational& q, long precision) {
    Interval r(precision);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::log_of(const Integer& positive, long precision) {
    if (positive <= 0) throw DomainError("log of a non-positive integer");
    Interval r(precision);
    mpfr_t tmp;
    mpfr_init2(tmp, std::max<long>(precision, static_cast<long>(mpz_sizeinbase(positive.get_mpz_t(), 2)) + 2));
    mpfr_set_z(tmp, positive.get_mpz_t(), MPFR_RNDN);  // exact: precision covers the bit length
    mpfr_log(r.lo_, tmp, MPFR_RNDD);
    mpfr_log(r.hi_, tmp, MPFR_RNDU);
    mpfr_clear(tmp);
    return r;
}

Interval Interval::log_of(const Rational& positive, long precision) {
    if (positive <= 0) throw DomainError("log of a non-positive rational");
    return log_of(positive.get_num(), precision) - log_of(positive.get_den(), precision);
}

Interval Interval::operator+(const Interval& rhs) const {
    Interval r(std::max(precision_, rhs.precision_));
    mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& rhs) const {
    Interval r(std::max(precision_, rhs.precision_));
    mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(precision_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& rhs) const {
    Interval r(std::max(precision_, rhs.precision_));
    mpfr_t cand;
    mpfr_init2(cand, r.precision_);
    std::array<mpfr_srcptr, 2> a{lo_, hi_};
    std::array<mpfr_srcptr, 2> b{rhs.lo_, rhs.hi_};
    bool first = true;
    for (auto x : a) {
        for (auto y : b) {
            mpfr_mul(cand, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(cand, r.lo_)) mpfr_set(r.lo_, cand, MPFR_RNDD);
            mpfr_mul(cand, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(cand, r.hi_)) mpfr_set(r.hi_, cand, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(cand);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw DomainError("sqrt of an interval reaching below zero");
    Interval r(precision_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Sign Interval::strict_sign() const {
    if (mpfr_sgn(lo_) > 0) return Sign::positive;
    if (mpfr_sgn(hi_) < 0) return Sign::negative;
    return Sign::zero;
}

double Interval::midpoint_double() const {
    mpfr_t mid;
    mpfr_init2(mid, precision_ + 1);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    double d = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return d;
}

std::string Interval::midpoint_string(int digits) const {
    mpfr_t mid;
    mpfr_init2(mid, precision_ + 1);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, mid);
    std::string out(buf);
    mpfr_free_str(buf);
    mpfr_clear(mid);
    return out;
}

Sign certified_sign(const std::function<Interval(long)>& enclose, long start_precision, long max_precision) {
    for (long prec = start_precision; prec <= max_precision; prec *= 2) {
        Sign s = enclose(prec).strict_sign();
        if (s != Sign::zero) return s;
    }
    throw std::runtime_error("certified_sign: precision limit reached without separating from zero");
}

}  // namespace gcdlab
