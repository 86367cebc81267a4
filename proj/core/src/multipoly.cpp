#include "gcdlab/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gcdlab {

// ---------------------------------------------------------------- MultiIndex

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i, int power) {
    MultiIndex m = zero(n);
    m.exps_.at(i) = power;
    return m;
}

long MultiIndex::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

bool MultiIndex::is_nonnegative() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e >= 0; });
}

bool MultiIndex::divides(const MultiIndex& other) const {
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] > other.exps_[k]) return false;
    }
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& rhs) const {
    MultiIndex out = *this;
    for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] += rhs.exps_[k];
    return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& rhs) const {
    MultiIndex out = *this;
    for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] -= rhs.exps_[k];
    return out;
}

bool GrLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
    long da = a.degree();
    long db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

std::vector<MultiIndex> monomials_of_degree(std::size_t n, long degree) {
    std::vector<MultiIndex> out;
    if (degree < 0) return out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
        if (pos + 1 == n) {
            cur[pos] = static_cast<int>(left);
            out.emplace_back(cur);
            return;
        }
        for (long e = 0; e <= left; ++e) {
            cur[pos] = static_cast<int>(e);
            self(self, pos + 1, left - e);
        }
    };
    if (n == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrLex{});
    return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t n, long max_degree) {
    std::vector<MultiIndex> out;
    for (long d = 0; d <= max_degree; ++d) {
        auto layer = monomials_of_degree(n, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// ------------------------------------------------------------ shared helpers

namespace {

void add_into(TermMap& terms, const MultiIndex& i, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

TermMap multiply(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ia, ca] : a) {
        for (const auto& [ib, cb] : b) add_into(out, ia + ib, ca * cb);
    }
    return out;
}

Rational eval_terms(const TermMap& terms, std::size_t nvars, std::span<const Rational> point) {
    if (point.size() != nvars) throw DomainError("evaluation point has the wrong dimension");
    Rational sum = 0;
    for (const auto& [i, c] : terms) {
        Rational term = c;
        for (std::size_t k = 0; k < nvars; ++k) {
            if (i[k] == 0) continue;
            if (i[k] < 0 && point[k] == 0) throw DomainError("zero coordinate under a negative exponent");
            term *= pow(point[k], i[k]);
        }
        sum += term;
    }
    return sum;
}

std::string format_terms(const TermMap& terms, int first_index) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [i, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < i.size(); ++k) {
            if (i[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(static_cast<int>(k) + first_index);
            if (i[k] != 1) mono += "^" + std::to_string(i[k]);
        }
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
        first = false;
    }
    return out;
}

class TermParser {
public:
    TermParser(std::string_view text, std::size_t nvars, int first_index, bool allow_negative)
        : text_(text), nvars_(nvars), first_index_(first_index), allow_negative_(allow_negative) {}

    TermMap parse() {
        TermMap terms;
        skip();
        if (pos_ >= text_.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= text_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [mono, coeff] = term();
            add_into(terms, mono, coeff * sign);
            first = false;
        }
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("polynomial parse error at position " + std::to_string(pos_) + ": " + what + " in '" +
                          std::string(text_) + "'");
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::pair<MultiIndex, Rational> term() {
        MultiIndex mono = MultiIndex::zero(nvars_);
        Rational coeff = 1;
        while (true) {
            skip();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = digits();
                if (peek() == '/') {
                    ++pos_;
                    num += "/" + digits();
                }
                coeff *= parse_rational(num);
            } else if (c == 'x') {
                ++pos_;
                long idx = std::stol(digits()) - first_index_;
                if (idx < 0 || static_cast<std::size_t>(idx) >= nvars_) fail("variable out of range");
                int power = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    bool paren = peek() == '(';
                    if (paren) ++pos_;
                    int s = 1;
                    if (peek() == '-') {
                        if (!allow_negative_) fail("negative exponent in a polynomial");
                        s = -1;
                        ++pos_;
                    }
                    power = s * std::stoi(digits());
                    if (paren) {
                        if (peek() != ')') fail("expected ')'");
                        ++pos_;
                    }
                }
                mono[static_cast<std::size_t>(idx)] += power;
            } else {
                fail(c == '\0' ? "unexpected end of input" : std::string("unknown symbol '") + c + "'");
            }
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        return {mono, coeff};
    }

    std::string_view text_;
    std::size_t nvars_;
    int first_index_;
    bool allow_negative_;
    std::size_t pos_ = 0;
};

}  // namespace

// ----------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    add_into(p.terms_, MultiIndex::zero(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
    return monomial(MultiIndex::unit(nvars, i), 1);
}

MultiPoly MultiPoly::monomial(const MultiIndex& i, const Rational& c) {
    if (!i.is_nonnegative()) throw DomainError("polynomial monomial with a negative exponent");
    MultiPoly p(i.size());
    add_into(p.terms_, i, c);
    return p;
}

MultiPoly MultiPoly::parse(std::string_view text, std::size_t nvars, int first_index) {
    MultiPoly p(nvars);
    p.terms_ = TermParser(text, nvars, first_index, false).parse();
    return p;
}

void MultiPoly::add_term(const MultiIndex& i, const Rational& c) { add_into(terms_, i, c); }

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

long MultiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

long MultiPoly::degree_in(std::size_t var) const {
    long d = terms_.empty() ? -1 : 0;
    for (const auto& [i, c] : terms_) d = std::max<long>(d, i[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational MultiPoly::coefficient(const MultiIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(MultiIndex::zero(nvars_)); }

const std::pair<const MultiIndex, Rational>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return *terms_.rbegin();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (rhs.nvars_ != nvars_) throw DomainError("polynomials in different rings");
    for (const auto& [i, c] : rhs.terms_) add_into(terms_, i, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    if (rhs.nvars_ != nvars_) throw DomainError("polynomials in different rings");
    for (const auto& [i, c] : rhs.terms_) add_into(terms_, i, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("polynomials in different rings");
    MultiPoly out(a.nvars_);
    out.terms_ = multiply(a.terms_, b.terms_);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    out *= -1;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(nvars_, 1);
    MultiPoly base = *this;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::shifted(const MultiIndex& i) const {
    MultiPoly out(nvars_);
    for (const auto& [j, c] : terms_) out.terms_.emplace(j + i, c);
    return out;
}

Rational MultiPoly::eval(std::span<const Rational> point) const { return eval_terms(terms_, nvars_, point); }

MultiPoly MultiPoly::homogenize() const {
    if (terms_.empty()) throw DomainError("cannot homogenize the zero polynomial");
    long d = total_degree();
    MultiPoly out(nvars_ + 1);
    for (const auto& [i, c] : terms_) {
        std::vector<int> e{static_cast<int>(d - i.degree())};
        e.insert(e.end(), i.begin(), i.end());
        out.add_term(MultiIndex(std::move(e)), c);
    }
    return out;
}

MultiPoly MultiPoly::dehomogenize(std::size_t var) const {
    if (var >= nvars_ || nvars_ < 2) throw DomainError("dehomogenize: bad variable");
    MultiPoly out(nvars_ - 1);
    for (const auto& [i, c] : terms_) {
        std::vector<int> e;
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (k != var) e.push_back(i[k]);
        }
        out.add_term(MultiIndex(std::move(e)), c);
    }
    return out;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
    if (divisor.nvars_ != nvars_) throw DomainError("polynomials in different rings");
    const auto& [lead_i, lead_c] = divisor.leading_term();
    MultiPoly quotient(nvars_);
    MultiPoly rest = *this;
    while (!rest.is_zero()) {
        const auto [ri, rc] = rest.leading_term();
        if (!lead_i.divides(ri)) throw DomainError("polynomial division is not exact");
        MultiIndex q_i = ri - lead_i;
        Rational q_c = rc / lead_c;
        quotient.add_term(q_i, q_c);
        rest -= divisor.shifted(q_i) * q_c;
    }
    return quotient;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * Rational(1 / leading_term().second);
}

std::string MultiPoly::to_string(int first_index) const { return format_terms(terms_, first_index); }

bool vanishes_at_origin(const MultiPoly& f) { return f.constant_term() == 0; }

// --------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const MultiPoly& p) : nvars_(p.nvars()), terms_(p.terms()) {}

LaurentPoly LaurentPoly::monomial(const MultiIndex& i, const Rational& c) {
    LaurentPoly p(i.size());
    add_into(p.terms_, i, c);
    return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t nvars, int first_index) {
    LaurentPoly p(nvars);
    p.terms_ = TermParser(text, nvars, first_index, true).parse();
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.nvars_ != nvars_) throw DomainError("Laurent polynomials in different rings");
    for (const auto& [i, c] : rhs.terms_) add_into(terms_, i, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    if (rhs.nvars_ != nvars_) throw DomainError("Laurent polynomials in different rings");
    for (const auto& [i, c] : rhs.terms_) add_into(terms_, i, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("Laurent polynomials in different rings");
    LaurentPoly out(a.nvars_);
    out.terms_ = multiply(a.terms_, b.terms_);
    return out;
}

Rational LaurentPoly::eval(std::span<const Rational> point) const { return eval_terms(terms_, nvars_, point); }

std::string LaurentPoly::to_string(int first_index) const { return format_terms(terms_, first_index); }

LaurentNormalForm laurent_normalize(const LaurentPoly& f) {
    if (f.is_zero()) throw DomainError("laurent_normalize of zero");
    const std::size_t n = f.nvars();
    std::vector<int> low = f.terms().begin()->first.exponents();
    for (const auto& [i, c] : f.terms()) {
        for (std::size_t k = 0; k < n; ++k) low[k] = std::min(low[k], i[k]);
    }
    MultiIndex shift(low);
    MultiPoly f0(n);
    for (const auto& [i, c] : f.terms()) f0 += MultiPoly::monomial(i - shift, c);
    return {shift, f0};
}

}  // namespace gcdlab
