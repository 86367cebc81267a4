#include "gcdlab/lrs.hpp"

#include "gcdlab/heights.hpp"
#include "gcdlab/linalg.hpp"
#include "gcdlab/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace gcdlab {

namespace {

void trim(IndexPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IndexPoly poly_add(const IndexPoly& a, const IndexPoly& b) {
    IndexPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

IndexPoly poly_mul(const IndexPoly& a, const IndexPoly& b) {
    if (a.empty() || b.empty()) return {};
    IndexPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

IndexPoly poly_scale(IndexPoly p, const Rational& c) {
    for (auto& x : p) x *= c;
    trim(p);
    return p;
}

Rational poly_eval(const IndexPoly& p, const Rational& n) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * n + *it;
    return acc;
}

// p(a t + b) as a polynomial in t.
IndexPoly poly_compose_linear(const IndexPoly& p, long a, long b) {
    const IndexPoly lin{Rational(b), Rational(a)};
    IndexPoly acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = poly_add(poly_mul(acc, lin), IndexPoly{*it});
    return acc;
}

std::string rational_token(const Rational& q) { return to_string(q); }

// Coefficient polynomial in n, descending powers, e.g. "2*n^2 - n + 1/2".
std::string index_poly_string(const IndexPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Rational& c = p[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << rational_token(mag);
            continue;
        }
        if (mag != 1) os << rational_token(mag) << "*";
        os << "n";
        if (k > 1) os << "^" << k;
    }
    return first ? "0" : os.str();
}

std::string root_power_string(const Rational& root) {
    if (root > 0 && root.get_den() == 1) return to_string(root) + "^n";
    return "(" + to_string(root) + ")^n";
}

}  // namespace

// ------------------------------------------------------------ PowerSum

PowerSum::PowerSum(std::vector<PowerSumTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

void PowerSum::canonicalize() {
    std::map<Rational, IndexPoly> merged;
    for (auto& t : terms_) {
        if (t.root == 0) throw DomainError("power sum root must be nonzero");
        auto& slot = merged[t.root];
        slot = poly_add(slot, t.coeff);
    }
    terms_.clear();
    for (auto& [root, coeff] : merged) {
        trim(coeff);
        if (!coeff.empty()) terms_.push_back({std::move(coeff), root});
    }
}

PowerSum PowerSum::geometric(const Rational& root, const Rational& c) { return PowerSum({{IndexPoly{c}, root}}); }

PowerSum PowerSum::index() { return PowerSum({{IndexPoly{Rational(0), Rational(1)}, Rational(1)}}); }

std::vector<Rational> PowerSum::roots() const {
    std::vector<Rational> out;
    for (const auto& t : terms_) out.push_back(t.root);
    return out;
}

Rational PowerSum::eval(long n) const {
    if (n < 0) throw DomainError("power sums are evaluated at nonnegative indices");
    Rational acc = 0;
    const Rational nn(n);
    for (const auto& t : terms_) acc += poly_eval(t.coeff, nn) * pow(t.root, n);
    return acc;
}

PowerSum& PowerSum::operator+=(const PowerSum& rhs) {
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    canonicalize();
    return *this;
}

PowerSum& PowerSum::operator-=(const PowerSum& rhs) { return *this += -rhs; }

PowerSum PowerSum::operator-() const {
    PowerSum r = *this;
    for (auto& t : r.terms_) t.coeff = poly_scale(t.coeff, -1);
    return r;
}

PowerSum operator*(const PowerSum& a, const PowerSum& b) {
    std::vector<PowerSumTerm> out;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) out.push_back({poly_mul(s.coeff, t.coeff), Rational(s.root * t.root)});
    }
    return PowerSum(std::move(out));
}

PowerSum operator*(const Rational& c, const PowerSum& a) {
    std::vector<PowerSumTerm> out = a.terms_;
    for (auto& t : out) t.coeff = poly_scale(t.coeff, c);
    return PowerSum(std::move(out));
}

PowerSum PowerSum::compose_ap(long a, long b) const {
    if (a < 1 || b < 0) throw DomainError("compose_ap needs a >= 1 and b >= 0");
    std::vector<PowerSumTerm> out;
    for (const auto& t : terms_) {
        out.push_back({poly_scale(poly_compose_linear(t.coeff, a, b), pow(t.root, b)), pow(t.root, a)});
    }
    return PowerSum(std::move(out));
}

std::string PowerSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& t = *it;
        bool negative = false;
        std::string coeff;
        const bool single = std::count_if(t.coeff.begin(), t.coeff.end(), [](const Rational& c) { return c != 0; }) == 1;
        if (single) {
            const Rational lead = t.coeff.back();
            negative = lead < 0;
            coeff = index_poly_string(negative ? poly_scale(t.coeff, -1) : t.coeff);
        } else {
            coeff = "(" + index_poly_string(t.coeff) + ")";
        }
        std::string body;
        if (t.root == 1) {
            body = single ? coeff : coeff.substr(1, coeff.size() - 2);
        } else if (coeff == "1") {
            body = root_power_string(t.root);
        } else {
            body = coeff + "*" + root_power_string(t.root);
        }
        if (first) {
            os << (negative ? "-" : "") << body;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    return os.str();
}

PowerSum add(const PowerSum& F, const PowerSum& G) { return F + G; }
PowerSum mul(const PowerSum& F, const PowerSum& G) { return F * G; }

// ------------------------------------------------------------ from_recurrence

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& f : factorize(n)) {
        if (!f.prime) throw DomainError("characteristic polynomial coefficient could not be factored");
        const std::size_t count = divs.size();
        Integer pk = 1;
        for (long e = 1; e <= f.exponent; ++e) {
            pk *= f.base;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Dense polynomial, little-endian in x.
Rational eval_at(const std::vector<Rational>& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Divides p by (x - r), assuming r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r) {
    std::vector<Rational> q(p.size() - 1);
    Rational carry = 0;
    for (std::size_t k = p.size(); k-- > 1;) {
        carry = carry * r + p[k];
        q[k - 1] = carry;
    }
    return q;
}

}  // namespace

PowerSum PowerSum::from_recurrence(std::span<const Rational> relation, std::span<const Rational> initial) {
    const std::size_t k = relation.size();
    if (k == 0) throw DomainError("empty recurrence relation");
    if (initial.size() != k) throw DomainError("need exactly as many initial values as the recurrence order");
    if (relation.back() == 0) throw DomainError("last recurrence coefficient must be nonzero");

    // x^k - c_1 x^{k-1} - ... - c_k, little-endian, cleared to integers.
    std::vector<Rational> chi(k + 1);
    chi[k] = 1;
    for (std::size_t j = 0; j < k; ++j) chi[k - 1 - j] = -relation[j];
    Integer den_lcm = 1;
    for (const auto& c : chi) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    for (auto& c : chi) c *= den_lcm;

    const Integer lead = chi.back().get_num();
    const Integer tail = chi.front().get_num();
    std::vector<std::pair<Rational, long>> roots;
    std::vector<Rational> rest = chi;
    for (const auto& p : positive_divisors(abs(tail))) {
        for (const auto& q : positive_divisors(abs(lead))) {
            for (int s : {1, -1}) {
                Rational r = make_rational(s * p, q);
                if (std::any_of(roots.begin(), roots.end(), [&](const auto& e) { return e.first == r; })) continue;
                long mult = 0;
                while (rest.size() > 1 && eval_at(rest, r) == 0) {
                    rest = deflate(rest, r);
                    ++mult;
                }
                if (mult > 0) roots.emplace_back(r, mult);
            }
        }
    }
    if (rest.size() != 1) throw DomainError("characteristic polynomial does not split over Q");

    // Unknown c_{r,j} multiplies n^j r^n; match the initial values.
    DenseMatrix A(k);
    for (std::size_t n = 0; n < k; ++n) {
        for (const auto& [r, mult] : roots) {
            const Rational rn = pow(r, static_cast<long>(n));
            Rational nj = 1;
            for (long j = 0; j < mult; ++j) {
                A[n].push_back(nj * rn);
                nj *= static_cast<long>(n);
            }
        }
    }
    auto sol = solve(A, initial);
    if (!sol) throw std::logic_error("initial value system is inconsistent");
    std::vector<PowerSumTerm> terms;
    std::size_t idx = 0;
    for (const auto& [r, mult] : roots) {
        IndexPoly c(sol->begin() + static_cast<long>(idx), sol->begin() + static_cast<long>(idx + mult));
        idx += static_cast<std::size_t>(mult);
        terms.push_back({std::move(c), r});
    }
    return PowerSum(std::move(terms));
}

// ------------------------------------------------------------ degeneracy and zeros

namespace {

long opposite_root_pairs(const PowerSum& F) {
    std::set<Rational> roots;
    for (const auto& t : F.terms()) roots.insert(t.root);
    long pairs = 0;
    for (const auto& r : roots) {
        if (r > 0 && roots.count(Rational(-r))) ++pairs;
    }
    return pairs;
}

}  // namespace

bool is_degenerate(const PowerSum& F) { return opposite_root_pairs(F) > 0; }

ZeroStructure zero_scan(const PowerSum& F, long N) {
    if (N < 0) throw DomainError("scan bound must be nonnegative");
    ZeroStructure out;
    for (long n = 0; n <= N; ++n) {
        if (F.eval(n) == 0) out.zeros.push_back(n);
    }
    const long max_modulus = std::max(1L, 2 * opposite_root_pairs(F));
    for (long M = 1; M <= max_modulus; ++M) {
        for (long r = 0; r < M; ++r) {
            const bool covered = std::any_of(out.progressions.begin(), out.progressions.end(), [&](const Progression& p) {
                return M % p.modulus == 0 && r % p.modulus == p.residue;
            });
            if (!covered && F.compose_ap(M, r).is_zero()) out.progressions.push_back({M, r});
        }
    }
    for (long n : out.zeros) {
        const bool in_progression = std::any_of(out.progressions.begin(), out.progressions.end(),
                                                [&](const Progression& p) { return n % p.modulus == p.residue; });
        if (!in_progression) out.sporadic.push_back(n);
    }
    return out;
}

// ------------------------------------------------------------ S0 and heights

PlaceSet compute_S0(const std::vector<Rational>& rootsF, const std::vector<Rational>& rootsG) {
    std::vector<Rational> all = rootsF;
    all.insert(all.end(), rootsG.begin(), rootsG.end());
    if (all.empty()) throw DomainError("S0 needs at least one root");
    for (const auto& r : all) {
        if (r == 0) throw DomainError("roots must be nonzero");
    }
    const bool arch = std::all_of(all.begin(), all.end(), [](const Rational& r) { return abs(r) < 1; });
    std::set<Integer> primes;
    const Integer first_num = abs(all.front().get_num());
    if (first_num > 1) {
        for (const auto& f : factorize(first_num)) {
            if (!f.prime) throw DomainError("root numerator could not be factored");
            const bool small_everywhere = std::all_of(all.begin(), all.end(),
                                                      [&](const Rational& r) { return valuation(r, f.base) > 0; });
            if (small_everywhere) primes.insert(f.base);
        }
    }
    return PlaceSet(arch, std::move(primes));
}

LogReal monomial_height(const std::vector<Rational>& u, const std::vector<long>& i) {
    if (u.size() != i.size()) throw DomainError("generator and exponent counts differ");
    Rational x = 1;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0) throw DomainError("generators must be nonzero");
        x *= pow(u[j], i[j]);
    }
    return height(x);
}

EmpiricalConstant empirical_height_constant(const std::vector<Rational>& u, long box) {
    if (u.empty() || box < 1) throw DomainError("need generators and a positive box");
    std::optional<EmpiricalConstant> best;
    std::vector<long> i(u.size(), -box);
    while (true) {
        long mx = 0;
        for (long e : i) mx = std::max(mx, std::labs(e));
        if (mx > 0) {
            LogReal value = monomial_height(u, i) * Rational(1, mx);
            if (!best || compare(value, best->value) == Sign::negative) best = EmpiricalConstant{std::move(value), i};
        }
        std::size_t k = 0;
        while (k < i.size() && i[k] == box) i[k++] = -box;
        if (k == i.size()) break;
        ++i[k];
    }
    return *best;
}

}  // namespace gcdlab
