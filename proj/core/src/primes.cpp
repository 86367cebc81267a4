#include "gcdlab/primes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gcdlab {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr std::uint32_t kTrialLimit = 1u << 12;
constexpr long kRhoBudget = 1L << 13;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 rho_u64(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(u64 n, std::map<Integer, long>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[from_u64(n)] += 1;
        return;
    }
    u64 d = rho_u64(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

// Floyd rho on big integers with batched gcds and a bounded number of steps.
// Returns 0 when no nontrivial divisor was found within the budget.
Integer rho_big(const Integer& n) {
    constexpr long kBatch = 64;
    for (unsigned long c = 1; c <= 3; ++c) {
        Integer x = 2, y = 2, d = 1, diff, q;
        for (long step = 0; step < kRhoBudget && d == 1; step += kBatch) {
            const Integer x0 = x, y0 = y;
            q = 1;
            for (long i = 0; i < kBatch; ++i) {
                x = (x * x + c) % n;
                y = (y * y + c) % n;
                y = (y * y + c) % n;
                diff = abs(x - y);
                q = (q * diff) % n;
            }
            mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            if (d == n) {
                // Replay the batch one step at a time.
                x = x0;
                y = y0;
                d = 1;
                for (long i = 0; i < kBatch && d == 1; ++i) {
                    x = (x * x + c) % n;
                    y = (y * y + c) % n;
                    y = (y * y + c) % n;
                    diff = abs(x - y);
                    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
                }
            }
        }
        if (d != 1 && d != n) return d;
    }
    return 0;
}

// Splits a cofactor free of small primes into pieces; pieces may share factors
// and are refined by the caller.
void split_big(const Integer& n, std::vector<std::pair<Integer, bool>>& pieces) {
    if (n == 1) return;
    if (fits_u64(n)) {
        std::map<Integer, long> tmp;
        factor_u64(to_u64(n), tmp);
        for (const auto& [p, e] : tmp) {
            for (long i = 0; i < e; ++i) pieces.emplace_back(p, true);
        }
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        pieces.emplace_back(n, mpz_probab_prime_p(n.get_mpz_t(), 30) == 2);
        return;
    }
    Integer d = rho_big(n);
    if (d == 0) {
        pieces.emplace_back(n, false);
        return;
    }
    split_big(d, pieces);
    split_big(n / d, pieces);
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_certified_prime(const Integer& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) == 2;
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint32_t j = i * i; j < kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

long multiplicity(const Integer& n, const Integer& base) {
    if (n == 0) throw DomainError("multiplicity of zero");
    if (base <= 1) throw DomainError("multiplicity requires base > 1");
    Integer m = abs(n);
    long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), base.get_mpz_t()) != 0) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), base.get_mpz_t());
        ++e;
    }
    return e;
}

std::vector<Integer> coprime_base(std::span<const Integer> values) {
    std::vector<Integer> work;
    for (const auto& v : values) {
        if (v > 1) work.push_back(v);
    }
    auto dedup = [&] {
        std::sort(work.begin(), work.end());
        work.erase(std::unique(work.begin(), work.end()), work.end());
    };
    dedup();
    bool changed = true;
    Integer g;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                mpz_gcd(g.get_mpz_t(), work[i].get_mpz_t(), work[j].get_mpz_t());
                if (g == 1) continue;
                Integer a = work[i] / g;
                Integer b = work[j] / g;
                work[i] = g;
                work[j] = 1;
                work.push_back(a);
                work.push_back(b);
                std::erase_if(work, [](const Integer& z) { return z <= 1; });
                dedup();
                changed = true;
            }
        }
    }
    return work;
}

std::vector<Factor> factorize(const Integer& n) {
    if (n == 0) throw DomainError("factorize(0)");
    Integer m = abs(n);
    std::map<Integer, long> primes;
    if (fits_u64(m)) {
        factor_u64(to_u64(m), primes);
        std::vector<Factor> out;
        for (const auto& [p, e] : primes) out.push_back({p, e, true});
        return out;
    }
    for (std::uint32_t p : small_primes()) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
        long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        primes[Integer(p)] = e;
        if (m == 1) break;
    }
    std::vector<std::pair<Integer, bool>> pieces;
    split_big(m, pieces);

    std::vector<Integer> raw;
    for (const auto& piece : pieces) raw.push_back(piece.first);
    std::vector<Integer> base = coprime_base(raw);

    std::vector<Factor> out;
    for (const auto& [p, e] : primes) out.push_back({p, e, true});
    for (const auto& b : base) {
        long e = multiplicity(m, b);
        bool prime = std::any_of(pieces.begin(), pieces.end(),
                                 [&](const auto& piece) { return piece.second && piece.first == b; });
        out.push_back({b, e, prime || is_certified_prime(b)});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.base < b.base; });
    return out;
}

}  // namespace gcdlab
