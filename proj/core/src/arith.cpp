#include "exdiv/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace exdiv {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs (Sinclair).
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    // Brent's cycle detection with batched gcds.
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
        const std::uint64_t m = 128;
        std::uint64_t r = 1;
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            for (std::uint64_t k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, std::uint32_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    std::map<std::uint64_t, std::uint32_t> exps;
    while (n % 2 == 0) {
        ++exps[2];
        n /= 2;
    }
    for (std::uint64_t q = 3; q < 65536 && q * q <= n; q += 2) {
        while (n % q == 0) {
            ++exps[q];
            n /= q;
        }
    }
    if (n > 1) {
        if (n < 65536ULL * 65536ULL || is_prime(n)) {
            ++exps[n];
        } else {
            factor_into(n, exps);
        }
    }
    Factorization f;
    f.pairs.reserve(exps.size());
    for (auto [p, a] : exps) f.pairs.push_back({p, a});
    return f;
}

std::uint64_t Factorization::value() const {
    std::uint64_t n = 1;
    for (const auto& [p, a] : pairs)
        for (std::uint32_t i = 0; i < a; ++i) n *= p;
    return n;
}

std::uint64_t tau(const Factorization& f) {
    std::uint64_t t = 1;
    for (const auto& [p, a] : f.pairs) t *= a + 1;
    return t;
}

std::uint64_t tau(std::uint64_t n) { return tau(factorize(n)); }

std::uint64_t tau_star(std::uint64_t n) { return std::uint64_t{1} << omega(n); }

std::uint64_t tau_e(const Factorization& f) {
    std::uint64_t t = 1;
    for (const auto& [p, a] : f.pairs) t *= tau(std::uint64_t{a});
    return t;
}

std::uint64_t tau_e(std::uint64_t n) { return tau_e(factorize(n)); }

std::uint64_t omega(std::uint64_t n) {
    if (n == 0) throw std::domain_error("omega: n must be positive");
    return factorize(n).pairs.size();
}

std::uint64_t big_omega(std::uint64_t n) {
    std::uint64_t s = 0;
    for (const auto& [p, a] : factorize(n).pairs) s += a;
    return s;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    for (const auto& [p, a] : factorize(n).pairs) {
        phi *= p - 1;
        for (std::uint32_t i = 1; i < a; ++i) phi *= p;
    }
    return phi;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    if (p == 2 || !is_prime(p))
        throw std::domain_error("legendre_symbol: p must be an odd prime");
    std::int64_t sp = static_cast<std::int64_t>(p);
    std::uint64_t r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n < 2) throw std::domain_error("multiplicative_order: n must be >= 2");
    a %= n;
    if (std::gcd(a, n) != 1)
        throw std::domain_error("multiplicative_order: gcd(a, n) must be 1");
    std::uint64_t t = euler_phi(n);
    for (const auto& [q, e] : factorize(t).pairs) {
        for (std::uint32_t i = 0; i < e && t % q == 0; ++i) {
            if (pow_mod(a, t / q, n) == 1)
                t /= q;
            else
                break;
        }
    }
    return t;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    auto f = factorize(n);
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, a] : f.pairs) {
        std::size_t old = ds.size();
        std::uint64_t pk = 1;
        for (std::uint32_t k = 1; k <= a; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < old; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<std::uint64_t> exponential_divisors(std::uint64_t n) {
    auto f = factorize(n);
    // n = 1: [1] by convention
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, a] : f.pairs) {
        std::vector<std::uint64_t> next;
        for (std::uint32_t b = 1; b <= a; ++b) {
            if (a % b != 0) continue;
            std::uint64_t pb = 1;
            for (std::uint32_t i = 0; i < b; ++i) pb *= p;
            for (std::uint64_t d : ds) next.push_back(d * pb);
        }
        ds = std::move(next);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool is_squarefree(std::int64_t d) {
    if (d == 0) throw std::domain_error("is_squarefree: d must be nonzero");
    std::uint64_t n = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
    for (const auto& [p, a] : factorize(n).pairs)
        if (a > 1) return false;
    return true;
}

}  // namespace exdiv
