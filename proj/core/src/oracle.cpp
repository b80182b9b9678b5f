#include "exdiv/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <stdexcept>

namespace exdiv {
namespace oracle {

namespace {

// Local trial factorization, deliberately separate from arith::factorize.
std::map<std::uint64_t, std::uint64_t> trial_factor(std::uint64_t n) {
    std::map<std::uint64_t, std::uint64_t> f;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        while (n % q == 0) {
            ++f[q];
            n /= q;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

}  // namespace

std::uint64_t brute_tau(std::uint64_t n) {
    if (n == 0) throw std::domain_error("brute_tau: n must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        count += (d * d == n) ? 1 : 2;
    }
    return count;
}

std::vector<std::uint64_t> brute_exponential_divisors(std::uint64_t n) {
    if (n < 2) throw std::domain_error("brute_exponential_divisors: n must be >= 2");
    auto fn = trial_factor(n);
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    std::vector<std::uint64_t> ds = small;
    ds.insert(ds.end(), large.rbegin(), large.rend());

    std::vector<std::uint64_t> out;
    for (std::uint64_t d : ds) {
        auto fd = trial_factor(d);
        if (fd.size() != fn.size()) continue;  // support must match
        bool ok = true;
        for (const auto& [p, a] : fn) {
            auto it = fd.find(p);
            if (it == fd.end() || a % it->second != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(d);
    }
    return out;
}

SplittingType dedekind_quadratic_oracle(std::int64_t d, std::uint64_t p) {
    if (d == 0 || d == 1)
        throw std::domain_error("dedekind_quadratic_oracle: d must not be 0 or 1");
    std::int64_t sp = static_cast<std::int64_t>(p);
    // Minimal polynomial of the integral generator: x^2 - x + (1-d)/4 when
    // d = 1 (mod 4), else x^2 - d. The generator has index 1, so root
    // counting mod p is valid for every p including 2.
    std::int64_t b, c;
    if (((d % 4) + 4) % 4 == 1) {
        b = -1;
        c = (1 - d) / 4;
    } else {
        b = 0;
        c = -d;
    }
    std::uint64_t roots = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::int64_t sx = static_cast<std::int64_t>(x);
        std::int64_t v = ((sx * sx + b * sx + c) % sp + sp) % sp;
        if (v == 0) ++roots;
    }
    if (roots == 2) return SplittingType{1, 1, 2, 2};  // split
    if (roots == 1) return SplittingType{2, 1, 1, 2};  // double root: ramified
    return SplittingType{1, 2, 1, 2};                  // irreducible: inert
}

std::uint64_t brute_order(std::uint64_t a, std::uint64_t n) {
    if (n < 2) throw std::domain_error("brute_order: n must be >= 2");
    a %= n;
    if (std::gcd(a, n) != 1) throw std::domain_error("brute_order: gcd(a, n) must be 1");
    std::uint64_t x = a % n;
    std::uint64_t f = 1;
    while (x != 1) {
        x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % n);
        ++f;
    }
    return f;
}

CharacterValue brute_character(std::uint64_t l, std::int64_t mu, std::uint64_t p) {
    if (l == 2 || brute_tau(l) != 2)
        throw std::domain_error("brute_character: l must be an odd prime");
    if (p == l) throw std::domain_error("brute_character: p = l is out of scope");
    if (brute_tau(p) != 2) throw std::domain_error("brute_character: p must be prime");
    if (brute_order(p % l, l) != l - 1)
        throw std::domain_error("brute_character: non-inert base prime: out of scope");
    std::int64_t sp = static_cast<std::int64_t>(p);
    std::uint64_t r = static_cast<std::uint64_t>(((mu % sp) + sp) % sp);
    if (r == 0) return CharacterValue::Zero;
    using boost::multiprecision::cpp_int;
    cpp_int q = 1;
    for (std::uint64_t i = 0; i + 1 < l; ++i) q *= p;
    cpp_int m = (q - 1) / l;
    return m % brute_order(r, p) == 0 ? CharacterValue::One
                                      : CharacterValue::NontrivialRoot;
}

}  // namespace oracle
}  // namespace exdiv
