#pragma once

#include <cstdint>
#include <vector>

namespace exdiv {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: pairs sorted strictly ascending by prime,
/// empty for 1.
struct Factorization {
    std::vector<PrimePower> pairs;

    std::uint64_t value() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Deterministic for all 64-bit inputs (fixed Miller-Rabin witness set).
bool is_prime(std::uint64_t n);

/// Trial division below 2^16, then Pollard rho on the cofactor.
/// Throws std::domain_error for n = 0.
Factorization factorize(std::uint64_t n);

std::uint64_t tau(std::uint64_t n);
std::uint64_t tau(const Factorization& f);
std::uint64_t tau_star(std::uint64_t n);
std::uint64_t tau_e(std::uint64_t n);
std::uint64_t tau_e(const Factorization& f);
std::uint64_t omega(std::uint64_t n);
std::uint64_t big_omega(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Euler's criterion; requires p an odd prime.
int legendre_symbol(std::int64_t a, std::uint64_t p);

/// Least f >= 1 with a^f = 1 (mod n); requires gcd(a, n) = 1, n >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> exponential_divisors(std::uint64_t n);

bool is_squarefree(std::int64_t d);

}  // namespace exdiv
