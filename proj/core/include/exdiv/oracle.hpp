#pragma once

#include <cstdint>
#include <vector>

#include "exdiv/fields.hpp"

namespace exdiv {
namespace oracle {

// Brute-force re-derivations, kept independent of the closed-form paths.

/// Divisor count by trial (paired scan up to sqrt(n)).
std::uint64_t brute_tau(std::uint64_t n);

/// Exponential divisors by filtering all divisors of n, n >= 2.
std::vector<std::uint64_t> brute_exponential_divisors(std::uint64_t n);

/// Splitting of p in Q(sqrt(d)) by counting roots of the minimal polynomial
/// of the integral generator mod p.
SplittingType dedekind_quadratic_oracle(std::int64_t d, std::uint64_t p);

/// Multiplicative order by linear scan.
std::uint64_t brute_order(std::uint64_t a, std::uint64_t n);

/// l-power residue character via brute_order.
CharacterValue brute_character(std::uint64_t l, std::int64_t mu, std::uint64_t p);

}  // namespace oracle
}  // namespace exdiv
