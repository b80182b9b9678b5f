#pragma once

#include <cstdint>
#include <utility>

#include "exdiv/ideal.hpp"

namespace exdiv {

struct QuadraticField {
    std::int64_t d = 0;             // squarefree, not 0 or 1
    std::int64_t discriminant = 0;  // d if d = 1 (mod 4), else 4d
};

struct CyclotomicField {
    std::uint64_t n = 0;       // n >= 3
    std::uint64_t degree = 0;  // phi(n)
};

struct KummerField {
    std::uint64_t l = 0;  // odd prime
    std::int64_t mu = 0;  // nonzero
};

/// (e, f, g) for a rational prime in a Galois extension of degree n; efg = n.
struct SplittingType {
    std::uint64_t e = 1;
    std::uint64_t f = 1;
    std::uint64_t g = 1;
    std::uint64_t n = 1;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

enum class CharacterValue { Zero, One, NontrivialRoot };

std::int64_t quadratic_discriminant(std::int64_t d);

QuadraticField make_quadratic_field(std::int64_t d);
CyclotomicField make_cyclotomic_field(std::uint64_t n);
KummerField make_kummer_field(std::uint64_t l, std::int64_t mu);

std::pair<SplittingType, FactoredIdeal> split_quadratic(const QuadraticField& K,
                                                        std::uint64_t p);

bool is_ramified(const QuadraticField& K, std::uint64_t p);
/// Only Q(zeta_q) with q an odd prime is supported.
bool is_ramified(const CyclotomicField& K, std::uint64_t p);

/// Requires p prime and either p not dividing n, or n = p (odd prime).
std::pair<SplittingType, FactoredIdeal> split_cyclotomic(const CyclotomicField& K,
                                                         std::uint64_t p);

/// Value of the l-power character (mu / pZ[zeta_l])_l for a rational prime p
/// with pZ[zeta_l] prime, i.e. ord(p mod l) = l - 1.
CharacterValue power_residue_character(const KummerField& K, std::uint64_t p);

/// Decomposition of pO_L over Q(zeta_l) in the degree-l Kummer extension.
std::pair<SplittingType, FactoredIdeal> split_kummer(const KummerField& K,
                                                     std::uint64_t p);

}  // namespace exdiv
