#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "exdiv/arith.hpp"

namespace exdiv {

using BigInt = boost::multiprecision::cpp_int;

struct PrimeIdealLabel {
    std::uint32_t index = 0;
    std::string description;  // optional generator string, e.g. "(2, 1+sqrt(d))"

    friend bool operator==(const PrimeIdealLabel& a, const PrimeIdealLabel& b) {
        return a.index == b.index;
    }
};

struct IdealFactor {
    PrimeIdealLabel label;
    std::uint64_t exponent = 1;
};

/// Symbolic factored ideal: distinct prime-ideal labels with positive
/// exponents, sorted by index. Empty factor list is the unit ideal.
struct FactoredIdeal {
    std::vector<IdealFactor> factors;
    std::string field_tag;

    bool is_unit() const { return factors.empty(); }
};

bool operator==(const FactoredIdeal& a, const FactoredIdeal& b);

/// Validates: exponents >= 1, indices distinct and strictly increasing.
/// Throws std::invalid_argument on violation.
FactoredIdeal make_ideal(std::vector<IdealFactor> factors, std::string field_tag = {});

/// Labels P_1..P_r for the primes of n, exponents from the factorization.
FactoredIdeal ideal_from_factorization(const Factorization& f, std::string field_tag = "Z");

BigInt tau_ideal(const FactoredIdeal& I);
BigInt tau_e_ideal(const FactoredIdeal& I);
std::uint64_t omega_ideal(const FactoredIdeal& I);
std::uint64_t big_omega_ideal(const FactoredIdeal& I);

FactoredIdeal ideal_pow(const FactoredIdeal& I, std::uint64_t k);

/// All P_1^{a_1}...P_g^{a_g} with 0 <= a_i <= e_i (zero exponents dropped),
/// in lexicographic order of exponent vectors. Refuses tau_ideal(I) > 2^20.
std::vector<FactoredIdeal> enumerate_ideal_divisors(const FactoredIdeal& I);

/// All P_1^{b_1}...P_g^{b_g} with b_i >= 1 and b_i | e_i; full support kept.
std::vector<FactoredIdeal> enumerate_ideal_exp_divisors(const FactoredIdeal& I);

/// Canonical text form "P1^2*P2^1"; "(1)" for the unit ideal.
std::string to_text(const FactoredIdeal& I);

}  // namespace exdiv
