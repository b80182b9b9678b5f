#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exdiv/fields.hpp"
#include "exdiv/ideal.hpp"

namespace exdiv {

using BigRat = boost::multiprecision::cpp_rational;

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

std::string relation_symbol(Relation r);
bool compare(const BigRat& lhs, Relation rel, const BigRat& rhs);

/// Verdict for one claim instance. A chained claim lhs R1 mid R2 rhs uses
/// `mid` and `upper_relation`; `relation` is then the lower link.
struct InequalityReport {
    std::string claim_id;
    std::string witness;
    BigRat lhs;
    BigRat rhs;
    std::optional<BigRat> mid;
    Relation relation = Relation::LessEq;
    std::optional<Relation> upper_relation;
    bool holds = false;
    bool is_equality = false;
};

/// Re-derives `holds` from the stored values and relations.
bool recompute_holds(const InequalityReport& r);

InequalityReport make_report(std::string claim_id, std::string witness, BigRat lhs,
                             Relation rel, BigRat rhs);
InequalityReport make_chain_report(std::string claim_id, std::string witness, BigRat lhs,
                                   Relation lower, BigRat mid, Relation upper, BigRat rhs);

// Sandor: 2^omega(n) <= tau_e(n) <= 2^Omega(n) for perfect squares n >= 4.
InequalityReport check_sandor(std::uint64_t n);

// 2^omega(I^2) <= tau_e(I^2) < 2^Omega(I^2) for nonunit I.
InequalityReport check_prop_2_2(const FactoredIdeal& I);

// tau(n) <= 2^(n-1).
InequalityReport check_prop_2_3(std::uint64_t n);

// 2^omega(I^2) <= tau_e(I^2) <= 2^(Omega(I^2) - omega(I^2)) for nonunit I.
InequalityReport check_prop_2_4(const FactoredIdeal& I);

// (m+1)^n + 1 >= tau(m)^n + 2^n for m >= 2, n >= 0.
InequalityReport check_prop_2_5(std::uint64_t m, std::uint64_t n);

// tau(n) + 1 >= tau_e(n) + tau_star(n).
InequalityReport check_prop_2_6(std::uint64_t n);

/// tau(pO_K) + 1 vs tau_e(pO_K) + 2^omega(pO_K), with the relation picked
/// from the case analysis: equality when unramified or degree 2, strict >
/// when totally ramified with degree >= 3, >= otherwise (ramified Galois).
InequalityReport classify_prime_claim(const SplittingType& split, const FactoredIdeal& I);

// tau(n) >= tau_e(n) + (tau(n)/omega(n)) * sum 1/(a_i+1), n >= 2.
InequalityReport check_thm_2_11(std::uint64_t n);

// (e+1)^g >= tau(e)^g + (e+1)^(g-1); equality iff (e,g) in {(1,1),(2,1)}.
InequalityReport check_thm_2_12(std::uint64_t e, std::uint64_t g);

// e/(e+1) >= tau(e)^g/(e+1)^g + 1/(e+1), for e >= 3.
// When n != 0 it must be the (odd) extension degree, divisible by e*g.
InequalityReport check_thm_2_13(std::uint64_t e, std::uint64_t g, std::uint64_t n = 0);

struct SweepRange {
    std::uint64_t max_n = 0;    // integer sweeps (upper bound on n)
    std::uint64_t max_m = 0;    // sandor: sqrt bound; prop_2_5: base bound
    std::uint64_t max_e = 0;    // exponent/ramification bound
    std::uint64_t max_g = 0;    // number of prime ideals bound
    std::uint64_t max_exp = 0;  // ideal-grid exponent bound; prop_2_5 power bound
    std::uint64_t max_d = 0;    // quadratic |d| bound
    std::uint64_t max_p = 0;    // prime bound
    std::uint64_t max_cyc_n = 0;
    std::uint64_t max_cyc_p = 0;
};

struct SweepResult {
    std::vector<InequalityReport> violations;
    std::vector<InequalityReport> equalities;  // filled for thm_* claims only
    std::uint64_t equality_count = 0;
    std::uint64_t checked = 0;
};

extern const std::vector<std::string> known_claims;

/// Default ranges per claim (the acceptance ranges).
SweepRange default_range(const std::string& claim_id);

/// Throws std::invalid_argument for an unknown claim id.
SweepResult sweep(const std::string& claim_id, const SweepRange& range);

}  // namespace exdiv
