#include "exdiv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace exdiv {

namespace {

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

BigInt pow2(std::uint64_t exp) { return BigInt(1) << exp; }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<bool> sieve(limit + 1, true);
    std::vector<std::uint64_t> ps;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!sieve[i]) continue;
        ps.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return ps;
}

}  // namespace

std::string relation_symbol(Relation r) {
    switch (r) {
        case Relation::Less: return "<";
        case Relation::LessEq: return "<=";
        case Relation::Equal: return "=";
        case Relation::GreaterEq: return ">=";
        case Relation::Greater: return ">";
    }
    return "?";
}

bool compare(const BigRat& lhs, Relation rel, const BigRat& rhs) {
    switch (rel) {
        case Relation::Less: return lhs < rhs;
        case Relation::LessEq: return lhs <= rhs;
        case Relation::Equal: return lhs == rhs;
        case Relation::GreaterEq: return lhs >= rhs;
        case Relation::Greater: return lhs > rhs;
    }
    return false;
}

bool recompute_holds(const InequalityReport& r) {
    if (r.mid) {
        return compare(r.lhs, r.relation, *r.mid) &&
               compare(*r.mid, r.upper_relation.value(), r.rhs);
    }
    return compare(r.lhs, r.relation, r.rhs);
}

InequalityReport make_report(std::string claim_id, std::string witness, BigRat lhs,
                             Relation rel, BigRat rhs) {
    InequalityReport r;
    r.claim_id = std::move(claim_id);
    r.witness = std::move(witness);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.relation = rel;
    r.holds = recompute_holds(r);
    r.is_equality = r.lhs == r.rhs;
    return r;
}

InequalityReport make_chain_report(std::string claim_id, std::string witness, BigRat lhs,
                                   Relation lower, BigRat mid, Relation upper,
                                   BigRat rhs) {
    InequalityReport r;
    r.claim_id = std::move(claim_id);
    r.witness = std::move(witness);
    r.lhs = std::move(lhs);
    r.mid = std::move(mid);
    r.rhs = std::move(rhs);
    r.relation = lower;
    r.upper_relation = upper;
    r.holds = recompute_holds(r);
    r.is_equality = r.lhs == *r.mid && *r.mid == r.rhs;
    return r;
}

InequalityReport check_sandor(std::uint64_t n) {
    std::uint64_t m = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (m * m > n) --m;
    while ((m + 1) * (m + 1) <= n) ++m;
    if (m * m != n || m < 2)
        throw std::domain_error("check_sandor: n must be a perfect square >= 4");
    return make_chain_report("sandor", "n=" + std::to_string(n), pow2(omega(n)),
                             Relation::LessEq, tau_e(n), Relation::LessEq,
                             pow2(big_omega(n)));
}

InequalityReport check_prop_2_2(const FactoredIdeal& I) {
    if (I.is_unit()) throw std::domain_error("check_prop_2_2: unit ideal excluded");
    FactoredIdeal I2 = ideal_pow(I, 2);
    return make_chain_report("prop_2_2", "I=" + to_text(I), pow2(omega_ideal(I2)),
                             Relation::LessEq, tau_e_ideal(I2), Relation::Less,
                             pow2(big_omega_ideal(I2)));
}

InequalityReport check_prop_2_3(std::uint64_t n) {
    if (n == 0) throw std::domain_error("check_prop_2_3: n must be positive");
    return make_report("prop_2_3", "n=" + std::to_string(n), tau(n), Relation::LessEq,
                       pow2(n - 1));
}

InequalityReport check_prop_2_4(const FactoredIdeal& I) {
    if (I.is_unit()) throw std::domain_error("check_prop_2_4: unit ideal excluded");
    FactoredIdeal I2 = ideal_pow(I, 2);
    return make_chain_report("prop_2_4", "I=" + to_text(I), pow2(omega_ideal(I2)),
                             Relation::LessEq, tau_e_ideal(I2), Relation::LessEq,
                             pow2(big_omega_ideal(I2) - omega_ideal(I2)));
}

InequalityReport check_prop_2_5(std::uint64_t m, std::uint64_t n) {
    if (m < 2) throw std::domain_error("check_prop_2_5: m must be >= 2");
    return make_report("prop_2_5", "m=" + std::to_string(m) + " n=" + std::to_string(n),
                       big_pow(BigInt(m) + 1, n) + 1, Relation::GreaterEq,
                       big_pow(tau(m), n) + pow2(n));
}

InequalityReport check_prop_2_6(std::uint64_t n) {
    if (n == 0) throw std::domain_error("check_prop_2_6: n must be positive");
    return make_report("prop_2_6", "n=" + std::to_string(n), BigInt(tau(n)) + 1,
                       Relation::GreaterEq, BigInt(tau_e(n)) + tau_star(n));
}

InequalityReport classify_prime_claim(const SplittingType& split, const FactoredIdeal& I) {
    if (I.factors.size() != split.g || split.e * split.f * split.g != split.n)
        throw std::invalid_argument("classify_prime_claim: inconsistent (split, I) pair");
    for (const auto& f : I.factors)
        if (f.exponent != split.e)
            throw std::invalid_argument("classify_prime_claim: inconsistent (split, I) pair");

    Relation rel;
    std::string claim;
    if (split.e == 1) {
        rel = Relation::Equal;  // unramified
        claim = "prop_2_7";
    } else if (split.n == 2) {
        rel = Relation::Equal;  // quadratic
        claim = "prop_2_8";
    } else if (split.g == 1 && split.e == split.n) {
        rel = Relation::Greater;  // totally ramified, degree >= 3
        claim = "prop_2_10";
    } else {
        rel = Relation::GreaterEq;  // ramified Galois, degree >= 3
        claim = "prop_2_9";
    }
    std::string witness = "e=" + std::to_string(split.e) + " f=" + std::to_string(split.f) +
                          " g=" + std::to_string(split.g) +
                          " n=" + std::to_string(split.n) + " I=" + to_text(I);
    return make_report(std::move(claim), std::move(witness), tau_ideal(I) + 1, rel,
                       tau_e_ideal(I) + pow2(omega_ideal(I)));
}

InequalityReport check_thm_2_11(std::uint64_t n) {
    if (n < 2) throw std::domain_error("check_thm_2_11: n must be >= 2");
    auto f = factorize(n);
    BigRat sum = 0;
    for (const auto& [p, a] : f.pairs) sum += BigRat(1, a + 1);
    BigRat t = tau(f);
    BigRat rhs = BigRat(tau_e(f)) + t / f.pairs.size() * sum;
    return make_report("thm_2_11", "n=" + std::to_string(n), t, Relation::GreaterEq, rhs);
}

InequalityReport check_thm_2_12(std::uint64_t e, std::uint64_t g) {
    if (e < 1 || g < 1) throw std::domain_error("check_thm_2_12: e, g must be >= 1");
    BigInt lhs = big_pow(BigInt(e) + 1, g);
    BigInt rhs = big_pow(tau(e), g) + big_pow(BigInt(e) + 1, g - 1);
    return make_report("thm_2_12", "e=" + std::to_string(e) + " g=" + std::to_string(g),
                       lhs, Relation::GreaterEq, rhs);
}

InequalityReport check_thm_2_13(std::uint64_t e, std::uint64_t g, std::uint64_t n) {
    if (e < 3) throw std::domain_error("check_thm_2_13: e must be >= 3");
    if (g < 1) throw std::domain_error("check_thm_2_13: g must be >= 1");
    if (n != 0) {
        if (n % 2 == 0) throw std::domain_error("check_thm_2_13: degree n must be odd");
        if (n % (e * g) != 0)
            throw std::domain_error("check_thm_2_13: e*g must divide n");
    }
    BigRat lhs = BigRat(e, e + 1);
    BigRat rhs = BigRat(big_pow(tau(e), g), big_pow(BigInt(e) + 1, g)) + BigRat(1, e + 1);
    std::string witness = "e=" + std::to_string(e) + " g=" + std::to_string(g);
    return make_report("thm_2_13", std::move(witness), lhs, Relation::GreaterEq, rhs);
}

const std::vector<std::string> known_claims = {
    "sandor",   "prop_2_2", "prop_2_3", "prop_2_4",     "prop_2_5",
    "prop_2_6", "prop_2_7_2_10", "thm_2_11", "thm_2_12", "thm_2_13"};

SweepRange default_range(const std::string& claim_id) {
    SweepRange r;
    if (claim_id == "sandor") {
        r.max_m = 10000;
    } else if (claim_id == "prop_2_2" || claim_id == "prop_2_4") {
        r.max_g = 5;
        r.max_exp = 8;
    } else if (claim_id == "prop_2_3") {
        r.max_n = 10000;
    } else if (claim_id == "prop_2_5") {
        r.max_m = 200;
        r.max_exp = 64;
    } else if (claim_id == "prop_2_6") {
        r.max_n = 1000000;
    } else if (claim_id == "prop_2_7_2_10") {
        r.max_d = 100;
        r.max_p = 1000;
        r.max_cyc_n = 60;
        r.max_cyc_p = 500;
    } else if (claim_id == "thm_2_11") {
        r.max_n = 100000;
    } else if (claim_id == "thm_2_12") {
        r.max_e = 60;
        r.max_g = 12;
    } else if (claim_id == "thm_2_13") {
        r.max_e = 59;
        r.max_g = 10;
    } else {
        throw std::invalid_argument("unknown claim id: " + claim_id);
    }
    return r;
}

namespace {

void sweep_ideal_grids(const std::string& claim_id, const SweepRange& range,
                       const std::function<void(const InequalityReport&)>& add) {
    if (range.max_g < 1 || range.max_exp < 1)
        throw std::invalid_argument("sweep " + claim_id + ": needs max_g and max_exp");
    for (std::uint64_t g = 1; g <= range.max_g; ++g) {
        std::vector<std::uint64_t> exps(g, 1);
        for (;;) {
            std::vector<IdealFactor> factors;
            for (std::uint64_t i = 0; i < g; ++i)
                factors.push_back({{static_cast<std::uint32_t>(i + 1), ""}, exps[i]});
            FactoredIdeal I = make_ideal(std::move(factors));
            add(claim_id == "prop_2_2" ? check_prop_2_2(I) : check_prop_2_4(I));
            std::size_t i = g;
            bool done = false;
            while (i > 0) {
                --i;
                if (exps[i] < range.max_exp) {
                    ++exps[i];
                    break;
                }
                exps[i] = 1;
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }
}

void sweep_classification(const SweepRange& range,
                          const std::function<void(const InequalityReport&)>& add) {
    if (range.max_d < 1 || range.max_p < 2)
        throw std::invalid_argument("sweep prop_2_7_2_10: needs max_d and max_p");
    auto ps = primes_up_to(range.max_p);
    for (std::int64_t d = -static_cast<std::int64_t>(range.max_d);
         d <= static_cast<std::int64_t>(range.max_d); ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        QuadraticField K = make_quadratic_field(d);
        for (std::uint64_t p : ps) {
            auto [s, I] = split_quadratic(K, p);
            add(classify_prime_claim(s, I));
        }
    }
    if (range.max_cyc_n >= 3 && range.max_cyc_p >= 2) {
        auto cps = primes_up_to(range.max_cyc_p);
        for (std::uint64_t n = 3; n <= range.max_cyc_n; ++n) {
            CyclotomicField K = make_cyclotomic_field(n);
            for (std::uint64_t p : cps) {
                if (n % p == 0 && n != p) continue;  // out of paper scope
                auto [s, I] = split_cyclotomic(K, p);
                add(classify_prime_claim(s, I));
            }
        }
    }
    for (std::uint64_t l : {3ULL, 5ULL}) {
        for (std::uint64_t p : primes_up_to(50)) {
            if (p == l || multiplicative_order(p, l) != l - 1) continue;
            for (std::int64_t mu = -20; mu <= 20; ++mu) {
                if (mu == 0) continue;
                auto [s, I] = split_kummer(make_kummer_field(l, mu), p);
                add(classify_prime_claim(s, I));
            }
        }
    }
}

}  // namespace

SweepResult sweep(const std::string& claim_id, const SweepRange& range) {
    if (std::find(known_claims.begin(), known_claims.end(), claim_id) ==
        known_claims.end())
        throw std::invalid_argument("unknown claim id: " + claim_id);

    SweepResult res;
    const bool record_eq = claim_id.starts_with("thm_");
    auto add = [&](const InequalityReport& r) {
        ++res.checked;
        if (!r.holds) {
            res.violations.push_back(r);
        } else if (r.is_equality) {
            ++res.equality_count;
            if (record_eq) res.equalities.push_back(r);
        }
    };

    if (claim_id == "sandor") {
        if (range.max_m < 2) throw std::invalid_argument("sweep sandor: needs max_m >= 2");
        for (std::uint64_t m = 2; m <= range.max_m; ++m) add(check_sandor(m * m));
    } else if (claim_id == "prop_2_2" || claim_id == "prop_2_4") {
        sweep_ideal_grids(claim_id, range, add);
    } else if (claim_id == "prop_2_3") {
        if (range.max_n < 1) throw std::invalid_argument("sweep prop_2_3: needs max_n");
        for (std::uint64_t n = 1; n <= range.max_n; ++n) add(check_prop_2_3(n));
    } else if (claim_id == "prop_2_5") {
        if (range.max_m < 2 || range.max_exp < 1)
            throw std::invalid_argument("sweep prop_2_5: needs max_m and max_exp");
        for (std::uint64_t m = 2; m <= range.max_m; ++m)
            for (std::uint64_t n = 0; n <= range.max_exp; ++n) add(check_prop_2_5(m, n));
    } else if (claim_id == "prop_2_6") {
        if (range.max_n < 1) throw std::invalid_argument("sweep prop_2_6: needs max_n");
        for (std::uint64_t n = 1; n <= range.max_n; ++n) add(check_prop_2_6(n));
    } else if (claim_id == "prop_2_7_2_10") {
        sweep_classification(range, add);
    } else if (claim_id == "thm_2_11") {
        if (range.max_n < 2) throw std::invalid_argument("sweep thm_2_11: needs max_n >= 2");
        for (std::uint64_t n = 2; n <= range.max_n; ++n) add(check_thm_2_11(n));
    } else if (claim_id == "thm_2_12") {
        if (range.max_e < 1 || range.max_g < 1)
            throw std::invalid_argument("sweep thm_2_12: needs max_e and max_g");
        for (std::uint64_t e = 1; e <= range.max_e; ++e)
            for (std::uint64_t g = 1; g <= range.max_g; ++g) add(check_thm_2_12(e, g));
    } else if (claim_id == "thm_2_13") {
        if (range.max_e < 3 || range.max_g < 1)
            throw std::invalid_argument("sweep thm_2_13: needs max_e >= 3 and max_g");
        for (std::uint64_t e = 3; e <= range.max_e; e += 2)
            for (std::uint64_t g = 1; g <= range.max_g; ++g) add(check_thm_2_13(e, g));
    }
    return res;
}

}  // namespace exdiv
