#include "exdiv/ideal.hpp"

#include <stdexcept>
#include <utility>

namespace exdiv {

bool operator==(const FactoredIdeal& a, const FactoredIdeal& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (a.factors[i].label.index != b.factors[i].label.index) return false;
        if (a.factors[i].exponent != b.factors[i].exponent) return false;
    }
    return a.field_tag == b.field_tag;
}

FactoredIdeal make_ideal(std::vector<IdealFactor> factors, std::string field_tag) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].exponent < 1)
            throw std::invalid_argument("make_ideal: exponents must be >= 1");
        if (i > 0 && factors[i].label.index <= factors[i - 1].label.index)
            throw std::invalid_argument("make_ideal: labels must be distinct and ascending");
    }
    return FactoredIdeal{std::move(factors), std::move(field_tag)};
}

FactoredIdeal ideal_from_factorization(const Factorization& f, std::string field_tag) {
    std::vector<IdealFactor> factors;
    factors.reserve(f.pairs.size());
    std::uint32_t idx = 1;
    for (const auto& [p, a] : f.pairs) {
        factors.push_back({{idx++, "(" + std::to_string(p) + ")"}, a});
    }
    return FactoredIdeal{std::move(factors), std::move(field_tag)};
}

BigInt tau_ideal(const FactoredIdeal& I) {
    BigInt t = 1;
    for (const auto& f : I.factors) t *= BigInt(f.exponent) + 1;
    return t;
}

BigInt tau_e_ideal(const FactoredIdeal& I) {
    BigInt t = 1;
    for (const auto& f : I.factors) t *= tau(f.exponent);
    return t;
}

std::uint64_t omega_ideal(const FactoredIdeal& I) { return I.factors.size(); }

std::uint64_t big_omega_ideal(const FactoredIdeal& I) {
    std::uint64_t s = 0;
    for (const auto& f : I.factors) s += f.exponent;
    return s;
}

FactoredIdeal ideal_pow(const FactoredIdeal& I, std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("ideal_pow: k must be >= 1");
    FactoredIdeal J = I;
    for (auto& f : J.factors) f.exponent *= k;
    return J;
}

std::vector<FactoredIdeal> enumerate_ideal_divisors(const FactoredIdeal& I) {
    if (tau_ideal(I) > (BigInt(1) << 20))
        throw std::domain_error("enumerate_ideal_divisors: more than 2^20 divisors");
    std::vector<FactoredIdeal> out;
    std::vector<std::uint64_t> exps(I.factors.size(), 0);
    for (;;) {
        FactoredIdeal d;
        d.field_tag = I.field_tag;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) d.factors.push_back({I.factors[i].label, exps[i]});
        out.push_back(std::move(d));
        // next exponent vector, lexicographic with last coordinate fastest
        std::size_t i = exps.size();
        while (i > 0) {
            --i;
            if (exps[i] < I.factors[i].exponent) {
                ++exps[i];
                break;
            }
            exps[i] = 0;
            if (i == 0) return out;
        }
        if (I.factors.empty()) return out;
    }
}

std::vector<FactoredIdeal> enumerate_ideal_exp_divisors(const FactoredIdeal& I) {
    std::vector<FactoredIdeal> out;
    std::vector<std::vector<std::uint64_t>> choices;
    for (const auto& f : I.factors) {
        std::vector<std::uint64_t> bs;
        for (std::uint64_t b = 1; b <= f.exponent; ++b)
            if (f.exponent % b == 0) bs.push_back(b);
        choices.push_back(std::move(bs));
    }
    std::vector<std::size_t> pick(I.factors.size(), 0);
    for (;;) {
        FactoredIdeal d;
        d.field_tag = I.field_tag;
        for (std::size_t i = 0; i < pick.size(); ++i)
            d.factors.push_back({I.factors[i].label, choices[i][pick[i]]});
        out.push_back(std::move(d));
        std::size_t i = pick.size();
        while (i > 0) {
            --i;
            if (pick[i] + 1 < choices[i].size()) {
                ++pick[i];
                break;
            }
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (I.factors.empty()) return out;
    }
}

std::string to_text(const FactoredIdeal& I) {
    if (I.is_unit()) return "(1)";
    std::string s;
    for (std::size_t i = 0; i < I.factors.size(); ++i) {
        if (i > 0) s += "*";
        s += "P" + std::to_string(I.factors[i].label.index) + "^" +
             std::to_string(I.factors[i].exponent);
    }
    return s;
}

}  // namespace exdiv
