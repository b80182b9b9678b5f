#include "exdiv/fields.hpp"

#include <stdexcept>
#include <string>

namespace exdiv {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

FactoredIdeal g_unramified_primes(std::uint64_t g, std::string field_tag) {
    std::vector<IdealFactor> factors;
    for (std::uint32_t i = 1; i <= g; ++i) factors.push_back({{i, ""}, 1});
    return FactoredIdeal{std::move(factors), std::move(field_tag)};
}

}  // namespace

std::int64_t quadratic_discriminant(std::int64_t d) {
    if (d == 0 || d == 1)
        throw std::domain_error("quadratic_discriminant: d must not be 0 or 1");
    if (!is_squarefree(d))
        throw std::domain_error("quadratic_discriminant: d must be squarefree");
    return mod_pos(d, 4) == 1 ? d : 4 * d;
}

QuadraticField make_quadratic_field(std::int64_t d) {
    return QuadraticField{d, quadratic_discriminant(d)};
}

CyclotomicField make_cyclotomic_field(std::uint64_t n) {
    if (n < 3) throw std::domain_error("make_cyclotomic_field: n must be >= 3");
    return CyclotomicField{n, euler_phi(n)};
}

KummerField make_kummer_field(std::uint64_t l, std::int64_t mu) {
    if (l == 2 || !is_prime(l))
        throw std::domain_error("make_kummer_field: l must be an odd prime");
    if (mu == 0) throw std::domain_error("make_kummer_field: mu must be nonzero");
    return KummerField{l, mu};
}

bool is_ramified(const QuadraticField& K, std::uint64_t p) {
    return mod_pos(K.discriminant, static_cast<std::int64_t>(p)) == 0;
}

bool is_ramified(const CyclotomicField& K, std::uint64_t p) {
    if (K.n == 2 || !is_prime(K.n))
        throw std::domain_error("is_ramified: only prime-order cyclotomic fields supported");
    return p == K.n;
}

std::pair<SplittingType, FactoredIdeal> split_quadratic(const QuadraticField& K,
                                                        std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("split_quadratic: p must be prime");
    if (K.discriminant != quadratic_discriminant(K.d))
        throw std::domain_error("split_quadratic: inconsistent field");

    std::string tag = "Q(sqrt(" + std::to_string(K.d) + "))";
    auto ramified = [&](std::string gen) {
        return std::pair{SplittingType{2, 1, 1, 2},
                         make_ideal({{{1, std::move(gen)}, 2}}, tag)};
    };
    auto inert = [&]() {
        return std::pair{SplittingType{1, 2, 1, 2},
                         make_ideal({{{1, "(" + std::to_string(p) + ")"}, 1}}, tag)};
    };
    auto split = [&](std::string gen1) {
        return std::pair{SplittingType{1, 1, 2, 2},
                         make_ideal({{{1, std::move(gen1)}, 1}, {{2, ""}, 1}}, tag)};
    };

    if (p == 2) {
        switch (mod_pos(K.d, 8)) {
            case 2:
            case 6:
                return ramified("(2, sqrt(d))");
            case 3:
            case 7:
                return ramified("(2, 1+sqrt(d))");
            case 1:
                return split("(2, (1+sqrt(d))/2)");
            case 5:
                return inert();
        }
        throw std::logic_error("split_quadratic: unreachable (d even squarefree)");
    }
    int chi = legendre_symbol(K.discriminant, p);
    if (chi == 0) return ramified("(" + std::to_string(p) + ", sqrt(d))");
    if (chi == 1) return split("");
    return inert();
}

std::pair<SplittingType, FactoredIdeal> split_cyclotomic(const CyclotomicField& K,
                                                         std::uint64_t p) {
    if (K.n < 3) throw std::domain_error("split_cyclotomic: n must be >= 3");
    if (K.degree != euler_phi(K.n))
        throw std::domain_error("split_cyclotomic: inconsistent field");
    if (!is_prime(p)) throw std::domain_error("split_cyclotomic: p must be prime");

    std::string tag = "Q(zeta_" + std::to_string(K.n) + ")";
    if (K.n % p == 0) {
        if (K.n != p)
            throw std::domain_error(
                "split_cyclotomic: p | n with n != p is out of implemented scope");
        // totally ramified: pZ[zeta_p] = (1 - zeta_p)^(p-1)
        return {SplittingType{p - 1, 1, 1, p - 1},
                make_ideal({{{1, "(1-zeta_" + std::to_string(p) + ")"}, p - 1}}, tag)};
    }
    std::uint64_t f = multiplicative_order(p, K.n);
    std::uint64_t g = K.degree / f;
    return {SplittingType{1, f, g, K.degree}, g_unramified_primes(g, tag)};
}

namespace {

void require_inert_base(const KummerField& K, std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("kummer: p must be prime");
    if (p == K.l) throw std::domain_error("kummer: p = l is out of implemented scope");
    if (multiplicative_order(p, K.l) != K.l - 1)
        throw std::domain_error("kummer: non-inert base prime: out of implemented scope");
}

}  // namespace

CharacterValue power_residue_character(const KummerField& K, std::uint64_t p) {
    require_inert_base(K, p);
    std::int64_t sp = static_cast<std::int64_t>(p);
    std::uint64_t r = static_cast<std::uint64_t>(((K.mu % sp) + sp) % sp);
    if (r == 0) return CharacterValue::Zero;
    // Residue field is F_q with q = p^(l-1); mu lies in the prime field, so
    // mu^((q-1)/l) = 1 iff ord_p(mu) divides (q-1)/l.
    std::uint64_t t = multiplicative_order(r, p);
    BigInt q = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(K.l - 1));
    BigInt m = (q - 1) / K.l;  // exact: p^(l-1) = 1 (mod l)
    return m % t == 0 ? CharacterValue::One : CharacterValue::NontrivialRoot;
}

std::pair<SplittingType, FactoredIdeal> split_kummer(const KummerField& K,
                                                     std::uint64_t p) {
    CharacterValue chi = power_residue_character(K, p);
    std::string tag = "Q(zeta_" + std::to_string(K.l) + ", (" + std::to_string(K.mu) +
                      ")^(1/" + std::to_string(K.l) + "))";
    switch (chi) {
        case CharacterValue::Zero:
            return {SplittingType{K.l, 1, 1, K.l}, make_ideal({{{1, ""}, K.l}}, tag)};
        case CharacterValue::NontrivialRoot:
            return {SplittingType{1, K.l, 1, K.l}, make_ideal({{{1, ""}, 1}}, tag)};
        case CharacterValue::One:
            return {SplittingType{1, 1, K.l, K.l}, g_unramified_primes(K.l, tag)};
    }
    throw std::logic_error("split_kummer: unreachable");
}

}  // namespace exdiv
