#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "exdiv/fields.hpp"
#include "exdiv/oracle.hpp"

using namespace exdiv;

TEST_CASE("quadratic_discriminant") {
    CHECK(quadratic_discriminant(5) == 5);
    CHECK(quadratic_discriminant(-1) == -4);
    CHECK(quadratic_discriminant(2) == 8);
    CHECK(quadratic_discriminant(-3) == -3);  // -3 = 1 (mod 4)
    CHECK_THROWS_AS(quadratic_discriminant(0), std::domain_error);
    CHECK_THROWS_AS(quadratic_discriminant(1), std::domain_error);
    CHECK_THROWS_AS(quadratic_discriminant(12), std::domain_error);
}

TEST_CASE("split_quadratic odd primes") {
    QuadraticField K5 = make_quadratic_field(5);
    auto [s_ram, I_ram] = split_quadratic(K5, 5);
    CHECK(s_ram == SplittingType{2, 1, 1, 2});
    CHECK(to_text(I_ram) == "P1^2");
    CHECK(I_ram.factors[0].label.description == "(5, sqrt(d))");

    auto [s_inert, I_inert] = split_quadratic(K5, 7);  // Legendre(5,7) = -1
    CHECK(s_inert == SplittingType{1, 2, 1, 2});

    auto [s_split, I_split] = split_quadratic(K5, 11);  // 11 = 1 (mod 5)
    CHECK(s_split == SplittingType{1, 1, 2, 2});
    CHECK(I_split.factors.size() == 2);

    CHECK_THROWS_AS(split_quadratic(K5, 15), std::domain_error);
}

TEST_CASE("split_quadratic at p = 2") {
    auto [s1, I1] = split_quadratic(make_quadratic_field(-1), 2);
    CHECK(s1 == SplittingType{2, 1, 1, 2});
    CHECK(I1.factors[0].label.description == "(2, 1+sqrt(d))");

    auto [s2, I2] = split_quadratic(make_quadratic_field(2), 2);
    CHECK(s2 == SplittingType{2, 1, 1, 2});
    CHECK(I2.factors[0].label.description == "(2, sqrt(d))");

    auto [s3, I3] = split_quadratic(make_quadratic_field(17), 2);
    CHECK(s3 == SplittingType{1, 1, 2, 2});
    CHECK(I3.factors[0].label.description == "(2, (1+sqrt(d))/2)");

    auto [s4, I4] = split_quadratic(make_quadratic_field(5), 2);
    CHECK(s4 == SplittingType{1, 2, 1, 2});
}

TEST_CASE("is_ramified") {
    CHECK(is_ramified(make_quadratic_field(5), 5));
    CHECK_FALSE(is_ramified(make_quadratic_field(5), 3));
    CHECK(is_ramified(make_quadratic_field(-1), 2));
    CHECK(is_ramified(make_cyclotomic_field(7), 7));
    CHECK_FALSE(is_ramified(make_cyclotomic_field(7), 3));
    CHECK_THROWS_AS(is_ramified(make_cyclotomic_field(8), 3), std::domain_error);
}

TEST_CASE("split_quadratic agrees with the Dedekind oracle") {
    for (std::int64_t d = -30; d <= 30; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        QuadraticField K = make_quadratic_field(d);
        for (std::uint64_t p = 2; p <= 100; ++p) {
            if (!is_prime(p)) continue;
            auto [s, I] = split_quadratic(K, p);
            CHECK(s == oracle::dedekind_quadratic_oracle(d, p));
            CHECK(s.e * s.f * s.g == 2);
            CHECK((s.e == 2) == is_ramified(K, p));
        }
    }
}

TEST_CASE("split_cyclotomic") {
    auto [s1, I1] = split_cyclotomic(make_cyclotomic_field(5), 3);
    CHECK(s1 == SplittingType{1, 4, 1, 4});
    CHECK(to_text(I1) == "P1^1");

    auto [s2, I2] = split_cyclotomic(make_cyclotomic_field(7), 7);
    CHECK(s2 == SplittingType{6, 1, 1, 6});
    CHECK(to_text(I2) == "P1^6");

    auto [s3, I3] = split_cyclotomic(make_cyclotomic_field(8), 17);
    CHECK(s3 == SplittingType{1, 1, 4, 4});
    CHECK(I3.factors.size() == 4);

    CHECK_THROWS_AS(split_cyclotomic(make_cyclotomic_field(8), 2), std::domain_error);
    CHECK_THROWS_AS(split_cyclotomic(make_cyclotomic_field(9), 3), std::domain_error);
    CHECK_THROWS_AS(make_cyclotomic_field(2), std::domain_error);
}

TEST_CASE("split_cyclotomic f matches the brute order") {
    for (std::uint64_t n = 3; n <= 30; ++n) {
        CyclotomicField K = make_cyclotomic_field(n);
        for (std::uint64_t p = 2; p <= 100; ++p) {
            if (!is_prime(p) || n % p == 0) continue;
            auto [s, I] = split_cyclotomic(K, p);
            CHECK(s.e == 1);
            CHECK(s.f == oracle::brute_order(p, n));
            CHECK(s.f * s.g == euler_phi(n));
            CHECK(s.e * s.f * s.g == s.n);
        }
    }
}

TEST_CASE("power_residue_character") {
    CHECK(power_residue_character(make_kummer_field(3, 6), 2) == CharacterValue::Zero);
    CHECK(power_residue_character(make_kummer_field(3, 1), 2) == CharacterValue::One);
    CHECK(power_residue_character(make_kummer_field(3, 5), 2) == CharacterValue::One);
    CHECK(power_residue_character(make_kummer_field(5, 15), 3) == CharacterValue::Zero);
    // 2 generates (Z/7)*? ord(2 mod 7) = 3, not 6: non-inert, rejected
    CHECK_THROWS_AS(power_residue_character(make_kummer_field(7, 5), 2),
                    std::domain_error);
    CHECK_THROWS_AS(power_residue_character(make_kummer_field(3, 5), 3),
                    std::domain_error);
    CHECK_THROWS_AS(power_residue_character(make_kummer_field(3, 5), 7),
                    std::domain_error);  // 7 = 1 (mod 3), split base
}

TEST_CASE("split_kummer") {
    auto [s1, I1] = split_kummer(make_kummer_field(3, 6), 2);
    CHECK(s1 == SplittingType{3, 1, 1, 3});
    CHECK(to_text(I1) == "P1^3");

    auto [s2, I2] = split_kummer(make_kummer_field(5, 15), 3);
    CHECK(s2 == SplittingType{5, 1, 1, 5});
    CHECK(to_text(I2) == "P1^5");

    auto [s3, I3] = split_kummer(make_kummer_field(3, 1), 2);
    CHECK(s3 == SplittingType{1, 1, 3, 3});
    CHECK(I3.factors.size() == 3);
}

TEST_CASE("splitting outputs satisfy the closed-form ideal functions") {
    for (std::uint64_t l : {3ULL, 5ULL}) {
        for (std::uint64_t p = 2; p <= 40; ++p) {
            if (!is_prime(p) || p == l) continue;
            if (multiplicative_order(p, l) != l - 1) continue;
            for (std::int64_t mu = -10; mu <= 10; ++mu) {
                if (mu == 0) continue;
                auto [s, I] = split_kummer(make_kummer_field(l, mu), p);
                CHECK(s.e * s.f * s.g == l);
                BigInt ep1 = s.e + 1;
                CHECK(tau_ideal(I) == boost::multiprecision::pow(ep1, s.g));
                CHECK(tau_e_ideal(I) ==
                      boost::multiprecision::pow(BigInt(tau(s.e)), s.g));
                CHECK(omega_ideal(I) == s.g);
                // character is Zero exactly when p | mu, and only then e > 1
                bool pdiv = ((mu % static_cast<std::int64_t>(p)) + p) % p == 0;
                CHECK((s.e > 1) == pdiv);
            }
        }
    }
}
