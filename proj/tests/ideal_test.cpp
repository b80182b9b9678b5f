#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "exdiv/ideal.hpp"
#include "exdiv/ideal_json.hpp"

using namespace exdiv;

namespace {

FactoredIdeal ideal(std::vector<std::uint64_t> exps) {
    std::vector<IdealFactor> fs;
    for (std::size_t i = 0; i < exps.size(); ++i)
        fs.push_back({{static_cast<std::uint32_t>(i + 1), ""}, exps[i]});
    return make_ideal(std::move(fs));
}

}  // namespace

TEST_CASE("make_ideal validation") {
    CHECK_THROWS_AS(make_ideal({{{1, ""}, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_ideal({{{2, ""}, 1}, {{1, ""}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_ideal({{{1, ""}, 1}, {{1, ""}, 2}}), std::invalid_argument);
    CHECK(make_ideal({}).is_unit());
}

TEST_CASE("tau and tau_e on ideals") {
    CHECK(tau_ideal(ideal({})) == 1);
    CHECK(tau_ideal(ideal({2, 1})) == 6);
    CHECK(tau_ideal(ideal({7})) == 8);  // P^e -> e+1

    CHECK(tau_e_ideal(ideal({1, 1, 1})) == 1);
    CHECK(tau_e_ideal(ideal({2})) == 2);
    CHECK(tau_e_ideal(ideal({4, 6})) == 12);
}

TEST_CASE("omega and big_omega on ideals") {
    CHECK(omega_ideal(ideal({})) == 0);
    CHECK(big_omega_ideal(ideal({})) == 0);
    CHECK(omega_ideal(ideal({2, 3})) == 2);
    CHECK(big_omega_ideal(ideal({2, 3})) == 5);
}

TEST_CASE("ideal_pow") {
    FactoredIdeal I = ideal({1, 3});
    CHECK(ideal_pow(I, 1) == I);
    FactoredIdeal I2 = ideal_pow(I, 2);
    CHECK(I2.factors[0].exponent == 2);
    CHECK(I2.factors[1].exponent == 6);
    CHECK(omega_ideal(I2) == omega_ideal(I));
    CHECK(big_omega_ideal(I2) == 2 * big_omega_ideal(I));
    CHECK(ideal_pow(ideal_pow(I, 2), 3) == ideal_pow(I, 6));
    CHECK_THROWS_AS(ideal_pow(I, 0), std::invalid_argument);
}

TEST_CASE("divisor enumeration") {
    auto unit_divs = enumerate_ideal_divisors(ideal({}));
    REQUIRE(unit_divs.size() == 1);
    CHECK(unit_divs[0].is_unit());

    auto p1 = enumerate_ideal_divisors(ideal({1}));
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].is_unit());
    CHECK(to_text(p1[1]) == "P1^1");

    auto p11 = enumerate_ideal_divisors(ideal({1, 1}));
    REQUIRE(p11.size() == 4);
    CHECK(to_text(p11[0]) == "(1)");
    CHECK(to_text(p11[1]) == "P2^1");
    CHECK(to_text(p11[2]) == "P1^1");
    CHECK(to_text(p11[3]) == "P1^1*P2^1");
}

TEST_CASE("exponential divisor enumeration") {
    auto sq = enumerate_ideal_exp_divisors(ideal({2}));
    REQUIRE(sq.size() == 2);
    CHECK(to_text(sq[0]) == "P1^1");
    CHECK(to_text(sq[1]) == "P1^2");

    auto p11 = enumerate_ideal_exp_divisors(ideal({1, 1}));
    REQUIRE(p11.size() == 1);
    CHECK(to_text(p11[0]) == "P1^1*P2^1");

    auto p4 = enumerate_ideal_exp_divisors(ideal({4}));
    REQUIRE(p4.size() == 3);
    CHECK(to_text(p4[0]) == "P1^1");
    CHECK(to_text(p4[1]) == "P1^2");
    CHECK(to_text(p4[2]) == "P1^4");
}

TEST_CASE("enumeration counts match the closed forms") {
    for (std::uint64_t a = 1; a <= 6; ++a)
        for (std::uint64_t b = 1; b <= 6; ++b)
            for (std::uint64_t c = 1; c <= 6; ++c) {
                FactoredIdeal I = ideal({a, b, c});
                CHECK(BigInt(enumerate_ideal_divisors(I).size()) == tau_ideal(I));
                CHECK(BigInt(enumerate_ideal_exp_divisors(I).size()) == tau_e_ideal(I));
                CHECK(tau_e_ideal(I) <= tau_ideal(I));
            }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_ideal_divisors(ideal({1 << 21})), std::domain_error);
}

TEST_CASE("abstraction check against integer factorizations") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        FactoredIdeal I = ideal_from_factorization(factorize(n));
        CHECK(tau_ideal(I) == tau(n));
        CHECK(tau_e_ideal(I) == tau_e(n));
        CHECK(omega_ideal(I) == omega(n));
        CHECK(big_omega_ideal(I) == big_omega(n));
    }
}

TEST_CASE("text and json forms") {
    CHECK(to_text(ideal({})) == "(1)");
    FactoredIdeal I = make_ideal({{{1, "(2, 1+sqrt(d))"}, 2}}, "Q(sqrt(-1))");
    CHECK(to_text(I) == "P1^2");
    auto j = to_json(I);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["index"] == "1");
    CHECK(j[0]["exponent"] == "2");
    CHECK(j[0]["description"] == "(2, 1+sqrt(d))");
}
