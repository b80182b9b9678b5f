#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "exdiv/arith.hpp"
#include "exdiv/oracle.hpp"

using namespace exdiv;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).pairs.empty());
    Factorization f12 = factorize(12);
    REQUIRE(f12.pairs.size() == 2);
    CHECK(f12.pairs[0] == PrimePower{2, 2});
    CHECK(f12.pairs[1] == PrimePower{3, 1});
    // large prime stays intact
    Factorization fp = factorize(9999999967ULL);
    REQUIRE(fp.pairs.size() == 1);
    CHECK(fp.pairs[0].prime == 9999999967ULL);
    CHECK(fp.pairs[0].exponent == 1);
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize round-trips on random 64-bit inputs") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n = rng() >> (i % 32);
        if (n == 0) continue;
        Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (std::size_t j = 0; j < f.pairs.size(); ++j) {
            CHECK(is_prime(f.pairs[j].prime));
            if (j > 0) CHECK(f.pairs[j - 1].prime < f.pairs[j].prime);
        }
    }
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(is_prime(3215031751ULL));
    CHECK(3215031751ULL % 151 == 0);  // trial-division witness
    CHECK(is_prime(9999999967ULL));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    // small-range cross-check against trial division
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool trial = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) trial = false;
        CHECK(is_prime(n) == trial);
    }
}

TEST_CASE("tau family") {
    CHECK(tau(1) == 1);
    CHECK(tau(7) == 2);
    CHECK(tau(128) == 8);  // p^a -> a+1
    CHECK(tau(12) == 6);

    CHECK(tau_star(1) == 1);
    CHECK(tau_star(360) == 8);

    CHECK(tau_e(1) == 1);
    CHECK(tau_e(12) == 2);

    CHECK(omega(1) == 0);
    CHECK(big_omega(1) == 0);
    CHECK(omega(12) == 2);
    CHECK(big_omega(12) == 3);
    CHECK(omega(1024) == 1);
    CHECK(big_omega(1024) == 10);

    CHECK_THROWS_AS(tau(0), std::domain_error);
    CHECK_THROWS_AS(tau_e(0), std::domain_error);
    CHECK_THROWS_AS(omega(0), std::domain_error);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(12) == 4);
    for (std::uint64_t n = 1; n <= 500; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1) ++count;
        CHECK(euler_phi(n) == count);
    }
}

TEST_CASE("legendre_symbol via exhaustive residue search") {
    CHECK(legendre_symbol(4, 7) == 1);
    CHECK(legendre_symbol(7, 7) == 0);
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK(legendre_symbol(-1, 5) == 1);
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::domain_error);
    CHECK_THROWS_AS(legendre_symbol(3, 15), std::domain_error);
    for (std::uint64_t p = 3; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        std::vector<bool> residue(p, false);
        for (std::uint64_t x = 1; x < p; ++x) residue[x * x % p] = true;
        for (std::uint64_t a = 0; a < p; ++a) {
            int expected = a == 0 ? 0 : (residue[a] ? 1 : -1);
            CHECK(legendre_symbol(static_cast<std::int64_t>(a), p) == expected);
        }
    }
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(1, 9) == 1);
    CHECK(multiplicative_order(3, 5) == 4);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK_THROWS_AS(multiplicative_order(2, 4), std::domain_error);
    for (std::uint64_t n = 2; n <= 150; ++n)
        for (std::uint64_t a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            std::uint64_t f = multiplicative_order(a, n);
            CHECK(euler_phi(n) % f == 0);
            CHECK(f == oracle::brute_order(a, n));
        }
}

TEST_CASE("divisors and exponential_divisors") {
    CHECK(divisors(6) == std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(exponential_divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(exponential_divisors(7) == std::vector<std::uint64_t>{7});
    CHECK(exponential_divisors(12) == std::vector<std::uint64_t>{6, 12});
    CHECK(exponential_divisors(144) ==
          std::vector<std::uint64_t>{6, 12, 18, 36, 48, 144});
}

TEST_CASE("counting identities over a sweep") {
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        CHECK(divisors(n).size() == tau(n));
        CHECK(exponential_divisors(n).size() == tau_e(n));
        CHECK(tau_star(n) == (std::uint64_t{1} << omega(n)));
        CHECK(tau_e(n) <= tau(n));
    }
}

TEST_CASE("multiplicativity on coprime pairs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t m = rng() % 5000 + 1;
        std::uint64_t n = rng() % 5000 + 1;
        if (std::gcd(m, n) != 1) continue;
        CHECK(tau(m * n) == tau(m) * tau(n));
        CHECK(tau_e(m * n) == tau_e(m) * tau_e(n));
        CHECK(tau_star(m * n) == tau_star(m) * tau_star(n));
        CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    }
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(-1));
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK_FALSE(is_squarefree(-75));
    CHECK_THROWS_AS(is_squarefree(0), std::domain_error);
}
