#include "doctest.h"

#include "quintic/arith.hpp"

#include <map>
#include <stdexcept>

using namespace quintic::arith;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t product(std::span<const PrimePower> f) {
    std::uint64_t v = 1;
    for (auto const& [p, e] : f) {
        for (int i = 0; i < e; ++i) v *= p;
    }
    return v;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division below 100000") {
    for (std::uint64_t n = 0; n < 100000; ++n) {
        REQUIRE_MESSAGE(is_prime(n) == trial_division_prime(n), n);
    }
}

TEST_CASE("is_prime on 64-bit edge cases") {
    CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ull));
    CHECK_FALSE(is_prime(3215031751ull));          // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime(3825123056546413051ull)); // strong pseudoprime to the first nine bases
    CHECK(is_prime(4294967291ull));
    CHECK_FALSE(is_prime(4294967291ull * 4294967279ull));
}

TEST_CASE("factorize examples") {
    auto f = factorize(60);
    CHECK(f.value() == 60);
    CHECK(std::vector<PrimePower>(f.factors().begin(), f.factors().end()) ==
          std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});

    auto g = factorize(22201);
    REQUIRE(g.size() == 1);
    CHECK(g.factors()[0] == PrimePower{149, 2});

    auto h = factorize(2107);
    CHECK(std::vector<PrimePower>(h.factors().begin(), h.factors().end()) ==
          std::vector<PrimePower>{{7, 2}, {43, 1}});

    CHECK(factorize(2).factors()[0] == PrimePower{2, 1});
    CHECK_THROWS_AS(factorize(1), std::invalid_argument);
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize multiplies back and uses primes only") {
    for (std::uint64_t n = 2; n < 20000; ++n) {
        auto f = factorize(n);
        REQUIRE(product(f.factors()) == n);
        for (auto const& pp : f.factors()) REQUIRE(trial_division_prime(pp.prime));
    }
    std::uint64_t const big = 999983ull * 1000003ull;
    auto f = factorize(big);
    REQUIRE(f.size() == 2);
    CHECK(f.factors()[0].prime == 999983);
}

TEST_CASE("PrimeFactorization::from_factors validates") {
    CHECK_NOTHROW(PrimeFactorization::from_factors({{2, 1}, {3, 2}}));
    CHECK_THROWS_AS(PrimeFactorization::from_factors({{3, 1}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFactorization::from_factors({{4, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFactorization::from_factors({{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFactorization::from_factors({{2, 64}}), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFactorization::from_factors({}), std::invalid_argument);
}

TEST_CASE("mult_order_mod5") {
    CHECK(mult_order_mod5(11) == 1);
    CHECK(mult_order_mod5(19) == 2);
    CHECK(mult_order_mod5(2) == 4);
    CHECK(mult_order_mod5(3) == 4);
    CHECK_THROWS_AS(mult_order_mod5(5), std::invalid_argument);
    CHECK_THROWS_AS(mult_order_mod5(9), std::invalid_argument);
}

TEST_CASE("cyclotomic splitting oracle") {
    CHECK(cyclotomic_splitting_oracle(11) == Splitting{1, 4});
    CHECK(cyclotomic_splitting_oracle(2) == Splitting{4, 1});
    CHECK(cyclotomic_splitting_oracle(149) == Splitting{2, 2});
    CHECK(cyclotomic_splitting_oracle(3) == Splitting{4, 1});
    CHECK_THROWS_AS(cyclotomic_splitting_oracle(5), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_splitting_oracle(15), std::invalid_argument);
}

TEST_CASE("primes_up_to") {
    auto ps = primes_up_to(30);
    CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(10000).size() == 1229);
}

TEST_CASE("factor_range matches factorize") {
    auto primes = primes_up_to(2000);
    std::map<std::uint64_t, std::vector<PrimePower>> seen;
    factor_range(1000000, 1005000, primes, [&](std::uint64_t n, std::span<const PrimePower> f) {
        seen[n] = std::vector<PrimePower>(f.begin(), f.end());
    });
    REQUIRE(seen.size() == 5000);
    for (auto const& [n, f] : seen) {
        auto g = factorize(n);
        REQUIRE_MESSAGE(f == std::vector<PrimePower>(g.factors().begin(), g.factors().end()), n);
    }

    std::size_t count = 0;
    factor_range(0, 10, primes, [&](std::uint64_t n, std::span<const PrimePower>) {
        CHECK(n >= 2);
        ++count;
    });
    CHECK(count == 8);
}
