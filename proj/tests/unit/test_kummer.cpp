#include "doctest.h"

#include "quintic/arith.hpp"
#include "quintic/kummer.hpp"

#include <stdexcept>

using namespace quintic;
using arith::PrimePower;

namespace {

std::uint64_t next_prime(std::uint64_t n) {
    while (!arith::is_prime(n)) ++n;
    return n;
}

// Smallest prime in the residue class r mod 25.
std::uint64_t prime_in_class(unsigned r) {
    for (std::uint64_t p = r == 0 ? 25 : r;; p += 25) {
        if (arith::is_prime(p)) return p;
    }
}

}  // namespace

TEST_CASE("classify_prime and splitting") {
    CHECK(classify_prime(5) == PrimeClass::Five);
    CHECK(classify_prime(11) == PrimeClass::LType);
    CHECK(classify_prime(19) == PrimeClass::PType);
    CHECK(classify_prime(2) == PrimeClass::QType);
    CHECK(classify_prime(3) == PrimeClass::QType);
    CHECK(splitting(11) == arith::Splitting{1, 4});
    CHECK(splitting(149) == arith::Splitting{2, 2});
    CHECK(splitting(7) == arith::Splitting{4, 1});
    CHECK_THROWS_AS(splitting(5), std::invalid_argument);
}

TEST_CASE("congruence splitting equals the cyclotomic oracle below 10^4") {
    for (auto p : arith::primes_up_to(10000)) {
        if (p == 5) continue;
        REQUIRE_MESSAGE(splitting(p) == arith::cyclotomic_splitting_oracle(p), p);
        CHECK(splitting(p).residue_degree == arith::mult_order_mod5(p));
    }
}

TEST_CASE("normalize picks the smallest associate") {
    auto r = normalize(3249);  // 3^2 * 19^2, associate 3 * 19
    CHECK(r.value() == 57);
    CHECK(r.n_mod25() == 7);

    CHECK(normalize(22201).value() == 149);
    CHECK(normalize(2107).value() == 2107);
    CHECK(normalize(96).value() == 3);  // 2^5 * 3 reduces to 3

    // Factors in any order, repeated, with exponents >= 5.
    std::vector<PrimePower> messy{{19, 1}, {3, 7}, {19, 1}};
    CHECK(normalize(messy).value() == 57);
}

TEST_CASE("normalize rejects degenerate and invalid input") {
    CHECK_THROWS_AS(normalize(32), DegenerateRadicand);
    CHECK_THROWS_AS(normalize(std::uint64_t{7776}), DegenerateRadicand);  // 6^5
    CHECK_THROWS_WITH(normalize(1024), "degenerate radicand");
    CHECK_THROWS_AS(normalize(std::uint64_t{1}), std::invalid_argument);
    std::vector<PrimePower> bad{{4, 1}};
    CHECK_THROWS_AS(normalize(bad), std::invalid_argument);

    std::uint64_t const a = next_prime((std::uint64_t{1} << 40) + 1);
    std::uint64_t const b = next_prime(a + 1);
    std::vector<PrimePower> huge{{a, 1}, {b, 1}};
    CHECK_THROWS_AS(normalize(huge), std::overflow_error);
}

TEST_CASE("normalize is idempotent and associate-invariant") {
    for (std::uint64_t n = 2; n < 5000; ++n) {
        auto const f = arith::factorize(n);
        bool fifth_power = true;
        for (auto const& pp : f.factors()) fifth_power = fifth_power && pp.exponent % 5 == 0;
        if (fifth_power) continue;
        auto const r = normalize(f);
        REQUIRE(normalize(r.value()) == r);
        REQUIRE(r.value() <= n);
        for (int t = 2; t <= 4; ++t) {
            auto const a = associate(f.factors(), t);
            REQUIRE_MESSAGE(normalize(a) == r, n << " t=" << t);
        }
    }
}

TEST_CASE("lambda ramification gate") {
    for (unsigned r = 0; r < 25; ++r) {
        bool const unit_fifth_power = r == 1 || r == 7 || r == 18 || r == 24;
        CHECK(lambda_ramified(r) == !unit_fifth_power);
    }
    // The unramified residues are exactly the 5th powers of units mod 25.
    for (unsigned x = 1; x < 25; ++x) {
        if (x % 5 == 0) continue;
        CHECK_FALSE(lambda_ramified(static_cast<unsigned>(arith::pow_mod(x, 5, 25))));
    }
}

TEST_CASE("ramification_profile examples") {
    auto p55 = ramification_profile(normalize(55));
    CHECK(p55.lambda_ramified);
    CHECK(p55.d == 5);
    REQUIRE(p55.primes.size() == 1);
    CHECK(p55.primes[0] == PrimeSplitting{11, 1, 4});

    auto p149 = ramification_profile(normalize(22201));
    CHECK_FALSE(p149.lambda_ramified);
    CHECK(p149.d == 2);

    auto p60 = ramification_profile(normalize(60));
    CHECK(p60.lambda_ramified);
    CHECK(p60.d == 3);
}

TEST_CASE("zeta_norm examples") {
    CHECK(zeta_norm(normalize(2107)));
    CHECK_FALSE(zeta_norm(normalize(57)));
    CHECK(zeta_norm(normalize(22201)));
    CHECK(zeta_norm(normalize(5)));  // no prime other than 5
}

TEST_CASE("zeta_norm equals r^f = 1 mod 25 for every residue class") {
    for (unsigned r = 1; r < 25; ++r) {
        if (r % 5 == 0) continue;
        std::uint64_t const p = prime_in_class(r);
        int const f = arith::mult_order_mod5(p);
        bool const oracle = arith::pow_mod(r, static_cast<std::uint64_t>(f), 25) == 1;
        CHECK_MESSAGE(zeta_norm(normalize(p)) == oracle, "r=" << r);
        CHECK_MESSAGE(zeta_norm(normalize(5 * p)) == oracle, "r=" << r);
    }
}

TEST_CASE("q_star table") {
    CHECK(q_star(FormClass::R1_1) == QStar::One);
    CHECK(q_star(FormClass::R1_2) == QStar::One);
    CHECK(q_star(FormClass::R1_3) == QStar::Two);
    CHECK(q_star(FormClass::R1_4) == QStar::One);
    CHECK(q_star(FormClass::R1_5) == QStar::Two);
    CHECK(q_star(FormClass::R1_6) == QStar::Two);
    CHECK(q_star(FormClass::R2_1) == QStar::Zero);
    CHECK(q_star(FormClass::R2_2) == QStar::Zero);
    CHECK(q_star(FormClass::R2_3) == QStar::One);
    CHECK(q_star(FormClass::NotCovered) == QStar::Unknown);
}

TEST_CASE("ambiguous_rank and rank_bounds") {
    CHECK(ambiguous_rank(5, QStar::Zero) == 2);
    CHECK(ambiguous_rank(2, QStar::Two) == 1);
    CHECK(ambiguous_rank(3, QStar::One) == 1);
    CHECK_THROWS_AS(ambiguous_rank(3, QStar::Unknown), IndeterminateRank);
    CHECK_THROWS_AS(ambiguous_rank(0, QStar::One), std::invalid_argument);

    RamificationProfile p;
    p.d = 3;
    CHECK(rank_bounds(p, false) == RankBounds{0, 1});
    CHECK(rank_bounds(p, true) == RankBounds{0, 2});
    p.d = 1;
    CHECK(rank_bounds(p, false) == RankBounds{0, 0});
}
