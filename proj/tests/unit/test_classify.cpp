#include "doctest.h"

#include "quintic/classify.hpp"

using namespace quintic;
using arith::PrimePower;

namespace {

FormMatch match(std::uint64_t n) { return match_form(normalize(n)); }

}  // namespace

TEST_CASE("match_form examples") {
    auto m = match(22201);
    CHECK(m.form == FormClass::R1_5);
    CHECK(m.roles == std::vector<std::uint64_t>{149});

    CHECK(match(55).form == FormClass::R2_1);
    CHECK(match(55).roles == std::vector<std::uint64_t>{11});

    auto m57 = match(57);
    CHECK(m57.form == FormClass::R1_4);
    CHECK(m57.roles == std::vector<std::uint64_t>{19, 3});

    auto m12 = match(12);
    CHECK(m12.form == FormClass::NotCovered);
    CHECK(m12.associate_t == 0);
    CHECK(m12.roles.empty());
}

TEST_CASE("one example per form") {
    struct Case {
        std::uint64_t n;
        FormClass form;
        std::vector<std::uint64_t> roles;
    };
    std::vector<Case> const cases{
        {60, FormClass::R1_1, {2, 3}},     {95, FormClass::R1_2, {19}},
        {175, FormClass::R1_3, {7}},       {118, FormClass::R1_4, {59, 2}},
        {149, FormClass::R1_5, {149}},     {2107, FormClass::R1_6, {7, 43}},
        {1775, FormClass::R2_1, {71}},     {943, FormClass::R2_2, {41, 23}},
        {151, FormClass::R2_3, {151}},
    };
    for (auto const& c : cases) {
        auto m = match(c.n);
        CHECK_MESSAGE(m.form == c.form, c.n);
        CHECK_MESSAGE(m.roles == c.roles, c.n);
        CHECK(m.associate_t >= 1);
    }
}

TEST_CASE("gate failures are not covered") {
    CHECK(match(62).form == FormClass::NotCovered);    // 31*2 = 12 mod 25
    CHECK(match(33).form == FormClass::NotCovered);    // 11*3 = 8 mod 25
    CHECK(match(2111).form == FormClass::NotCovered);  // 11 mod 25
    CHECK(match(559).form == FormClass::NotCovered);
}

TEST_CASE("R1_1 needs one of q1, q2 outside +-7 mod 25") {
    // 5 * 7^2 * 43: both +-7 mod 25.
    CHECK(match(5 * 49 * 43).form != FormClass::R1_1);
    // 5 * 7^2 * 3: q2 = 3 is not.
    CHECK(match(5 * 49 * 3).form == FormClass::R1_1);
}

TEST_CASE("predicted_rank and conjecture_match") {
    CHECK(predicted_rank(FormClass::R1_3) == 1);
    CHECK(predicted_rank(FormClass::R2_2) == 2);
    CHECK_FALSE(predicted_rank(FormClass::NotCovered).has_value());

    CHECK(conjecture_match(normalize(175)));
    CHECK(conjecture_match(normalize(2107)));
    CHECK(conjecture_match(normalize(60)));
    CHECK_FALSE(conjecture_match(normalize(22201)));
    CHECK_FALSE(conjecture_match(normalize(12)));
}

TEST_CASE("classify examples") {
    auto c118 = classify(118);
    CHECK(c118.form() == FormClass::R1_4);
    CHECK(c118.predicted_rank == 1);
    CHECK(c118.profile.d == 3);
    CHECK(c118.indicators.q_star == QStar::One);
    CHECK_FALSE(c118.bounds.has_value());

    auto c1775 = classify(1775);
    CHECK(c1775.form() == FormClass::R2_1);
    CHECK(c1775.predicted_rank == 2);
    CHECK(c1775.profile.d == 5);

    auto c3249 = classify(3249);
    CHECK(c3249.input_n == 3249);
    CHECK(c3249.canonical_n() == 57);
    CHECK(c3249.form() == classify(57).form());
    CHECK(c3249.predicted_rank == classify(57).predicted_rank);

    auto c12 = classify(12);
    CHECK(c12.form() == FormClass::NotCovered);
    CHECK_FALSE(c12.predicted_rank.has_value());
    REQUIRE(c12.bounds.has_value());
    CHECK(*c12.bounds == RankBounds{0, 1});

    CHECK_THROWS_AS(classify(32), DegenerateRadicand);
    CHECK_THROWS_AS(classify(1), std::invalid_argument);
}

TEST_CASE("classify from a factorization") {
    std::vector<PrimePower> f{{3, 2}, {19, 2}};
    auto c = classify(f);
    CHECK(c.input_n == 3249);
    CHECK(c.canonical_n() == 57);

    // 57^4 as exponents stays well within range; 2^70 * 3 does not.
    std::vector<PrimePower> wide{{2, 70}, {3, 1}};
    auto w = classify(wide);
    CHECK_FALSE(w.input_n.has_value());
    CHECK(w.canonical_n() == classify(std::uint64_t{3}).canonical_n());
}

TEST_CASE("no consistency failure below 10^5") {
    std::size_t covered = 0;
    for (std::uint64_t n = 2; n <= 100000; ++n) {
        try {
            auto c = classify(n);
            if (c.form() != FormClass::NotCovered) ++covered;
        } catch (DegenerateRadicand const&) {
        }
    }
    CHECK(covered > 0);
}
