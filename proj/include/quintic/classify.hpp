#pragma once

#include "quintic/form.hpp"
#include "quintic/kummer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace quintic {

struct FormMatch {
    FormClass form = FormClass::NotCovered;
    int associate_t = 0;  // 1..4 for a match, 0 for NotCovered
    // Primes other than 5 in the order the form names them
    // (q1 q2, p, p q1, l q1, ...).
    std::vector<std::uint64_t> roles;
    // Exponent vector of the associate that matched.
    std::vector<arith::PrimePower> matched_factors;
};

/// Tries the associates t = 1..4 of the canonical radicand against the nine
/// forms and returns the first literal match.
FormMatch match_form(FactoredRadicand const& r);

std::optional<int> predicted_rank(FormClass form) noexcept;

/// Whether the radicand has one of the shapes expected to give a cyclic
/// 5-class group of order 5 (the R1_6, R1_3 and R1_1 patterns).
bool conjecture_match(FactoredRadicand const& r);

struct Classification {
    std::optional<std::uint64_t> input_n;  // absent when built from a factorization past 64 bits
    FactoredRadicand radicand;
    FormMatch match;
    std::optional<int> predicted_rank;
    bool conjecture_cyclic = false;
    RamificationProfile profile;
    NormIndicators indicators;
    std::optional<RankBounds> bounds;  // NotCovered only

    std::uint64_t canonical_n() const noexcept { return radicand.value(); }
    FormClass form() const noexcept { return match.form; }
};

/// Full classification.  Throws DegenerateRadicand for perfect 5th powers,
/// std::invalid_argument for n < 2, and std::logic_error if the rank formula
/// disagrees with the matched form.
Classification classify(std::uint64_t n);
Classification classify(std::span<const arith::PrimePower> factors);
Classification classify(FactoredRadicand radicand, std::optional<std::uint64_t> input_n = std::nullopt);

}  // namespace quintic
