#pragma once

// Arithmetic of the Kummer extension k = Q(zeta5, n^(1/5)) over
// k0 = Q(zeta5) as far as it is decided by congruences on the radicand:
// radicand normalization, splitting of rational primes in k0, the
// ramification count d and the norm indicators entering the rank formula
//
//     rank of the ambiguous 5-class group = d - 3 + q*.

#include "quintic/arith.hpp"
#include "quintic/form.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace quintic {

/// Residue class of a rational prime modulo 5: the prime 5 itself, l = 1,
/// p = -1, q = +-2.
enum class PrimeClass { Five, LType, PType, QType };

std::string_view to_string(PrimeClass c) noexcept;

PrimeClass classify_prime(std::uint64_t p) noexcept;

/// Residue degree and decomposition count of p in k0, from p mod 5.
/// Throws std::invalid_argument for p = 5.
arith::Splitting splitting(std::uint64_t p);

/// True for r in {1, 7, 18, 24}, i.e. r = +-1, +-7 (mod 25).  These are
/// exactly the 5th powers among the units mod 25.
constexpr bool is_pm1_pm7_mod25(unsigned r) noexcept {
    r %= 25;
    return r == 1 || r == 7 || r == 18 || r == 24;
}

/// A 5th-power-free radicand n >= 2 in canonical associate form: of the four
/// radicands with exponents t*e mod 5 (t = 1..4), which define the same
/// field, the numerically smallest.
class FactoredRadicand {
public:
    std::uint64_t value() const noexcept { return factorization_.value(); }
    arith::PrimeFactorization const& factorization() const noexcept { return factorization_; }
    std::span<const arith::PrimePower> factors() const noexcept { return factorization_.factors(); }
    std::span<const PrimeClass> classes() const noexcept { return classes_; }
    unsigned n_mod25() const noexcept { return n_mod25_; }

    friend bool operator==(FactoredRadicand const&, FactoredRadicand const&) = default;

private:
    friend FactoredRadicand normalize(std::span<const arith::PrimePower> factors);
    friend struct detail::Access;

    explicit FactoredRadicand(arith::PrimeFactorization f);

    arith::PrimeFactorization factorization_;
    std::vector<PrimeClass> classes_;
    unsigned n_mod25_ = 0;
};

/// Reduces exponents mod 5 and returns the canonical associate.  Accepts
/// factors in any order with repeated primes and arbitrary non-negative
/// exponents.  Throws DegenerateRadicand if every exponent vanishes mod 5,
/// std::invalid_argument for non-prime bases or negative exponents, and
/// std::overflow_error if no associate fits in 64 bits.
FactoredRadicand normalize(std::span<const arith::PrimePower> factors);
FactoredRadicand normalize(arith::PrimeFactorization const& f);
FactoredRadicand normalize(std::uint64_t n);

/// Exponent vector scaled by t (mod 5), t in 1..4.  Values may exceed
/// 64 bits, so only the factors are returned.
std::vector<arith::PrimePower> associate(std::span<const arith::PrimePower> factors, int t);

/// Whether lambda = 1 - zeta5 ramifies in k/k0.
constexpr bool lambda_ramified(unsigned n_mod25) noexcept { return !is_pm1_pm7_mod25(n_mod25); }

struct PrimeSplitting {
    std::uint64_t prime = 0;
    int residue_degree = 0;
    int factor_count = 0;

    friend constexpr bool operator==(PrimeSplitting const&, PrimeSplitting const&) = default;
};

struct RamificationProfile {
    std::vector<PrimeSplitting> primes;  // every prime divisor except 5
    bool lambda_ramified = false;
    int d = 0;  // primes of k0 ramified in k

    friend bool operator==(RamificationProfile const&, RamificationProfile const&) = default;
};

RamificationProfile ramification_profile(FactoredRadicand const& r);

/// Whether zeta5 is a norm from k: each prime divisor other than 5 must
/// satisfy l = 1, q = +-7, p = -1 (mod 25) according to its class.
bool zeta_norm(FactoredRadicand const& r);

enum class QStar { Zero, One, Two, Unknown };

std::string_view to_string(QStar q) noexcept;

struct NormIndicators {
    bool zeta_is_norm = false;
    QStar q_star = QStar::Unknown;

    friend constexpr bool operator==(NormIndicators const&, NormIndicators const&) = default;
};

/// q* for each matched radicand form; Unknown outside the nine forms.
QStar q_star(FormClass form) noexcept;

/// d - 3 + q*.  Throws IndeterminateRank for QStar::Unknown and
/// std::invalid_argument for d < 1.
int ambiguous_rank(int d, QStar q);

struct RankBounds {
    int low = 0;
    int high = 0;

    friend constexpr bool operator==(RankBounds const&, RankBounds const&) = default;
};

/// Range of d - 3 + q* over the admissible q*: q* = 2 needs zeta to be a norm.
RankBounds rank_bounds(RamificationProfile const& profile, bool zeta) noexcept;

}  // namespace quintic
