#pragma once

// Exact 64-bit integer arithmetic: primality, factorization, small modular
// helpers and a brute-force splitting oracle for the 5th cyclotomic
// polynomial over prime fields.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace quintic::detail {
struct Access;
}

namespace quintic::arith {

struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;

    friend constexpr auto operator<=>(PrimePower const&, PrimePower const&) = default;
};

/// Canonical factorization of an integer n >= 2: primes strictly increasing,
/// exponents >= 1, product equal to n.
class PrimeFactorization {
public:
    /// Validates and wraps an already computed factorization.  Throws
    /// std::invalid_argument if the factors are out of order, not prime,
    /// have exponent < 1, or overflow 64 bits.
    static PrimeFactorization from_factors(std::vector<PrimePower> factors);

    std::uint64_t value() const noexcept { return value_; }
    std::span<const PrimePower> factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }

    friend bool operator==(PrimeFactorization const&, PrimeFactorization const&) = default;

private:
    friend struct quintic::detail::Access;

    PrimeFactorization(std::uint64_t value, std::vector<PrimePower> factors)
        : value_(value), factors_(std::move(factors)) {}

    std::uint64_t value_ = 0;
    std::vector<PrimePower> factors_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Deterministic for every 64-bit input (Miller-Rabin with the first twelve
/// prime bases).
bool is_prime(std::uint64_t m) noexcept;

/// Trial division over a mod-30 wheel.  Throws std::invalid_argument for n < 2.
PrimeFactorization factorize(std::uint64_t n);

/// Smallest f >= 1 with p^f = 1 (mod 5).  Throws std::invalid_argument
/// for p = 5 or composite p.
int mult_order_mod5(std::uint64_t p);

struct Splitting {
    int residue_degree = 0;  // f
    int factor_count = 0;    // g

    friend constexpr bool operator==(Splitting const&, Splitting const&) = default;
};

/// Factors x^4 + x^3 + x^2 + x + 1 over F_p by exhaustive root search and a
/// gcd test for quadratic factors, returning the common degree of the
/// irreducible factors and their number.  Throws std::invalid_argument for
/// p = 5 (where the polynomial is (x - 1)^4), composite p, or p >= 2^32.
Splitting cyclotomic_splitting_oracle(std::uint64_t p);

/// All primes <= limit (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Factorization of every integer in a half-open range, produced by sieving
/// with a precomputed prime list.  `primes` must contain every prime up to
/// sqrt(hi - 1).  The callback receives n and its factors in increasing
/// prime order; n = 0 and n = 1 are skipped.
using RangeFactorSink = std::function<void(std::uint64_t n, std::span<const PrimePower> factors)>;
void factor_range(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> primes,
                  RangeFactorSink const& sink);

}  // namespace quintic::arith
