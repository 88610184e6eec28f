#pragma once

#include "quintic/arith.hpp"
#include "quintic/kummer.hpp"

#include <string_view>
#include <vector>

namespace quintic::detail {

// Construction without re-validating primality, for factors produced by
// the range sieve.
struct Access {
    static FactoredRadicand trusted_radicand(std::uint64_t value, std::vector<arith::PrimePower> factors) {
        return FactoredRadicand(arith::PrimeFactorization(value, std::move(factors)));
    }
};

std::string_view embedded_fixture_text();

}  // namespace quintic::detail
