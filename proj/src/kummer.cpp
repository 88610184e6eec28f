#include "quintic/kummer.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace quintic {

std::string_view to_string(PrimeClass c) noexcept {
    switch (c) {
        case PrimeClass::Five: return "five";
        case PrimeClass::LType: return "l";
        case PrimeClass::PType: return "p";
        case PrimeClass::QType: return "q";
    }
    return "?";
}

std::string_view to_string(QStar q) noexcept {
    switch (q) {
        case QStar::Zero: return "0";
        case QStar::One: return "1";
        case QStar::Two: return "2";
        case QStar::Unknown: return "unknown";
    }
    return "unknown";
}

PrimeClass classify_prime(std::uint64_t p) noexcept {
    if (p == 5) return PrimeClass::Five;
    switch (p % 5) {
        case 1: return PrimeClass::LType;
        case 4: return PrimeClass::PType;
        default: return PrimeClass::QType;
    }
}

arith::Splitting splitting(std::uint64_t p) {
    switch (classify_prime(p)) {
        case PrimeClass::LType: return {1, 4};
        case PrimeClass::PType: return {2, 2};
        case PrimeClass::QType: return {4, 1};
        case PrimeClass::Five: break;
    }
    throw std::invalid_argument("5 is ramified in Q(zeta5); no (f, g) splitting");
}

FactoredRadicand::FactoredRadicand(arith::PrimeFactorization f) : factorization_(std::move(f)) {
    unsigned residue = 1;
    for (auto const& [prime, exponent] : factorization_.factors()) {
        classes_.push_back(classify_prime(prime));
        residue = static_cast<unsigned>(arith::pow_mod(prime, static_cast<std::uint64_t>(exponent), 25) *
                                        residue % 25);
    }
    n_mod25_ = residue;
}

std::vector<arith::PrimePower> associate(std::span<const arith::PrimePower> factors, int t) {
    if (t < 1 || t > 4) throw std::invalid_argument("associate index must lie in 1..4");
    std::vector<arith::PrimePower> out;
    out.reserve(factors.size());
    for (auto const& [prime, exponent] : factors) {
        int e = (exponent % 5) * t % 5;
        if (e != 0) out.push_back({prime, e});
    }
    return out;
}

namespace {

std::optional<std::uint64_t> checked_value(std::span<const arith::PrimePower> factors) {
    unsigned __int128 value = 1;
    for (auto const& [prime, exponent] : factors) {
        for (int i = 0; i < exponent; ++i) {
            value *= prime;
            if (value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(value);
}

}  // namespace

FactoredRadicand normalize(std::span<const arith::PrimePower> factors) {
    std::vector<arith::PrimePower> merged(factors.begin(), factors.end());
    std::sort(merged.begin(), merged.end());
    std::vector<arith::PrimePower> reduced;
    for (auto const& [prime, exponent] : merged) {
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        if (!arith::is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
        if (!reduced.empty() && reduced.back().prime == prime) {
            reduced.back().exponent = (reduced.back().exponent + exponent) % 5;
        } else {
            reduced.push_back({prime, exponent % 5});
        }
    }
    std::erase_if(reduced, [](arith::PrimePower const& pp) { return pp.exponent == 0; });
    if (reduced.empty()) throw DegenerateRadicand();

    std::optional<std::vector<arith::PrimePower>> best;
    std::uint64_t best_value = 0;
    for (int t = 1; t <= 4; ++t) {
        auto candidate = associate(reduced, t);
        auto value = checked_value(candidate);
        if (value && (!best || *value < best_value)) {
            best = std::move(candidate);
            best_value = *value;
        }
    }
    if (!best) throw std::overflow_error("no associate of the radicand fits in 64 bits");
    return FactoredRadicand(arith::PrimeFactorization::from_factors(std::move(*best)));
}

FactoredRadicand normalize(arith::PrimeFactorization const& f) { return normalize(f.factors()); }

FactoredRadicand normalize(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("radicand must be >= 2");
    return normalize(arith::factorize(n));
}

RamificationProfile ramification_profile(FactoredRadicand const& r) {
    RamificationProfile profile;
    for (auto const& [prime, exponent] : r.factors()) {
        if (prime == 5) continue;
        auto [f, g] = splitting(prime);
        profile.primes.push_back({prime, f, g});
        profile.d += g;
    }
    profile.lambda_ramified = lambda_ramified(r.n_mod25());
    if (profile.lambda_ramified) profile.d += 1;
    return profile;
}

bool zeta_norm(FactoredRadicand const& r) {
    for (auto const& [prime, exponent] : r.factors()) {
        unsigned const res = static_cast<unsigned>(prime % 25);
        switch (classify_prime(prime)) {
            case PrimeClass::Five: break;
            case PrimeClass::LType:
                if (res != 1) return false;
                break;
            case PrimeClass::QType:
                if (res != 7 && res != 18) return false;
                break;
            case PrimeClass::PType:
                if (res != 24) return false;
                break;
        }
    }
    return true;
}

QStar q_star(FormClass form) noexcept {
    switch (form) {
        case FormClass::R1_1:
        case FormClass::R1_2:
        case FormClass::R1_4:
        case FormClass::R2_3: return QStar::One;
        case FormClass::R1_3:
        case FormClass::R1_5:
        case FormClass::R1_6: return QStar::Two;
        case FormClass::R2_1:
        case FormClass::R2_2: return QStar::Zero;
        case FormClass::NotCovered: return QStar::Unknown;
    }
    return QStar::Unknown;
}

int ambiguous_rank(int d, QStar q) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    switch (q) {
        case QStar::Zero: return d - 3;
        case QStar::One: return d - 2;
        case QStar::Two: return d - 1;
        case QStar::Unknown: break;
    }
    throw IndeterminateRank();
}

RankBounds rank_bounds(RamificationProfile const& profile, bool zeta) noexcept {
    int const low = std::max(0, profile.d - 3);
    return {low, std::max(low, profile.d - 3 + (zeta ? 2 : 1))};
}

}  // namespace quintic
