#include "quintic/classify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace quintic {

namespace {

constexpr bool is_pm7(std::uint64_t q) noexcept {
    auto r = q % 25;
    return r == 7 || r == 18;
}

// q1 residues admitted by R2_2: +-2, +-3, +-7 (mod 25).
constexpr bool is_r22_q_residue(std::uint64_t q) noexcept {
    switch (q % 25) {
        case 2: case 3: case 7: case 18: case 22: case 23: return true;
        default: return false;
    }
}

struct Shape {
    int fives = 0;
    std::vector<arith::PrimePower> l, p, q;
};

Shape shape_of(std::span<const arith::PrimePower> factors) {
    Shape s;
    for (auto const& pp : factors) {
        switch (classify_prime(pp.prime)) {
            case PrimeClass::Five: ++s.fives; break;
            case PrimeClass::LType: s.l.push_back(pp); break;
            case PrimeClass::PType: s.p.push_back(pp); break;
            case PrimeClass::QType: s.q.push_back(pp); break;
        }
    }
    return s;
}

bool only(Shape const& s, int fives, std::size_t l, std::size_t p, std::size_t q) {
    return s.fives == fives && s.l.size() == l && s.p.size() == p && s.q.size() == q;
}

// Literal test of one associate's exponent vector against every form.
std::optional<FormMatch> match_associate(std::span<const arith::PrimePower> factors, bool gate) {
    Shape const s = shape_of(factors);
    auto hit = [&](FormClass form, std::vector<std::uint64_t> roles) {
        return FormMatch{form, 0, std::move(roles), {factors.begin(), factors.end()}};
    };

    if (!gate && only(s, 1, 0, 0, 2)) {
        // 5^e q1^2 q2, at least one of q1, q2 not +-7 mod 25.
        for (int i = 0; i < 2; ++i) {
            auto const& q1 = s.q[i];
            auto const& q2 = s.q[1 - i];
            if (q1.exponent == 2 && q2.exponent == 1 && !(is_pm7(q1.prime) && is_pm7(q2.prime))) {
                return hit(FormClass::R1_1, {q1.prime, q2.prime});
            }
        }
    }
    if (!gate && only(s, 1, 0, 1, 0) && s.p[0].exponent == 1 && s.p[0].prime % 25 != 24) {
        return hit(FormClass::R1_2, {s.p[0].prime});
    }
    if (!gate && only(s, 1, 0, 0, 1) && s.q[0].exponent == 1 && is_pm7(s.q[0].prime)) {
        return hit(FormClass::R1_3, {s.q[0].prime});
    }
    if (gate && only(s, 0, 0, 1, 1) && s.q[0].exponent == 1 && s.p[0].prime % 25 != 24 &&
        !is_pm7(s.q[0].prime)) {
        return hit(FormClass::R1_4, {s.p[0].prime, s.q[0].prime});
    }
    if (gate && only(s, 0, 0, 1, 0) && s.p[0].prime % 25 == 24) {
        return hit(FormClass::R1_5, {s.p[0].prime});
    }
    if (gate && only(s, 0, 0, 0, 2) && is_pm7(s.q[0].prime) && is_pm7(s.q[1].prime)) {
        // q1^e1 q2: the unit-exponent prime is q2.
        if (s.q[1].exponent == 1) return hit(FormClass::R1_6, {s.q[0].prime, s.q[1].prime});
        if (s.q[0].exponent == 1) return hit(FormClass::R1_6, {s.q[1].prime, s.q[0].prime});
    }
    if (!gate && only(s, 1, 1, 0, 0) && s.l[0].exponent == 1 && s.l[0].prime % 25 != 1) {
        return hit(FormClass::R2_1, {s.l[0].prime});
    }
    if (gate && only(s, 0, 1, 0, 1) && s.q[0].exponent == 1 && is_r22_q_residue(s.q[0].prime)) {
        return hit(FormClass::R2_2, {s.l[0].prime, s.q[0].prime});
    }
    if (gate && only(s, 0, 1, 0, 0) && s.l[0].prime % 25 == 1) {
        return hit(FormClass::R2_3, {s.l[0].prime});
    }
    return std::nullopt;
}

}  // namespace

FormMatch match_form(FactoredRadicand const& r) {
    // The +-1, +-7 (mod 25) gate is the same for all four associates.
    bool const gate = is_pm1_pm7_mod25(r.n_mod25());
    for (int t = 1; t <= 4; ++t) {
        auto factors = associate(r.factors(), t);
        if (auto m = match_associate(factors, gate)) {
            m->associate_t = t;
            return *m;
        }
    }
    return {};
}

std::optional<int> predicted_rank(FormClass form) noexcept {
    switch (form) {
        case FormClass::R1_1:
        case FormClass::R1_2:
        case FormClass::R1_3:
        case FormClass::R1_4:
        case FormClass::R1_5:
        case FormClass::R1_6: return 1;
        case FormClass::R2_1:
        case FormClass::R2_2:
        case FormClass::R2_3: return 2;
        case FormClass::NotCovered: break;
    }
    return std::nullopt;
}

bool conjecture_match(FactoredRadicand const& r) {
    auto f = match_form(r).form;
    return f == FormClass::R1_6 || f == FormClass::R1_3 || f == FormClass::R1_1;
}

Classification classify(FactoredRadicand radicand, std::optional<std::uint64_t> input_n) {
    FormMatch match = match_form(radicand);
    RamificationProfile profile = ramification_profile(radicand);
    NormIndicators indicators{zeta_norm(radicand), q_star(match.form)};
    std::optional<int> rank = predicted_rank(match.form);
    FormClass const form = match.form;
    bool const cyclic = form == FormClass::R1_6 || form == FormClass::R1_3 || form == FormClass::R1_1;

    std::optional<RankBounds> bounds;
    if (form == FormClass::NotCovered) {
        bounds = rank_bounds(profile, indicators.zeta_is_norm);
    } else {
        if (ambiguous_rank(profile.d, indicators.q_star) != *rank) {
            throw std::logic_error("rank formula disagrees with form " + std::string(to_string(form)) +
                                   " for n = " + std::to_string(radicand.value()));
        }
        if (indicators.q_star == QStar::Two && !indicators.zeta_is_norm) {
            throw std::logic_error("q* = 2 without zeta5 being a norm for n = " +
                                   std::to_string(radicand.value()));
        }
    }
    return Classification{input_n,  std::move(radicand), std::move(match), rank, cyclic,
                          std::move(profile), indicators, bounds};
}

Classification classify(std::span<const arith::PrimePower> factors) {
    auto radicand = normalize(factors);
    // Keep the literal input when it is representable.
    std::optional<std::uint64_t> input_n;
    unsigned __int128 value = 1;
    constexpr unsigned __int128 kMax = std::numeric_limits<std::uint64_t>::max();
    bool fits = true;
    for (auto const& [prime, exponent] : factors) {
        for (int i = 0; i < exponent && fits; ++i) {
            value *= prime;
            fits = value <= kMax;
        }
    }
    if (fits) input_n = static_cast<std::uint64_t>(value);
    return classify(std::move(radicand), input_n);
}

Classification classify(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("radicand must be >= 2, got " + std::to_string(n));
    return classify(normalize(n), n);
}

}  // namespace quintic
