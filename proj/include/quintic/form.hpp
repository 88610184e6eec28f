#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quintic {

// Radicand shapes predicting the rank of the ambiguous 5-class group.
// R1_* predict rank 1, R2_* predict rank 2, in the order they are usually
// listed:
//   R1_1  5^e q1^2 q2     R1_2  5^e p      R1_3  5^e q1
//   R1_4  p^e q1          R1_5  p^e        R1_6  q1^e q2
//   R2_1  5^e l           R2_2  l^e q1     R2_3  l^e
enum class FormClass { R1_1, R1_2, R1_3, R1_4, R1_5, R1_6, R2_1, R2_2, R2_3, NotCovered };

inline constexpr std::array<FormClass, 9> kCoveredForms = {
    FormClass::R1_1, FormClass::R1_2, FormClass::R1_3, FormClass::R1_4, FormClass::R1_5,
    FormClass::R1_6, FormClass::R2_1, FormClass::R2_2, FormClass::R2_3,
};

constexpr std::string_view to_string(FormClass form) noexcept {
    switch (form) {
        case FormClass::R1_1: return "R1_1";
        case FormClass::R1_2: return "R1_2";
        case FormClass::R1_3: return "R1_3";
        case FormClass::R1_4: return "R1_4";
        case FormClass::R1_5: return "R1_5";
        case FormClass::R1_6: return "R1_6";
        case FormClass::R2_1: return "R2_1";
        case FormClass::R2_2: return "R2_2";
        case FormClass::R2_3: return "R2_3";
        case FormClass::NotCovered: return "NotCovered";
    }
    return "NotCovered";
}

inline std::optional<FormClass> parse_form(std::string_view text) noexcept {
    for (FormClass f : kCoveredForms) {
        if (to_string(f) == text) return f;
    }
    if (text == to_string(FormClass::NotCovered)) return FormClass::NotCovered;
    return std::nullopt;
}

/// Raised for radicands that reduce to a perfect 5th power.
class DegenerateRadicand : public std::domain_error {
public:
    DegenerateRadicand() : std::domain_error("degenerate radicand") {}
};

/// Raised when the rank formula is asked for an unknown q*.
class IndeterminateRank : public std::domain_error {
public:
    IndeterminateRank() : std::domain_error("indeterminate") {}
};

}  // namespace quintic
