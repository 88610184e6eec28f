#pragma once

// Enumeration of classified radicands, table emission in the published
// column layout, and the embedded fixtures of the published tables together
// with their consistency checker.

#include "quintic/classify.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quintic {

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationFilter {
    std::optional<FormClass> form;
    std::optional<int> rank;

    bool accepts(Classification const& c) const noexcept;
};

struct EnumerationOptions {
    bool raw = false;      // report every n instead of canonical radicands only
    unsigned threads = 1;  // worker threads; output order does not depend on it
};

inline constexpr std::uint64_t kMaxEnumerationBound = std::uint64_t{1} << 40;

using ClassificationSink = std::function<void(Classification const&)>;

/// Visits the classification of every 5th-power-free n in [2, bound] that
/// passes the filter, in increasing n.  Without `raw`, n is visited only
/// when it is its own canonical associate, so each field appears once.
/// Throws std::invalid_argument if bound exceeds kMaxEnumerationBound.
void enumerate_classified(std::uint64_t bound, EnumerationFilter const& filter,
                          EnumerationOptions const& options, ClassificationSink const& sink);

std::vector<Classification> enumerate_classified(std::uint64_t bound, EnumerationFilter const& filter,
                                                 EnumerationOptions const& options = {});

// ---------------------------------------------------------------------------
// Serialization of single records

/// Stable machine interface: n, canonical_n, form, predicted_rank, d,
/// q_star, zeta_norm, lambda_ramified, conjecture_cyclic, associate_t, plus
/// rank_bounds for radicands outside the nine forms.
nlohmann::json to_json(Classification const& c);

/// Factorization rendered as "5^2*7".
std::string factorization_string(std::span<const arith::PrimePower> factors);

enum class TableFormat { Csv, Markdown, Json };

std::optional<TableFormat> parse_table_format(std::string_view text) noexcept;

std::string records_csv_header();
std::string to_csv_row(Classification const& c);

// ---------------------------------------------------------------------------
// Published fixtures

struct StatedPrime {
    std::uint64_t value = 0;
    int mod5 = 0;   // as printed, e.g. -1
    int mod25 = 0;  // as printed, e.g. -7
};

struct FixtureRow {
    std::size_t index = 0;  // position in the fixture file, 0-based
    std::string table_id;   // "rank1-T1" .. "rank1-T6", "rank2-T1" .. "rank2-T3"
    std::vector<StatedPrime> primes;
    std::optional<std::uint64_t> stated_n;
    std::string printed_factorization;  // e.g. "5^2×7", verbatim
    int paper_h5 = 0;
    std::string paper_group;
    int paper_rank = 0;

    /// The radicand the row is about: stated_n when printed, otherwise the
    /// product of the printed factorization.
    std::uint64_t radicand() const;
};

/// The form whose examples a published table lists.
FormClass table_form(std::string_view table_id);

/// Parses fixture text (tab-separated, '#' comments).  Throws
/// std::runtime_error on malformed lines.
std::vector<FixtureRow> parse_fixtures(std::string_view text);

/// The embedded fixture rows, parsed once.
std::span<const FixtureRow> published_fixtures();

/// Product of a printed factorization such as "5^2×7" or "311^4×2"; nullopt
/// on overflow.  Throws std::runtime_error on unparsable text.
std::optional<std::uint64_t> evaluate_factorization(std::string_view printed);

enum class FindingKind {
    CompositeStatedPrime,
    ProductMismatch,
    ResidueMismatch,
    CongruenceGateFailure,
    FormMismatch,
    RankMismatch,
};

std::string_view to_string(FindingKind kind) noexcept;

struct DiscrepancyReport {
    std::size_t row_index = 0;
    std::string table_id;
    std::string row_label;  // stated primes, e.g. "557,43"
    FindingKind kind{};
    std::string evidence;   // recomputed values backing the finding

    friend bool operator==(DiscrepancyReport const&, DiscrepancyReport const&) = default;
};

std::vector<DiscrepancyReport> verify_row(FixtureRow const& row);
std::vector<DiscrepancyReport> verify_fixtures(std::span<const FixtureRow> rows);
std::vector<DiscrepancyReport> verify_fixtures();

nlohmann::json to_json(DiscrepancyReport const& d);

// ---------------------------------------------------------------------------
// Tables in the published layout

struct TableRow {
    Classification classification;
    std::vector<std::uint64_t> roles;
    std::optional<FixtureRow> fixture;  // consistent published row for the same field
};

/// Rows for `form` with canonical n <= bound, joined against consistent
/// fixture rows.  Throws std::invalid_argument for NotCovered.
std::vector<TableRow> table_rows(FormClass form, std::uint64_t bound, EnumerationOptions const& options = {});

/// Renders table rows; h5 and group columns come only from fixtures, and
/// read "unverified" otherwise.
std::string render_table(FormClass form, std::span<const TableRow> rows, TableFormat format);

std::string emit_table(FormClass form, std::uint64_t bound, TableFormat format,
                       EnumerationOptions const& options = {});

}  // namespace quintic
