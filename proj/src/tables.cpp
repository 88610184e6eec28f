#include "quintic/tables.hpp"

#include "detail.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quintic {

// ---------------------------------------------------------------------------
// Enumeration

bool EnumerationFilter::accepts(Classification const& c) const noexcept {
    if (form && c.form() != *form) return false;
    if (rank && c.predicted_rank != rank) return false;
    return true;
}

namespace {

// Canonical associate of a 5th-power-free n given by its sieve factors, or
// nullopt when n is not canonical and `want_all` is false.
std::optional<FactoredRadicand> canonical_radicand(std::uint64_t n, std::span<const arith::PrimePower> factors,
                                                   bool want_all) {
    int best_t = 1;
    std::uint64_t best = n;
    for (int t = 2; t <= 4; ++t) {
        unsigned __int128 value = 1;
        bool smaller = true;
        for (auto const& [prime, exponent] : factors) {
            for (int i = 0, e = exponent * t % 5; i < e; ++i) {
                value *= prime;
                if (value >= best) {
                    smaller = false;
                    break;
                }
            }
            if (!smaller) break;
        }
        if (smaller) {
            if (!want_all) return std::nullopt;
            best = static_cast<std::uint64_t>(value);
            best_t = t;
        }
    }
    return detail::Access::trusted_radicand(best, associate(factors, best_t));
}

std::vector<Classification> classify_chunk(std::uint64_t lo, std::uint64_t hi,
                                           std::span<const std::uint64_t> primes,
                                           EnumerationFilter const& filter, bool raw) {
    std::vector<Classification> out;
    arith::factor_range(lo, hi, primes, [&](std::uint64_t n, std::span<const arith::PrimePower> factors) {
        for (auto const& pp : factors) {
            if (pp.exponent >= 5) return;
        }
        auto radicand = canonical_radicand(n, factors, raw);
        if (!radicand) return;
        auto c = classify(std::move(*radicand), n);
        if (filter.accepts(c)) out.push_back(std::move(c));
    });
    return out;
}

}  // namespace

void enumerate_classified(std::uint64_t bound, EnumerationFilter const& filter,
                          EnumerationOptions const& options, ClassificationSink const& sink) {
    if (bound > kMaxEnumerationBound) {
        throw std::invalid_argument("enumeration bound exceeds 2^40");
    }
    if (bound < 2) return;
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= bound) ++root;
    auto const primes = arith::primes_up_to(root);

    constexpr std::uint64_t kChunk = std::uint64_t{1} << 18;
    unsigned const workers = std::max(1u, options.threads);
    std::deque<std::future<std::vector<Classification>>> pending;
    auto drain_one = [&] {
        for (auto const& c : pending.front().get()) sink(c);
        pending.pop_front();
    };
    for (std::uint64_t lo = 2; lo <= bound;) {
        std::uint64_t const hi = std::min(bound + 1, lo + kChunk);
        if (workers == 1) {
            for (auto const& c : classify_chunk(lo, hi, primes, filter, options.raw)) sink(c);
        } else {
            if (pending.size() >= workers) drain_one();
            pending.push_back(std::async(std::launch::async, [lo, hi, &primes, &filter, &options] {
                return classify_chunk(lo, hi, primes, filter, options.raw);
            }));
        }
        lo = hi;
    }
    while (!pending.empty()) drain_one();
}

std::vector<Classification> enumerate_classified(std::uint64_t bound, EnumerationFilter const& filter,
                                                 EnumerationOptions const& options) {
    std::vector<Classification> out;
    enumerate_classified(bound, filter, options, [&](Classification const& c) { out.push_back(c); });
    return out;
}

// ---------------------------------------------------------------------------
// Serialization of single records

std::string factorization_string(std::span<const arith::PrimePower> factors) {
    std::string out;
    for (auto const& [prime, exponent] : factors) {
        if (!out.empty()) out += '*';
        out += std::to_string(prime);
        if (exponent != 1) out += '^' + std::to_string(exponent);
    }
    return out;
}

nlohmann::json to_json(Classification const& c) {
    nlohmann::json j;
    j["n"] = c.input_n ? nlohmann::json(*c.input_n) : nlohmann::json(nullptr);
    j["canonical_n"] = c.canonical_n();
    j["form"] = std::string(to_string(c.form()));
    j["predicted_rank"] = c.predicted_rank ? nlohmann::json(*c.predicted_rank) : nlohmann::json(nullptr);
    j["d"] = c.profile.d;
    j["q_star"] = c.indicators.q_star == QStar::Unknown
                      ? nlohmann::json(nullptr)
                      : nlohmann::json(static_cast<int>(c.indicators.q_star));
    j["zeta_norm"] = c.indicators.zeta_is_norm;
    j["lambda_ramified"] = c.profile.lambda_ramified;
    j["conjecture_cyclic"] = c.conjecture_cyclic;
    j["associate_t"] = c.match.associate_t == 0 ? nlohmann::json(nullptr) : nlohmann::json(c.match.associate_t);
    if (c.bounds) j["rank_bounds"] = {c.bounds->low, c.bounds->high};
    return j;
}

std::optional<TableFormat> parse_table_format(std::string_view text) noexcept {
    if (text == "csv") return TableFormat::Csv;
    if (text == "md" || text == "markdown") return TableFormat::Markdown;
    if (text == "json") return TableFormat::Json;
    return std::nullopt;
}

std::string records_csv_header() {
    return "n,canonical_n,form,predicted_rank,d,q_star,zeta_norm,lambda_ramified,conjecture_cyclic,associate_t";
}

std::string to_csv_row(Classification const& c) {
    auto opt = [](auto const& v) { return v ? std::to_string(*v) : std::string(); };
    std::string q = c.indicators.q_star == QStar::Unknown ? "" : std::string(to_string(c.indicators.q_star));
    std::ostringstream os;
    os << opt(c.input_n) << ',' << c.canonical_n() << ',' << to_string(c.form()) << ',' << opt(c.predicted_rank)
       << ',' << c.profile.d << ',' << q << ',' << (c.indicators.zeta_is_norm ? "true" : "false") << ','
       << (c.profile.lambda_ramified ? "true" : "false") << ',' << (c.conjecture_cyclic ? "true" : "false") << ','
       << (c.match.associate_t == 0 ? "" : std::to_string(c.match.associate_t));
    return os.str();
}

// ---------------------------------------------------------------------------
// Published fixtures

namespace {

std::vector<std::string_view> split(std::string_view text, std::string_view sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + sep.size();
    }
    return parts;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename Int>
Int parse_int(std::string_view s, std::string_view what) {
    s = strip(s);
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("bad " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return value;
}

constexpr std::string_view kTimes = "\xC3\x97";  // U+00D7

int reduce(int printed, int modulus) { return ((printed % modulus) + modulus) % modulus; }

std::string join_primes(FixtureRow const& row) {
    std::string out;
    for (auto const& p : row.primes) {
        if (!out.empty()) out += ',';
        out += std::to_string(p.value);
    }
    return out;
}

std::string pretty_factorization(std::uint64_t n) {
    std::string out;
    auto const f = arith::factorize(n);
    for (auto const& [prime, exponent] : f.factors()) {
        if (!out.empty()) out += "*";
        out += std::to_string(prime);
        if (exponent != 1) out += "^" + std::to_string(exponent);
    }
    return out;
}

bool form_requires_gate(FormClass form) {
    switch (form) {
        case FormClass::R1_4:
        case FormClass::R1_5:
        case FormClass::R1_6:
        case FormClass::R2_2:
        case FormClass::R2_3: return true;
        default: return false;
    }
}

}  // namespace

std::optional<std::uint64_t> evaluate_factorization(std::string_view printed) {
    std::string normalized(strip(printed));
    for (std::size_t pos; (pos = normalized.find(kTimes)) != std::string::npos;) {
        normalized.replace(pos, kTimes.size(), "*");
    }
    unsigned __int128 value = 1;
    for (auto part : split(normalized, "*")) {
        auto pieces = split(part, "^");
        if (pieces.size() > 2) throw std::runtime_error("bad factor '" + std::string(part) + "'");
        auto base = parse_int<std::uint64_t>(pieces[0], "factor");
        int exponent = pieces.size() == 2 ? parse_int<int>(pieces[1], "exponent") : 1;
        for (int i = 0; i < exponent; ++i) {
            value *= base;
            if (value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(value);
}

std::uint64_t FixtureRow::radicand() const {
    if (stated_n) return *stated_n;
    auto v = evaluate_factorization(printed_factorization);
    if (!v) throw std::overflow_error("fixture factorization exceeds 64 bits");
    return *v;
}

FormClass table_form(std::string_view table_id) {
    static const std::map<std::string_view, FormClass> kTables = {
        {"rank1-T1", FormClass::R1_5}, {"rank1-T2", FormClass::R1_6}, {"rank1-T3", FormClass::R1_3},
        {"rank1-T4", FormClass::R1_1}, {"rank1-T5", FormClass::R1_4}, {"rank1-T6", FormClass::R1_2},
        {"rank2-T1", FormClass::R2_1}, {"rank2-T2", FormClass::R2_2}, {"rank2-T3", FormClass::R2_3},
    };
    auto it = kTables.find(table_id);
    if (it == kTables.end()) throw std::invalid_argument("unknown table id '" + std::string(table_id) + "'");
    return it->second;
}

std::vector<FixtureRow> parse_fixtures(std::string_view text) {
    std::vector<FixtureRow> rows;
    std::size_t line_no = 0;
    for (auto line : split(text, "\n")) {
        ++line_no;
        line = strip(line);
        if (line.empty() || line.front() == '#') continue;
        auto cols = split(line, "\t");
        if (cols.size() != 9) {
            throw std::runtime_error("fixture line " + std::to_string(line_no) + ": expected 9 columns, got " +
                                     std::to_string(cols.size()));
        }
        FixtureRow row;
        row.index = rows.size();
        row.table_id = std::string(strip(cols[0]));
        table_form(row.table_id);
        auto primes = split(cols[1], ",");
        auto mod5 = split(cols[2], ",");
        auto mod25 = split(cols[3], ",");
        if (primes.size() != mod5.size() || primes.size() != mod25.size()) {
            throw std::runtime_error("fixture line " + std::to_string(line_no) + ": residue lists do not align");
        }
        for (std::size_t i = 0; i < primes.size(); ++i) {
            row.primes.push_back({parse_int<std::uint64_t>(primes[i], "prime"), parse_int<int>(mod5[i], "mod 5"),
                                  parse_int<int>(mod25[i], "mod 25")});
        }
        if (strip(cols[4]) != "-") row.stated_n = parse_int<std::uint64_t>(cols[4], "n");
        row.printed_factorization = std::string(strip(cols[5]));
        evaluate_factorization(row.printed_factorization);
        row.paper_h5 = parse_int<int>(cols[6], "h5");
        row.paper_group = std::string(strip(cols[7]));
        row.paper_rank = parse_int<int>(cols[8], "rank");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::span<const FixtureRow> published_fixtures() {
    static const std::vector<FixtureRow> kRows = parse_fixtures(detail::embedded_fixture_text());
    return kRows;
}

std::string_view to_string(FindingKind kind) noexcept {
    switch (kind) {
        case FindingKind::CompositeStatedPrime: return "composite-stated-prime";
        case FindingKind::ProductMismatch: return "product-mismatch";
        case FindingKind::ResidueMismatch: return "residue-mismatch";
        case FindingKind::CongruenceGateFailure: return "congruence-gate-failure";
        case FindingKind::FormMismatch: return "form-mismatch";
        case FindingKind::RankMismatch: return "rank-mismatch";
    }
    return "?";
}

std::vector<DiscrepancyReport> verify_row(FixtureRow const& row) {
    std::vector<DiscrepancyReport> out;
    auto report = [&](FindingKind kind, std::string evidence) {
        out.push_back({row.index, row.table_id, join_primes(row), kind, std::move(evidence)});
    };
    FormClass const expected = table_form(row.table_id);

    for (auto const& p : row.primes) {
        if (!arith::is_prime(p.value)) {
            report(FindingKind::CompositeStatedPrime,
                   std::to_string(p.value) + " = " + pretty_factorization(p.value));
        }
        auto actual5 = static_cast<int>(p.value % 5);
        auto actual25 = static_cast<int>(p.value % 25);
        if (reduce(p.mod5, 5) != actual5) {
            report(FindingKind::ResidueMismatch, std::to_string(p.value) + " mod 5 = " + std::to_string(actual5) +
                                                     ", printed " + std::to_string(p.mod5));
        }
        if (reduce(p.mod25, 25) != actual25) {
            report(FindingKind::ResidueMismatch, std::to_string(p.value) + " mod 25 = " +
                                                     std::to_string(actual25) + ", printed " +
                                                     std::to_string(p.mod25));
        }
    }

    auto const printed_value = evaluate_factorization(row.printed_factorization);
    if (row.stated_n && printed_value != row.stated_n) {
        report(FindingKind::ProductMismatch,
               row.printed_factorization + " = " + (printed_value ? std::to_string(*printed_value) : "overflow") +
                   ", printed n = " + std::to_string(*row.stated_n));
    }

    std::uint64_t const n = row.radicand();
    std::set<std::uint64_t> support;
    auto const factored = arith::factorize(n);
    for (auto const& pp : factored.factors()) {
        if (pp.prime != 5) support.insert(pp.prime);
    }
    std::set<std::uint64_t> stated;
    for (auto const& p : row.primes) stated.insert(p.value);
    if (support != stated) {
        report(FindingKind::ProductMismatch, "n = " + std::to_string(n) + " = " + pretty_factorization(n) +
                                                 ", stated primes " + join_primes(row));
    }

    unsigned const r25 = static_cast<unsigned>(n % 25);
    if (is_pm1_pm7_mod25(r25) != form_requires_gate(expected)) {
        report(FindingKind::CongruenceGateFailure,
               "n = " + std::to_string(n) + " = " + std::to_string(r25) + " (mod 25); " +
                   std::string(to_string(expected)) + " requires n " +
                   (form_requires_gate(expected) ? "=" : "!=") + " +-1, +-7 (mod 25)");
    }

    auto const c = classify(n);
    if (c.form() != expected) {
        report(FindingKind::FormMismatch, "n = " + std::to_string(n) + " classifies as " +
                                              std::string(to_string(c.form())) + ", table lists " +
                                              std::string(to_string(expected)));
    }
    if (c.predicted_rank != row.paper_rank) {
        report(FindingKind::RankMismatch, "n = " + std::to_string(n) + " predicted rank " +
                                              (c.predicted_rank ? std::to_string(*c.predicted_rank) : "none") +
                                              ", printed " + std::to_string(row.paper_rank));
    }
    return out;
}

std::vector<DiscrepancyReport> verify_fixtures(std::span<const FixtureRow> rows) {
    std::vector<DiscrepancyReport> out;
    for (auto const& row : rows) {
        auto findings = verify_row(row);
        out.insert(out.end(), findings.begin(), findings.end());
    }
    return out;
}

std::vector<DiscrepancyReport> verify_fixtures() { return verify_fixtures(published_fixtures()); }

nlohmann::json to_json(DiscrepancyReport const& d) {
    return {{"row", d.row_index},   {"table", d.table_id},
            {"primes", d.row_label}, {"kind", std::string(to_string(d.kind))},
            {"evidence", d.evidence}};
}

// ---------------------------------------------------------------------------
// Tables in the published layout

namespace {

std::vector<std::string> role_names(FormClass form) {
    switch (form) {
        case FormClass::R1_1:
        case FormClass::R1_6: return {"q1", "q2"};
        case FormClass::R1_2:
        case FormClass::R1_5: return {"p"};
        case FormClass::R1_3: return {"q1"};
        case FormClass::R1_4: return {"p", "q1"};
        case FormClass::R2_1:
        case FormClass::R2_3: return {"l"};
        case FormClass::R2_2: return {"l", "q1"};
        case FormClass::NotCovered: break;
    }
    throw std::invalid_argument("no table layout for NotCovered");
}

std::map<std::uint64_t, FixtureRow> consistent_fixtures_by_field() {
    std::map<std::uint64_t, FixtureRow> out;
    for (auto const& row : published_fixtures()) {
        if (!verify_row(row).empty()) continue;
        out.emplace(normalize(row.radicand()).value(), row);
    }
    return out;
}

std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ',', 'x');
    return s;
}

}  // namespace

std::vector<TableRow> table_rows(FormClass form, std::uint64_t bound, EnumerationOptions const& options) {
    role_names(form);
    static const auto kFixtures = consistent_fixtures_by_field();
    std::vector<TableRow> rows;
    enumerate_classified(bound, EnumerationFilter{form, std::nullopt}, options, [&](Classification const& c) {
        TableRow row{c, c.match.roles, std::nullopt};
        if (auto it = kFixtures.find(c.canonical_n()); it != kFixtures.end()) row.fixture = it->second;
        rows.push_back(std::move(row));
    });
    return rows;
}

std::string render_table(FormClass form, std::span<const TableRow> rows, TableFormat format) {
    auto const roles = role_names(form);
    std::vector<std::string> columns;
    for (auto const& r : roles) {
        columns.push_back(r);
        columns.push_back(r + " mod 5");
        columns.push_back(r + " mod 25");
    }
    for (auto name : {"n", "factorization", "published n", "h_k5", "C_k5", "rank"}) columns.emplace_back(name);

    // Cells as strings, with a flag telling whether the cell is a JSON number.
    std::vector<std::vector<std::pair<std::string, bool>>> cells;
    for (auto const& row : rows) {
        auto const& c = row.classification;
        std::vector<std::pair<std::string, bool>> line;
        for (auto prime : row.roles) {
            line.emplace_back(std::to_string(prime), true);
            line.emplace_back(std::to_string(prime % 5), true);
            line.emplace_back(std::to_string(prime % 25), true);
        }
        line.emplace_back(std::to_string(c.input_n.value_or(c.canonical_n())), true);
        line.emplace_back(factorization_string(c.radicand.factors()), false);
        if (row.fixture) {
            line.emplace_back(std::to_string(row.fixture->radicand()), true);
            line.emplace_back(std::to_string(row.fixture->paper_h5), true);
            line.emplace_back(row.fixture->paper_group, false);
        } else {
            line.emplace_back("unverified", false);
            line.emplace_back("unverified", false);
            line.emplace_back("unverified", false);
        }
        line.emplace_back(std::to_string(c.predicted_rank.value_or(0)), true);
        cells.push_back(std::move(line));
    }

    std::ostringstream os;
    switch (format) {
        case TableFormat::Csv: {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                std::string name = columns[i];
                std::replace(name.begin(), name.end(), ' ', '_');
                os << (i ? "," : "") << name;
            }
            os << '\n';
            for (auto const& line : cells) {
                for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_safe(line[i].first);
                os << '\n';
            }
            break;
        }
        case TableFormat::Markdown: {
            os << '|';
            for (auto const& col : columns) os << ' ' << col << " |";
            os << "\n|";
            for (std::size_t i = 0; i < columns.size(); ++i) os << "---|";
            os << '\n';
            for (auto const& line : cells) {
                os << '|';
                for (auto const& [text, numeric] : line) os << ' ' << text << " |";
                os << '\n';
            }
            break;
        }
        case TableFormat::Json: {
            nlohmann::json doc = nlohmann::json::array();
            for (auto const& line : cells) {
                nlohmann::json obj = nlohmann::json::object();
                for (std::size_t i = 0; i < line.size(); ++i) {
                    auto const& [text, numeric] = line[i];
                    std::string key = columns[i];
                    std::replace(key.begin(), key.end(), ' ', '_');
                    if (numeric) {
                        obj[key] = parse_int<std::uint64_t>(text, key);
                    } else {
                        obj[key] = text;
                    }
                }
                doc.push_back(std::move(obj));
            }
            os << doc.dump(2) << '\n';
            break;
        }
    }
    return os.str();
}

std::string emit_table(FormClass form, std::uint64_t bound, TableFormat format, EnumerationOptions const& options) {
    auto rows = table_rows(form, bound, options);
    return render_table(form, rows, format);
}

}  // namespace quintic
