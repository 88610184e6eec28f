// quintic-rank: classify radicands of pure quintic fields by the predicted
// rank of the ambiguous 5-class group of Q(n^(1/5), zeta5).

#include "quintic/arith.hpp"
#include "quintic/classify.hpp"
#include "quintic/kummer.hpp"
#include "quintic/tables.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace quintic;

int run_classify(std::uint64_t n) {
    std::cout << to_json(classify(n)).dump(2) << '\n';
    return 0;
}

struct EnumerateArgs {
    std::uint64_t max = 0;
    std::optional<int> rank;
    std::optional<std::string> form;
    std::string format = "csv";
    bool raw = false;
    unsigned threads = 1;
};

void write_records(EnumerateArgs const& args, EnumerationFilter const& filter, TableFormat format) {
    EnumerationOptions const options{args.raw, args.threads};
    std::string buffer;
    auto flush = [&](bool force) {
        if (force || buffer.size() > (1u << 20)) {
            std::fwrite(buffer.data(), 1, buffer.size(), stdout);
            buffer.clear();
        }
    };
    bool first = true;
    switch (format) {
        case TableFormat::Csv: buffer += records_csv_header() + '\n'; break;
        case TableFormat::Markdown:
            buffer += "| n | canonical_n | form | predicted_rank | d | q_star | zeta_norm | lambda_ramified | "
                      "conjecture_cyclic | associate_t |\n|---|---|---|---|---|---|---|---|---|---|\n";
            break;
        case TableFormat::Json: buffer += "["; break;
    }
    enumerate_classified(args.max, filter, options, [&](Classification const& c) {
        switch (format) {
            case TableFormat::Csv: buffer += to_csv_row(c) + '\n'; break;
            case TableFormat::Markdown: {
                std::string row = to_csv_row(c);
                for (char& ch : row) {
                    if (ch == ',') ch = '|';
                }
                buffer += "| " + row + " |\n";
                break;
            }
            case TableFormat::Json:
                buffer += first ? "\n" : ",\n";
                buffer += to_json(c).dump();
                break;
        }
        first = false;
        flush(false);
    });
    if (format == TableFormat::Json) buffer += first ? "]\n" : "\n]\n";
    flush(true);
}

int run_enumerate(EnumerateArgs const& args) {
    auto format = parse_table_format(args.format);
    if (!format) throw CLI::ValidationError("--format", "expected csv, md or json");
    EnumerationFilter filter;
    filter.rank = args.rank;
    if (args.form) {
        auto form = parse_form(*args.form);
        if (!form) throw CLI::ValidationError("--form", "unknown form '" + *args.form + "'");
        filter.form = *form;
    }
    if (filter.form && *filter.form != FormClass::NotCovered) {
        // Published column layout for a single form.
        std::vector<TableRow> rows;
        if (!filter.rank || predicted_rank(*filter.form) == filter.rank) {
            rows = table_rows(*filter.form, args.max, EnumerationOptions{args.raw, args.threads});
        }
        std::cout << render_table(*filter.form, rows, *format);
        return 0;
    }
    write_records(args, filter, *format);
    return 0;
}

int run_verify(std::string const& format) {
    auto const& rows = published_fixtures();
    auto const findings = verify_fixtures(rows);
    std::map<std::size_t, int> flagged;
    for (auto const& f : findings) ++flagged[f.row_index];

    if (format == "json") {
        nlohmann::json doc;
        doc["rows"] = rows.size();
        doc["rows_with_findings"] = flagged.size();
        doc["findings"] = nlohmann::json::array();
        for (auto const& f : findings) doc["findings"].push_back(to_json(f));
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    for (auto const& f : findings) {
        std::cout << f.table_id << " row " << f.row_index << " [" << f.row_label << "] " << to_string(f.kind)
                  << ": " << f.evidence << '\n';
    }
    std::cout << rows.size() << " rows, " << rows.size() - flagged.size() << " confirmed, " << flagged.size()
              << " with findings (" << findings.size() << " findings)\n";
    return 0;
}

int run_oracle_check(std::uint64_t max_prime) {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    for (auto p : arith::primes_up_to(max_prime)) {
        if (p == 5) continue;
        ++checked;
        auto const law = splitting(p);
        auto const oracle = arith::cyclotomic_splitting_oracle(p);
        if (!(law == oracle)) {
            ++mismatches;
            std::cout << "mismatch at p = " << p << ": congruence (" << law.residue_degree << ","
                      << law.factor_count << "), oracle (" << oracle.residue_degree << "," << oracle.factor_count
                      << ")\n";
        }
    }
    std::cout << "checked " << checked << " primes up to " << max_prime << ", " << mismatches << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ambiguous 5-class rank classifier for pure quintic fields"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    auto* classify_cmd = app.add_subcommand("classify", "Classify one radicand and print a JSON record");
    classify_cmd->add_option("n", n, "Radicand (>= 2)")->required();

    EnumerateArgs enum_args;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Classify every radicand up to a bound");
    enumerate_cmd->add_option("--max", enum_args.max, "Upper bound (inclusive, at most 2^40)")->required();
    enumerate_cmd->add_option("--rank", enum_args.rank, "Keep only predicted rank 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    enumerate_cmd->add_option("--form", enum_args.form, "Keep only one form (R1_1 .. R2_3, NotCovered)");
    enumerate_cmd->add_option("--format", enum_args.format, "csv, md or json")
        ->check(CLI::IsMember({"csv", "md", "markdown", "json"}));
    enumerate_cmd->add_flag("--raw", enum_args.raw, "List every associate instead of canonical radicands only");
    enumerate_cmd->add_option("--threads", enum_args.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    std::string verify_format = "text";
    auto* verify_cmd = app.add_subcommand("verify-paper-tables", "Check the embedded published tables");
    verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::uint64_t max_prime = 0;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the splitting law with the F_p factorization");
    oracle_cmd->add_option("--max-prime", max_prime, "Largest prime to check")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify_cmd) return run_classify(n);
        if (*enumerate_cmd) return run_enumerate(enum_args);
        if (*verify_cmd) return run_verify(verify_format);
        if (*oracle_cmd) return run_oracle_check(max_prime);
    } catch (CLI::Error const& e) {
        return app.exit(e);
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
