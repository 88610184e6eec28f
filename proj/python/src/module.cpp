#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quintic/arith.hpp"
#include "quintic/classify.hpp"
#include "quintic/kummer.hpp"
#include "quintic/tables.hpp"

namespace py = pybind11;
using namespace quintic;

namespace {

py::object to_python(nlohmann::json const& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (auto const& v : j) out.append(to_python(v));
            return std::move(out);
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto const& [k, v] : j.items()) out[py::str(k)] = to_python(v);
            return std::move(out);
        }
        default: break;
    }
    throw std::runtime_error("unsupported json value");
}

FormClass form_arg(std::string const& name) {
    auto form = parse_form(name);
    if (!form) throw py::value_error("unknown form '" + name + "'");
    return *form;
}

TableFormat format_arg(std::string const& name) {
    auto format = parse_table_format(name);
    if (!format) throw py::value_error("unknown format '" + name + "', expected csv, md or json");
    return *format;
}

py::list factor_list(std::span<const arith::PrimePower> factors) {
    py::list out;
    for (auto const& [p, e] : factors) out.append(py::make_tuple(p, e));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ambiguous 5-class rank classifier for pure quintic fields";

    py::register_exception<DegenerateRadicand>(m, "DegenerateRadicand", PyExc_ValueError);
    py::register_exception<IndeterminateRank>(m, "IndeterminateRank", PyExc_ValueError);

    m.def("is_prime", &arith::is_prime, py::arg("n"));
    m.def("factorize", [](std::uint64_t n) { return factor_list(arith::factorize(n).factors()); }, py::arg("n"),
          "Prime factorization as a list of (prime, exponent).");
    m.def("mult_order_mod5", &arith::mult_order_mod5, py::arg("p"));
    m.def("splitting_oracle",
          [](std::uint64_t p) {
              auto s = arith::cyclotomic_splitting_oracle(p);
              return py::make_tuple(s.residue_degree, s.factor_count);
          },
          py::arg("p"), "(f, g) from factoring x^4 + x^3 + x^2 + x + 1 over F_p.");
    m.def("splitting",
          [](std::uint64_t p) {
              auto s = splitting(p);
              return py::make_tuple(s.residue_degree, s.factor_count);
          },
          py::arg("p"), "(f, g) from p mod 5.");

    m.def("normalize", [](std::uint64_t n) { return normalize(n).value(); }, py::arg("n"),
          "Canonical associate of n.");
    m.def("normalize_factors",
          [](std::vector<std::pair<std::uint64_t, int>> const& factors) {
              std::vector<arith::PrimePower> f;
              for (auto const& [p, e] : factors) f.push_back({p, e});
              return factor_list(normalize(f).factors());
          },
          py::arg("factors"));
    m.def("match_form",
          [](std::uint64_t n) {
              auto match = match_form(normalize(n));
              py::dict out;
              out["form"] = std::string(to_string(match.form));
              out["associate_t"] = match.associate_t == 0 ? py::object(py::none()) : py::int_(match.associate_t);
              out["roles"] = match.roles;
              return out;
          },
          py::arg("n"));
    m.def("classify", [](std::uint64_t n) { return to_python(to_json(classify(n))); }, py::arg("n"),
          "Classification record as a dict.");

    m.def("enumerate",
          [](std::uint64_t bound, std::optional<std::string> const& form, std::optional<int> rank, bool raw,
             unsigned threads) {
              EnumerationFilter filter;
              if (form) filter.form = form_arg(*form);
              filter.rank = rank;
              std::vector<Classification> records;
              {
                  py::gil_scoped_release release;
                  records = enumerate_classified(bound, filter, {raw, threads});
              }
              py::list out;
              for (auto const& c : records) out.append(to_python(to_json(c)));
              return out;
          },
          py::arg("bound"), py::kw_only(), py::arg("form") = py::none(), py::arg("rank") = py::none(),
          py::arg("raw") = false, py::arg("threads") = 1u);
    m.def("emit_table",
          [](std::string const& form, std::uint64_t bound, std::string const& format) {
              return emit_table(form_arg(form), bound, format_arg(format));
          },
          py::arg("form"), py::arg("bound"), py::arg("format") = "csv");
    m.def("verify_fixtures", [] {
        py::list out;
        for (auto const& d : verify_fixtures()) out.append(to_python(to_json(d)));
        return out;
    });
}
