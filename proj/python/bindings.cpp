#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "basesize/basecount.hpp"
#include "basesize/characters.hpp"
#include "basesize/cli.hpp"
#include "basesize/errors.hpp"
#include "basesize/oracle/group_spec.hpp"
#include "basesize/oracle/search.hpp"

namespace py = pybind11;
using namespace basesize;

namespace {

py::int_ to_py(const BigInt& x) {
    const auto text = to_decimal(x);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& x) { return from_decimal(py::str(x).cast<std::string>()); }

CycleType to_cycle_type(const std::vector<unsigned>& parts) { return CycleType::from_parts(parts); }

py::list trace_list(const std::vector<OrbitReport>& trace) {
    py::list out;
    for (const auto& r : trace) {
        py::dict row;
        row["l"] = r.l;
        row["regular"] = to_py(r.regular);
        row["o"] = to_py(r.o);
        row["o_K"] = to_py(r.o_K);
        row["method"] = to_string(r.method);
        out.append(row);
    }
    return out;
}

py::dict report_dict(const BaseSizeReport& r) {
    py::dict d;
    d["action"] = r.action;
    d["domain_size"] = to_py(r.domain_size);
    d["base_size"] = r.base_size ? py::object(py::int_(*r.base_size)) : py::object(py::none());
    d["trace"] = trace_list(r.trace);
    d["candidate_only"] = r.candidate_only;
    d["reference_base_size"] =
        r.reference_base_size ? py::object(py::int_(*r.reference_base_size)) : py::object(py::none());
    d["warnings"] = r.warnings;
    return d;
}

SearchOptions options(std::optional<unsigned long> max_l) {
    SearchOptions o;
    o.max_l = max_l;
    return o;
}

oracle::InducedAction action_for(const std::string& spec, const std::string& labels) {
    return oracle::build_action(oracle::parse_group_spec(spec), oracle::parse_label_mode(labels));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Base sizes and regular-orbit counts of permutation groups";

    auto base_error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", base_error.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", base_error.ptr());

    m.def("enumerate_cycle_types", [](unsigned n) {
        std::vector<std::vector<unsigned>> out;
        for (const auto& ct : enumerate_cycle_types(n)) out.push_back(ct.parts());
        return out;
    }, py::arg("n"), "Partitions of n as non-increasing cycle-length lists.");
    m.def("class_size", [](const std::vector<unsigned>& parts) { return to_py(class_size(to_cycle_type(parts))); },
          py::arg("parts"));
    m.def("sign_of", [](const std::vector<unsigned>& parts) { return sign_of(to_cycle_type(parts)); },
          py::arg("parts"));
    m.def("chi_subsets",
          [](const std::vector<unsigned>& parts, unsigned k) { return to_py(chi_subsets(to_cycle_type(parts), k)); },
          py::arg("parts"), py::arg("k"));
    m.def("chi_uniform_partitions",
          [](const std::vector<unsigned>& parts, unsigned r, unsigned s) {
              return to_py(chi_uniform_partitions(to_cycle_type(parts), r, s));
          },
          py::arg("parts"), py::arg("r"), py::arg("s"));
    m.def("inner_product",
          [](unsigned n, unsigned k, unsigned l, const std::string& phi) {
              if (phi != "sgn" && phi != "trivial") throw InputError("phi must be 'sgn' or 'trivial'");
              const auto classes = class_table(n);
              const auto linear = phi == "sgn" ? sign_vector(n) : trivial_vector(n);
              return to_py(inner_product(classes, linear, subsets_character(classes, k), l));
          },
          py::arg("n"), py::arg("k"), py::arg("l"), py::arg("phi") = "sgn",
          "<phi, chi^l> for S_n on k-subsets.");
    m.def("orbit_counts",
          [](unsigned n, unsigned k, unsigned l) {
              const auto classes = class_table(n);
              const auto c = orbit_counts(classes, subsets_character(classes, k), l);
              return py::make_tuple(to_py(c.o), to_py(c.o_K));
          },
          py::arg("n"), py::arg("k"), py::arg("l"), "(o(l), o_K(l)) for S_n on k-subsets.");

    m.def("base_size_subsets",
          [](unsigned n, unsigned k, std::optional<unsigned long> max_l) {
              return report_dict(base_size_subsets(n, k, options(max_l)));
          },
          py::arg("n"), py::arg("k"), py::arg("max_l") = py::none());
    m.def("regular_orbit_count", [](unsigned n, unsigned k, unsigned l) { return to_py(regular_orbit_count(n, k, l)); },
          py::arg("n"), py::arg("k"), py::arg("l"));
    m.def("base_size_wreath_subsets",
          [](unsigned n, unsigned k, const py::int_& d, std::optional<unsigned long> max_l) {
              const auto r = base_size_wreath_subsets(n, k, from_py(d), options(max_l));
              py::dict out;
              out["base_size"] = r.base_size;
              out["distinguishing_number"] = to_py(r.distinguishing_number);
              out["trace"] = trace_list(r.trace);
              return out;
          },
          py::arg("n"), py::arg("k"), py::arg("distinguishing_number"), py::arg("max_l") = py::none());
    m.def("large_base_bounds",
          [](unsigned m_, unsigned k, unsigned r) {
              const auto b = large_base_bounds(m_, k, r);
              return py::make_tuple(b.lower, b.upper);
          },
          py::arg("m"), py::arg("k"), py::arg("r"));
    m.def("base_size_partitions_action",
          [](unsigned n, unsigned r, unsigned s, std::optional<unsigned long> max_l) {
              return report_dict(base_size_partitions_action(n, r, s, options(max_l)));
          },
          py::arg("n"), py::arg("r"), py::arg("s"), py::arg("max_l") = py::none());

    m.def("oracle_base_size",
          [](const std::string& spec, const std::string& labels) {
              return oracle::base_size_bruteforce(action_for(spec, labels));
          },
          py::arg("spec"), py::arg("labels") = "default");
    m.def("oracle_orbit_counts",
          [](const std::string& spec, unsigned l, const std::string& labels) {
              const auto r = oracle::orbit_counts_bruteforce(action_for(spec, labels), l);
              py::dict d;
              d["regular"] = to_py(r.regular);
              d["o"] = to_py(r.o);
              d["o_K"] = to_py(r.o_K);
              return d;
          },
          py::arg("spec"), py::arg("l"), py::arg("labels") = "default");
    m.def("oracle_is_base_controlling",
          [](const std::string& spec, const std::string& labels) {
              const auto v = oracle::is_base_controlling(action_for(spec, labels));
              return py::make_tuple(v.controlling, v.counterexample, v.stabilizer_order);
          },
          py::arg("spec"), py::arg("labels") = "default");
    m.def("distinguishing_number",
          [](const std::string& spec) { return oracle::distinguishing_number(action_for(spec, "default")); },
          py::arg("spec"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs a CLI command in-process; returns (exit_code, stdout, stderr).");
}
