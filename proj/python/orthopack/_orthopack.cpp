// Python bindings for the main operations. The interface sticks to the text
// formats of the CLI (instance files in, JSON results out), which keeps the
// exact rationals lossless across the boundary.

#include "orthopack/geometry.hpp"
#include "orthopack/match.hpp"
#include "orthopack/oracles.hpp"
#include "orthopack/svg_render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace orthopack;

namespace {

Rational rat(const std::string& s) { return Rational::parse(s); }

std::pair<std::string, std::string> run_on_text(const std::string& instance_text,
                                                const std::string& algorithm, bool bound_audit) {
    InstanceFile inst = parse_instance_string(instance_text);
    InstanceFile packing;
    MatchResult res = run_match(inst, algorithm, bound_audit, &packing);
    return {res.to_json(), packing.items.empty() ? "" : format_instance(packing)};
}

py::dict adversary_on(const std::string& family, long n, const std::string& algorithm,
                      std::uint64_t seed) {
    AdversaryOutputs outs;
    MatchResult res = run_adversary(family, n, algorithm, seed, &outs);
    py::dict d;
    d["result"] = res.to_json();
    d["trace"] = outs.trace_text;
    d["certificate"] = outs.certificate ? format_instance(*outs.certificate) : std::string();
    return d;
}

std::vector<std::string> validate_text(const std::string& packing_text) {
    InstanceFile f = parse_instance_string(packing_text);
    std::vector<std::string> out;
    for (const auto& v : validate_packing(f.to_packing())) {
        std::ostringstream ss;
        ss << (v.kind == Violation::Kind::containment ? "containment" : "overlap") << " item "
           << v.first;
        if (v.second != v.first) ss << " vs " << v.second;
        out.push_back(ss.str());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_orthopack, m) {
    m.doc() = "Exact-arithmetic engine for online bin packing of orthogonal polygons";

    m.def("gen_instance_text",
          [](const std::string& family, long n, long k, const std::string& t,
             std::uint64_t seed) { return format_instance(gen_instance(family, n, k, rat(t), seed)); },
          py::arg("family"), py::arg("n"), py::arg("k") = 0, py::arg("t") = "1/2",
          py::arg("seed") = 1);

    m.def("run_match_json", &run_on_text, py::arg("instance_text"), py::arg("algorithm"),
          py::arg("bound_audit") = true,
          "Runs an online algorithm over an instance file; returns (result_json, packing_text).");

    m.def("run_adversary_json", &adversary_on, py::arg("family"), py::arg("n"),
          py::arg("algorithm"), py::arg("seed") = 0);

    m.def("validate_packing_text", &validate_text, py::arg("packing_text"),
          "Containment/overlap violations of a packing file; empty means valid.");

    m.def("render_svg",
          [](const std::string& packing_text) {
              return render_packing_svg(parse_instance_string(packing_text));
          },
          py::arg("packing_text"));

    m.def("sort_opt", &sort_opt, py::arg("n"), py::arg("k"));

    m.def("presenter_vs_policy",
          [](long n, long k, const std::string& policy, std::uint64_t seed) {
              return presenter_vs_sort_policy(n, k, make_sort_policy(policy, seed), nullptr, true);
          },
          py::arg("n"), py::arg("k"), py::arg("policy") = "middle-slot", py::arg("seed") = 0,
          "Arrays the halving presenter forces out of a sorting policy.");

    m.def("edd_feasible",
          [](const std::vector<std::pair<std::string, std::string>>& lw) {
              std::vector<LShape> items;
              for (const auto& [l, w] : lw) items.emplace_back(rat(l), rat(w), rat(l), rat(w));
              return edd_feasible(items);
          },
          py::arg("items"), "Single-bin feasibility of large symmetric (l, w) pairs.");

    m.def("opt_bins_large_symmetric",
          [](const std::vector<std::pair<std::string, std::string>>& lw) {
              std::vector<LShape> items;
              for (const auto& [l, w] : lw) items.emplace_back(rat(l), rat(w), rat(l), rat(w));
              return opt_bins_large_symmetric(items);
          },
          py::arg("items"));

    m.def("opt_bins_1d",
          [](const std::vector<std::string>& sizes, const std::string& capacity) {
              std::vector<Rational> s;
              for (const auto& v : sizes) s.push_back(rat(v));
              return opt_bins_1d(s, rat(capacity));
          },
          py::arg("sizes"), py::arg("capacity") = "1");
}
