#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/colorings.hpp"
#include "ramsey/core.hpp"
#include "ramsey/delta.hpp"
#include "ramsey/game.hpp"
#include "ramsey/verifier.hpp"

namespace py = pybind11;
using namespace ramsey;

namespace {

std::string color_str(Color c) { return c == Color::Red ? "R" : "B"; }

std::vector<Vertex> parse_bit_edge(const std::vector<std::string>& edge, int expected_length) {
    std::vector<Vertex> tokens;
    tokens.reserve(edge.size());
    for (const auto& bits : edge) {
        const auto v = BitVertex::from_string(bits);
        if (v.length() != expected_length)
            throw DomainError("edge vertices must have bit length " +
                              std::to_string(expected_length));
        tokens.push_back(v.value());
    }
    return tokens;
}

py::object big_int(const mpz_class& value) {
    // Hex sidesteps CPython's decimal string-conversion digit limit.
    return py::module_::import("builtins").attr("int")(value.get_str(16), 16);
}

py::dict tower_expr_dict(const TowerExpr& expr) {
    py::dict d;
    d["height"] = expr.height;
    d["argument"] = expr.argument;
    d["text"] = expr.text();
    d["digits"] = expr.digits_text();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "explicit Ramsey colorings, stepping-up constructions, the on-line "
              "builder-painter game, and brute-force verification at desk scale";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("enumerate_k_subsets", &enumerate_k_subsets, py::arg("domain_size"), py::arg("k"),
          "All k-subsets of {1..domain_size} in colex order.");

    m.def(
        "bit_compare",
        [](const std::string& a, const std::string& b) {
            const auto order = bit_compare(BitVertex::from_string(a), BitVertex::from_string(b));
            return order < 0 ? -1 : order > 0 ? 1 : 0;
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "delta",
        [](const std::string& a, const std::string& b) {
            return delta(BitVertex::from_string(a), BitVertex::from_string(b));
        },
        py::arg("a"), py::arg("b"),
        "Least 1-based index at which the two bit strings differ.");
    m.def(
        "delta_sequence",
        [](const std::vector<std::string>& vertices) {
            std::vector<BitVertex> parsed;
            parsed.reserve(vertices.size());
            for (const auto& bits : vertices) parsed.push_back(BitVertex::from_string(bits));
            return delta_sequence(parsed);
        },
        py::arg("vertices"));
    m.def(
        "classify",
        [](const std::vector<int>& deltas, int k) {
            return std::string(to_string(classify(deltas, k)));
        },
        py::arg("deltas"), py::arg("k"),
        "increasing / decreasing / zigzag / strong-zigzag / other");

    py::class_<RankColoringOracle>(m, "RankColoring")
        .def(py::init([](int N, int k, std::uint64_t seed) {
                 return RankColoringOracle(random_base(N, k, seed));
             }),
             py::arg("N"), py::arg("k"), py::arg("seed"))
        .def_property_readonly("N", [](const RankColoringOracle& o) { return o.domain().n; })
        .def_property_readonly("k", &RankColoringOracle::uniformity)
        .def(
            "color",
            [](const RankColoringOracle& oracle, const std::vector<Vertex>& edge) {
                return color_str(oracle.color(edge));
            },
            py::arg("edge"))
        .def(
            "phi",
            [](const RankColoringOracle& oracle, const std::vector<Vertex>& subset) {
                return oracle.base().value(subset);
            },
            py::arg("subset"), "Base value of a (k-1)-subset, in 1..k.");

    py::class_<ColoringOracle, std::unique_ptr<ColoringOracle>>(m, "SteppingColoring")
        .def(py::init([](int N, int k, std::uint64_t seed, bool strong,
                         bool allow_unverified) {
                 return make_stepping_oracle(random_base_two(N, k - 1, seed), k,
                                             strong ? StepVariant::Strong
                                                    : StepVariant::Standard,
                                             allow_unverified);
             }),
             py::arg("N"), py::arg("k"), py::arg("seed"), py::arg("strong") = false,
             py::arg("allow_unverified") = false)
        .def_property_readonly("N", [](const ColoringOracle& o) { return o.domain().n; })
        .def_property_readonly("k", &ColoringOracle::uniformity)
        .def(
            "color",
            [](const ColoringOracle& oracle, const std::vector<std::string>& edge) {
                return color_str(oracle.color(parse_bit_edge(edge, oracle.domain().n)));
            },
            py::arg("edge"), "Color of an increasing tuple of bit-string vertices.");

    m.def(
        "step_up_color",
        [](int N, const std::vector<std::pair<std::vector<Vertex>, std::string>>& phi_table,
           const std::vector<std::string>& edge, bool strong) {
            const int k = static_cast<int>(edge.size());
            auto phi = BaseTwoColoring::constant(N, k - 1, Color::Blue);
            for (const auto& [subset, color] : phi_table)
                phi.set_value(subset, color == "R" ? Color::Red : Color::Blue);
            const auto tokens = parse_bit_edge(edge, N);
            return color_str(strong ? step_up_color_strong(phi, tokens, k)
                                    : step_up_color(phi, tokens, k));
        },
        py::arg("N"), py::arg("phi_red_table"), py::arg("edge"), py::arg("strong") = false,
        "One-shot stepping color; phi_red_table lists ((k-1)-subset, 'R'|'B') pairs, "
        "unlisted subsets default to blue.");

    m.def(
        "greedy_partial_steiner",
        [](int n, int k) { return greedy_partial_steiner(n, k).blocks; },
        py::arg("n"), py::arg("k"));

    m.def(
        "run_game",
        [](int k, int n, const std::string& painter_spec, std::uint64_t budget) {
            GameConfig config{k, n, budget};
            auto painter = make_painter(painter_spec, config);
            const auto outcome = run_game(config, *painter);
            py::dict result;
            result["outcome"] =
                outcome.witness.kind == ConfigurationWitness::Kind::RedFork ? "RedF" : "Blue";
            result["witness"] = outcome.witness.vertices;
            result["s"] = outcome.stats.vertices;
            result["r"] = outcome.stats.red_edges;
            result["m"] = outcome.stats.total_edges;
            result["transcript"] = outcome.transcript;
            return result;
        },
        py::arg("k"), py::arg("n"), py::arg("painter") = "red", py::arg("budget") = 0,
        "Play the on-line game; painter is red|blue|random:SEED|minimax:DEPTH.");

    m.def(
        "exact_ramsey",
        [](int k, int t, int n, int n_max) -> py::object {
            const auto result = exact_ramsey(RamseyQuery{k, t, n, n_max});
            if (!result.value) return py::none();
            return py::int_(*result.value);
        },
        py::arg("k"), py::arg("t"), py::arg("n"), py::arg("n_max") = 10,
        "Least N forcing one of the two targets, or None when above n_max.");

    m.def(
        "check_sequence_dichotomy",
        [](const std::vector<int>& seq, int run_length, int extrema_count) {
            const auto result = check_sequence_dichotomy(seq, run_length, extrema_count);
            py::dict d;
            switch (result.kind) {
                case DichotomyResult::Kind::MonotoneRun:
                    d["kind"] = "monotone-run";
                    d["run_start"] = result.run_start;
                    break;
                case DichotomyResult::Kind::AlternatingExtrema:
                    d["kind"] = "alternating-extrema";
                    d["extrema"] = result.extrema;
                    break;
                case DichotomyResult::Kind::NotGuaranteed:
                    d["kind"] = "not-guaranteed";
                    break;
            }
            return d;
        },
        py::arg("seq"), py::arg("run_length"), py::arg("extrema_count"));

    m.def(
        "tower",
        [](int height, std::uint64_t x, std::uint64_t max_digits) {
            return big_int(tower(height, mpz_class(static_cast<unsigned long>(x)), max_digits));
        },
        py::arg("height"), py::arg("x"), py::arg("max_digits") = 100000);

    m.def(
        "online_game_bound",
        [](std::uint64_t s, std::uint64_t r, std::uint64_t m_edges, double alpha) {
            return tower_expr_dict(online_game_bound(s, r, m_edges, alpha));
        },
        py::arg("s"), py::arg("r"), py::arg("m"), py::arg("alpha"),
        "s * alpha^-r * (1-alpha)^(r-m) as a height-2 tower expression.");

    m.def(
        "bound_report",
        [](int k, int t, int n, double c, double c_prime,
           std::optional<std::uint64_t> inner) {
            const auto report = bound_report(k, t, n, c, c_prime, inner);
            py::dict d;
            d["theorem"] = report.theorem;
            d["formulas"] = report.formulas;
            d["lower"] = report.lower ? tower_expr_dict(*report.lower) : py::dict();
            d["upper"] = report.upper ? tower_expr_dict(*report.upper) : py::dict();
            if (report.recursion) d["recursion"] = *report.recursion;
            return d;
        },
        py::arg("k"), py::arg("t"), py::arg("n"), py::arg("c") = 1.0,
        py::arg("c_prime") = 1.0, py::arg("inner") = py::none());
}
