// Python bindings. Points cross the boundary as integer indices; the
// enumeration and report helpers translate to labels where that is the
// friendlier currency (mirroring the CLI's output).

#include "mvfp/contraction.hpp"
#include "mvfp/endpoint.hpp"
#include "mvfp/metric.hpp"
#include "mvfp/multimap.hpp"
#include "mvfp/oracle.hpp"
#include "mvfp/problem.hpp"
#include "mvfp/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace mvfp;

namespace {

PointSet set_from_indices(const std::vector<int>& indices) {
    std::vector<Point> members;
    members.reserve(indices.size());
    for (int i : indices) members.push_back(Point{i});
    return PointSet(std::move(members));
}

std::vector<int> indices_of(const std::vector<Point>& points) {
    std::vector<int> out;
    out.reserve(points.size());
    for (Point p : points) out.push_back(p.index);
    return out;
}

std::vector<double> labels_of(const MetricSpace& space, const std::vector<Point>& points) {
    std::vector<double> out;
    out.reserve(points.size());
    for (Point p : points) out.push_back(space.label(p));
    return out;
}

py::dict report_to_dict(const MetricSpace& space, const CertificateReport& report) {
    py::dict d;
    d["kind"] = to_string(report.kind);
    d["pairs_checked"] = report.pairs_checked;
    d["passed"] = report.passed;
    d["premise_ok"] = report.premise_ok;
    d["worst_margin"] = report.worst_margin;
    if (report.worst_pair)
        d["worst_pair"] = py::make_tuple(space.label(report.worst_pair->first),
                                         space.label(report.worst_pair->second));
    else
        d["worst_pair"] = py::none();
    d["note"] = report.note;
    return d;
}

py::dict trace_to_dict(const MetricSpace& space, const IterationTrace& trace) {
    py::dict d;
    d["indices"] = indices_of(trace.points);
    d["labels"] = labels_of(space, trace.points);
    d["step_gaps"] = trace.step_gaps;
    d["epsilons"] = trace.epsilons;
    d["alphas"] = trace.alphas; // alphas[0] is NaN: no pair precedes step 0
    d["residuals_s"] = trace.residuals_s;
    d["residuals_t"] = trace.residuals_t;
    d["steps"] = trace.steps();
    switch (trace.terminated) {
        case Termination::Converged: d["terminated"] = "converged"; break;
        case Termination::MaxIterations: d["terminated"] = "max-iterations"; break;
        case Termination::Stalled: d["terminated"] = "stalled"; break;
    }
    d["note"] = trace.note;
    return d;
}

py::dict endpoint_to_dict(const MetricSpace& space, const EndpointResult& result) {
    py::dict d;
    if (result.endpoint)
        d["endpoint"] = space.label(*result.endpoint);
    else
        d["endpoint"] = py::none();
    d["final_gap"] = result.final_gap;
    d["certificate"] = to_string(result.certificate_kind);
    if (std::isnan(result.tail_alpha))
        d["tail_alpha"] = py::none();
    else
        d["tail_alpha"] = result.tail_alpha;
    d["tail_ok"] = result.tail_condition_ok;
    d["unique"] = result.unique;
    d["sequence"] = labels_of(space, result.minimizing_sequence);
    d["sequence_gaps"] = result.sequence_gaps;
    return d;
}

ContractionSpec spec_of(const ProblemFile& problem) {
    return make_contraction_spec(problem.contraction, problem.space, problem.s, problem.t);
}

} // namespace

PYBIND11_MODULE(_mvfp, m) {
    m.doc() = "Common fixed points and endpoints of finite multi-valued maps";

    py::register_exception<CertificateError>(m, "CertificateError");

    py::class_<MetricSpace>(m, "MetricSpace")
        .def_static("from_matrix", &MetricSpace::from_matrix, py::arg("matrix"),
                    py::arg("labels") = std::vector<double>{})
        .def_static("from_coordinates", &MetricSpace::from_coordinates, py::arg("coords"))
        .def_static("grid", &MetricSpace::grid, py::arg("origin"), py::arg("step"),
                    py::arg("count"))
        .def("size", &MetricSpace::size)
        .def("label", [](const MetricSpace& s, int i) { return s.label(Point{i}); }, py::arg("i"))
        .def("distance",
             [](const MetricSpace& s, int i, int j) { return s.distance(Point{i}, Point{j}); },
             py::arg("i"), py::arg("j"))
        .def("points",
             [](const MetricSpace& s) { return indices_of(s.points()); })
        .def("labels", [](const MetricSpace& s) { return labels_of(s, s.points()); })
        .def("point_with_label",
             [](const MetricSpace& s, double value) -> std::optional<int> {
                 const auto p = s.point_with_label(value);
                 if (!p) return std::nullopt;
                 return p->index;
             },
             py::arg("value"))
        .def("derived_entries", &MetricSpace::derived_entries)
        .def("validate",
             [](const MetricSpace& s) {
                 const ValidationReport report = validate_metric(s);
                 return py::make_tuple(report.valid, report.detail);
             })
        .def("__eq__", [](const MetricSpace& a, const MetricSpace& b) { return a == b; })
        .def("__len__", &MetricSpace::size)
        .def("__repr__", [](const MetricSpace& s) {
            std::ostringstream out;
            out << "MetricSpace(" << s.size() << " points, "
                << (s.grid_spec() ? "grid" : "matrix") << ")";
            return out.str();
        });

    py::class_<MultiMap>(m, "MultiMap")
        .def(py::init([](int universe_size, const std::vector<std::vector<int>>& images) {
                 std::vector<PointSet> sets;
                 sets.reserve(images.size());
                 for (const auto& image : images) sets.push_back(set_from_indices(image));
                 return MultiMap(universe_size, std::move(sets));
             }),
             py::arg("universe_size"), py::arg("images"))
        .def_static("identity", &MultiMap::identity, py::arg("space"))
        .def_static("constant",
                    [](const MetricSpace& space, int target) {
                        return MultiMap::constant(space, Point{target});
                    },
                    py::arg("space"), py::arg("target"))
        .def("universe_size", &MultiMap::universe_size)
        .def("image",
             [](const MultiMap& t, int i) { return indices_of(t.image(Point{i}).members()); },
             py::arg("i"))
        .def("__eq__", [](const MultiMap& a, const MultiMap& b) { return a == b; })
        .def("__repr__", [](const MultiMap& t) {
            return "MultiMap(on " + std::to_string(t.universe_size()) + " points)";
        });

    py::class_<ProblemFile>(m, "Problem")
        .def_readonly("space", &ProblemFile::space)
        .def_readonly("s", &ProblemFile::s)
        .def_readonly("t", &ProblemFile::t)
        .def("render", [](const ProblemFile& p) { return render_problem(p); })
        .def("verify",
             [](const ProblemFile& p, std::optional<long long> sample_pairs) {
                 const PairSelection pairs = sample_pairs
                                                 ? PairSelection::sample(*sample_pairs, 12345)
                                                 : PairSelection::all();
                 return report_to_dict(p.space,
                                       check_certificate(p.space, p.s, p.t, spec_of(p), pairs));
             },
             py::arg("sample_pairs") = py::none())
        .def("solve",
             [](const ProblemFile& p, double x0, const std::string& mode, int max_iterations,
                double tolerance, std::uint64_t seed) {
                 const auto start = p.space.point_with_label(x0);
                 if (!start)
                     throw std::invalid_argument("start label is not a point of the space");
                 SolverConfig config;
                 if (mode == "argmin")
                     config.selection = SelectionMode::Argmin;
                 else if (mode == "slack")
                     config.selection = SelectionMode::EpsilonSlack;
                 else
                     throw std::invalid_argument("mode must be argmin or slack");
                 config.max_iterations = max_iterations;
                 config.residual_tolerance = tolerance;
                 config.seed = seed;
                 const AlphaOracle alpha = effective_alpha(spec_of(p), p.space, p.s, p.t);
                 return trace_to_dict(p.space,
                                      iterate_duality(p.space, p.s, p.t, alpha, *start, config));
             },
             py::arg("x0"), py::arg("mode") = "argmin", py::arg("max_iterations") = 1000,
             py::arg("tolerance") = 1e-9, py::arg("seed") = 0)
        .def("endpoint",
             [](const ProblemFile& p, std::optional<double> tolerance) {
                 const double tol =
                     tolerance ? *tolerance : (p.space.derived_entries() ? 1e-9 : 0.0);
                 if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
                 return endpoint_to_dict(
                     p.space, find_common_endpoint(p.space, p.s, p.t, spec_of(p), tol));
             },
             py::arg("tolerance") = py::none())
        .def("__eq__", [](const ProblemFile& a, const ProblemFile& b) { return a == b; });

    m.def("parse_problem",
          [](const std::string& text) {
              ParseResult result = parse_problem(text);
              if (!result.ok()) {
                  std::ostringstream out;
                  for (std::size_t i = 0; i < result.issues.size(); ++i) {
                      if (i) out << "; ";
                      if (result.issues[i].line > 0) out << "line " << result.issues[i].line << ": ";
                      out << result.issues[i].message;
                  }
                  throw std::invalid_argument(out.str());
              }
              return *std::move(result.problem);
          },
          py::arg("text"));
    m.def("render_problem", &render_problem, py::arg("problem"));

    m.def("hausdorff",
          [](const MetricSpace& space, const std::vector<int>& a, const std::vector<int>& b) {
              return hausdorff(space, set_from_indices(a), set_from_indices(b));
          },
          py::arg("space"), py::arg("a"), py::arg("b"));
    m.def("m_functional",
          [](const MetricSpace& space, const MultiMap& s, const MultiMap& t, int x, int y) {
              return m_functional(space, s, t, Point{x}, Point{y});
          },
          py::arg("space"), py::arg("s"), py::arg("t"), py::arg("x"), py::arg("y"));

    m.def("enumerate_fixed_points",
          [](const MetricSpace& space, const MultiMap& t) {
              return labels_of(space, enumerate_fixed_points(space, t));
          },
          py::arg("space"), py::arg("t"));
    m.def("enumerate_endpoints",
          [](const MetricSpace& space, const MultiMap& t) {
              return labels_of(space, enumerate_endpoints(space, t));
          },
          py::arg("space"), py::arg("t"));

    m.def("epsilon_schedule", &epsilon_schedule, py::arg("n"), py::arg("alpha"), py::arg("gap"));
    m.def("cauchy_bound", &cauchy_bound, py::arg("gamma"), py::arg("n"), py::arg("m"));
    m.def("check_recurrence",
          [](const std::vector<double>& gaps, double gamma) {
              return check_recurrence(gaps, gamma);
          },
          py::arg("gaps"), py::arg("gamma"));

    m.def("generate_instance",
          [](std::uint64_t seed, int n, const std::string& family) -> py::object {
              InstanceFamily kind;
              if (family == "constructive")
                  kind = InstanceFamily::Constructive;
              else if (family == "rejection")
                  kind = InstanceFamily::Rejection;
              else
                  throw std::invalid_argument("family must be constructive or rejection");
              const auto inst = generate_certified_instance(seed, n, kind);
              if (!inst) return py::none();
              py::dict d;
              d["space"] = inst->space;
              d["s"] = inst->s;
              d["t"] = inst->t;
              d["alpha"] = inst->alpha_value;
              d["anchor"] = inst->anchor.index;
              return d;
          },
          py::arg("seed"), py::arg("n"), py::arg("family") = "constructive");
}
