#include "tropreal/hyperbolic.hpp"
#include "tropreal/render.hpp"
#include "tropreal/report.hpp"
#include "tropreal/scenario.hpp"
#include "tropreal/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tropreal;

namespace {

std::pair<std::string, std::string> point_strings(const Point& p) { return {to_string(p.x), to_string(p.y)}; }

std::tuple<int, int> lattice_tuple(const LatticePoint& p) { return {p.i, p.j}; }

Z2Pair z2(const std::tuple<int, int>& e) { return Z2Pair::of(std::get<0>(e), std::get<1>(e)); }

TropicalCurve from_coefficients(const std::map<std::tuple<int, int>, std::string>& coefficients) {
    TropicalPolynomial poly;
    for (const auto& [k, v] : coefficients) poly.coefficients[{std::get<0>(k), std::get<1>(k)}] = parse_rational(v);
    return curve_from_polynomial(poly);
}

SignDistribution signs_from_map(const TropicalCurve& c, const std::map<std::tuple<int, int>, int>& signs) {
    SignDistribution d = SignDistribution::constant(c);
    for (const auto& [k, s] : signs) {
        LatticePoint p{std::get<0>(k), std::get<1>(k)};
        if (!c.dual().contains(p)) throw ValidationError("sign given outside the polygon at " + to_string(p));
        if (s != 1 && s != -1) throw ValidationError("signs must be +1 or -1");
        d.signs[p] = s;
    }
    if (signs.size() != c.dual().points.size()) throw ValidationError("sign map must cover every lattice point");
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact toolkit for real tropical plane curves";
    m.attr("__version__") = VERSION_INFO;

    py::register_exception<Error>(m, "TropError", PyExc_ValueError);
    py::register_exception<UnsupportedConfiguration>(m, "UnsupportedConfiguration", PyExc_ValueError);

    py::class_<TropicalCurve>(m, "TropicalCurve")
        .def_property_readonly("degree", &TropicalCurve::degree)
        .def_property_readonly("vertex_count", [](const TropicalCurve& c) { return c.vertices().size(); })
        .def_property_readonly("edge_count", [](const TropicalCurve& c) { return c.edges().size(); })
        .def_property_readonly("bounded_edges", &TropicalCurve::bounded_edges)
        .def_property_readonly("genus", [](const TropicalCurve& c) { return c.primitive_cycles().size(); })
        .def_property_readonly("lattice_points",
                               [](const TropicalCurve& c) {
                                   std::vector<std::tuple<int, int>> out;
                                   for (const auto& p : c.dual().points) out.push_back(lattice_tuple(p));
                                   return out;
                               })
        .def("is_honeycomb", &TropicalCurve::is_honeycomb)
        .def("vertex", [](const TropicalCurve& c, std::size_t v) { return point_strings(c.vertices().at(v).position); })
        .def("edge_direction",
             [](const TropicalCurve& c, int id) {
                 IntVec d = c.edge(id).direction;
                 return std::make_tuple(d.x, d.y);
             })
        .def("translated",
             [](const TropicalCurve& c, const std::string& dx, const std::string& dy) {
                 return c.translated(parse_rational(dx), parse_rational(dy));
             })
        .def("report", [](const TropicalCurve& c) { return build_report(c).dump(); });

    py::class_<RealPhaseStructure>(m, "RealPhaseStructure")
        .def("lines",
             [](const RealPhaseStructure& p) {
                 std::vector<std::string> out;
                 for (const auto& l : p.lines) out.push_back(l.to_string());
                 return out;
             })
        .def("__eq__", [](const RealPhaseStructure& a, const RealPhaseStructure& b) { return a == b; });

    m.def("honeycomb", &honeycomb, py::arg("degree"));
    m.def("curve_from_coefficients", &from_coefficients, py::arg("coefficients"),
          "Coefficients keyed by (i, j) with rational strings such as \"-3/2\".");

    m.def("phase_all_plus",
          [](const TropicalCurve& c) { return phase_from_signs(c, SignDistribution::constant(c)); });
    m.def("phase_from_signs",
          [](const TropicalCurve& c, const std::map<std::tuple<int, int>, int>& signs) {
              return phase_from_signs(c, signs_from_map(c, signs));
          });
    m.def(
        "phase_from_twists",
        [](const TropicalCurve& c, const std::vector<int>& twists, int seed_edge, std::tuple<int, int> seed_eps) {
            return phase_from_twists(c, TwistSet::from_edges(c, twists), PhaseSeed{seed_edge, z2(seed_eps)});
        },
        py::arg("curve"), py::arg("twists"), py::arg("seed_edge") = 0, py::arg("seed_eps") = std::make_tuple(0, 0));
    m.def("twists", [](const TropicalCurve& c, const RealPhaseStructure& p) { return twists_from_phase(c, p).edges(); });
    m.def("is_admissible",
          [](const TropicalCurve& c, const std::vector<int>& t) { return is_admissible(c, TwistSet::from_edges(c, t)); });
    m.def("is_dividing",
          [](const TropicalCurve& c, const std::vector<int>& t) { return is_dividing(c, TwistSet::from_edges(c, t)); });
    m.def("count_components_matrix", [](const TropicalCurve& c, const std::vector<int>& t) {
        return count_components_matrix(c, TwistSet::from_edges(c, t));
    });
    m.def("count_components_direct", [](const TropicalCurve& c, const RealPhaseStructure& p) {
        return count_components_direct(real_part(c, p)).count;
    });
    m.def("is_hyperbolic", [](const TropicalCurve& c, const std::vector<int>& t) {
        auto r = is_hyperbolic(c, TwistSet::from_edges(c, t));
        return std::make_tuple(r.hyperbolic, r.kernel_dim);
    });
    m.def("hyperbolicity_report",
          [](const TropicalCurve& c, const RealPhaseStructure& p) { return hyperbolic_report(hyperbolicity_locus(c, p)).dump(); });
    m.def("hyperbolic_wrt_point", [](const TropicalCurve& c, const RealPhaseStructure& p, std::tuple<int, int> alpha,
                                     std::tuple<int, int> eps) {
        LatticePoint a{std::get<0>(alpha), std::get<1>(alpha)};
        auto v = hyperbolic_wrt_point(c, p, a, z2(eps));
        return std::make_tuple(v.positive, v.failing_condition);
    });
    m.def("honeycomb_locus", [](const TropicalCurve& c, const std::vector<int>& t) {
        std::vector<std::tuple<int, int>> out;
        for (const auto& p : honeycomb_locus(c, TwistSet::from_edges(c, t))) out.push_back(lattice_tuple(p));
        return out;
    });
    m.def("multi_bridges", [](const TropicalCurve& c) {
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (const auto& b : multi_bridges(c)) out.emplace_back(b.dual_line(), b.edges);
        return out;
    });
    m.def("intersection_report", [](const TropicalCurve& a, const RealPhaseStructure& pa, const TropicalCurve& b,
                                    const RealPhaseStructure& pb) { return intersect_report(a, pa, b, pb).dump(); });
    m.def("bezout_total", &bezout_total);
    m.def("transverse_multiplicity", [](std::tuple<long, long> a, std::tuple<long, long> b) {
        return transverse_multiplicity({std::get<0>(a), std::get<1>(a)}, {std::get<0>(b), std::get<1>(b)});
    });

    m.def("load_spec", [](const std::string& text) {
        RealCurve rc = realize(load_spec(text).primary);
        return std::make_pair(rc.curve, rc.phase);
    });
    m.def("normalize_spec", [](const std::string& text) { return save_spec(load_spec(text)); });
    m.def("render_svg", [](const TropicalCurve& c, const RealPhaseStructure& p) { return render_svg(c, &p); });
    m.def("verify", [](std::uint32_t seed, int trials) { return run_verify(seed, trials).ok(); }, py::arg("seed") = 1,
          py::arg("trials") = 10);
}
