#include "tropreal/report.hpp"

#include "tropreal/realpart.hpp"

#include <sstream>

namespace tropreal {

using nlohmann::json;

namespace {

json point_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }
json vec_json(const IntVec& v) { return json::array({v.x, v.y}); }
json z2_json(Z2Pair e) { return json::array({e.first(), e.second()}); }

json points_json(const std::set<LatticePoint>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(to_string(p));
    return out;
}

json regions_json(const std::set<RegionId>& regions) {
    json out = json::array();
    for (const auto& r : regions) out.push_back(json{{"point", to_string(r.point)}, {"eps", z2_json(r.eps)}});
    return out;
}

}  // namespace

json build_report(const TropicalCurve& curve) {
    json j;
    j["degree"] = curve.degree() ? json(*curve.degree()) : json(nullptr);
    j["honeycomb"] = curve.is_honeycomb();
    j["vertices"] = curve.vertices().size();
    j["edges"] = curve.edges().size();
    j["bounded_edges"] = curve.bounded_edges().size();
    j["genus"] = curve.primitive_cycles().size();
    j["lattice_points"] = curve.dual().points.size();
    json verts = json::array();
    for (std::size_t v = 0; v < curve.vertices().size(); ++v) {
        const auto& vert = curve.vertices()[v];
        json cell = json::array();
        for (const auto& c : curve.dual().cells[static_cast<std::size_t>(vert.cell)].corners) cell.push_back(to_string(c));
        verts.push_back(json{{"id", v}, {"position", point_json(vert.position)}, {"cell", cell}});
    }
    j["vertex_list"] = verts;
    json edges = json::array();
    for (std::size_t id = 0; id < curve.edges().size(); ++id) {
        const auto& e = curve.edges()[id];
        const auto& de = curve.dual().edges[id];
        json row{{"id", id},
                 {"tail", e.tail},
                 {"head", e.bounded() ? json(e.head) : json(nullptr)},
                 {"direction", vec_json(e.direction)},
                 {"dual", json::array({to_string(de.a), to_string(de.b)})}};
        edges.push_back(row);
    }
    j["edge_list"] = edges;
    return j;
}

json analyze_report(const TropicalCurve& curve, const RealPhaseStructure& phase) {
    TwistSet twists = twists_from_phase(curve, phase);
    json j;
    j["twists"] = twists.edges();
    j["admissible"] = is_admissible(curve, twists);
    j["dividing"] = is_dividing(curve, twists);
    ComponentReport direct = count_components_direct(real_part(curve, phase));
    std::size_t matrix = count_components_matrix(curve, twists);
    json comps;
    comps["matrix"] = matrix;
    comps["direct"] = direct.count;
    comps["ovals"] = direct.ovals();
    comps["pseudo_lines"] = direct.pseudo_lines();
    json depths = json::array();
    for (const auto& c : direct.components) depths.push_back(c.depth);
    comps["depths"] = depths;
    j["components"] = comps;
    if (curve.degree()) {
        auto check = is_hyperbolic(curve, twists);
        j["hyperbolic"] = check.hyperbolic;
        j["kernel_dim"] = check.kernel_dim;
    }
    json lines = json::array();
    for (const auto& l : phase.lines) lines.push_back(l.to_string());
    j["phase"] = lines;
    return j;
}

json lift_json(const LiftOutcome& lift) {
    json j;
    j["kind"] = to_string(lift.kind);
    if (lift.kind == LiftOutcome::Kind::Indeterminate) {
        json poss = json::array();
        for (const auto& o : lift.possible)
            poss.push_back(json{{"case", to_string(o.possibility)},
                                {"realisations", o.realisations == LiftOutcome::Realisations::Infinite ? "infinite"
                                                                                                       : "exactly-two-pairs"}});
        j["possible"] = poss;
        j["non_real_possible"] = lift.non_real_possible;
        return j;
    }
    j["reals"] = lift.reals;
    j["pairs"] = lift.pairs;
    if (lift.reals > 0) {
        if (lift.locations) {
            json locs = json::array();
            for (const auto& p : *lift.locations) locs.push_back(point_json(p));
            j["locations"] = locs;
        } else {
            j["locations"] = "unlocated";
        }
    }
    return j;
}

json intersect_report(const TropicalCurve& c, const RealPhaseStructure& phase, const TropicalCurve& c2,
                      const RealPhaseStructure& phase2) {
    auto comps = intersection_components(c, c2);
    json list = json::array();
    int total = 0;
    for (const auto& comp : comps) {
        total += comp.multiplicity;
        json row{{"kind", to_string(comp.kind)}, {"multiplicity", comp.multiplicity}, {"location", point_json(comp.location)}};
        if (comp.kind == ComponentKind::EdgeInEdge || comp.kind == ComponentKind::SegmentOverlap)
            row["end"] = point_json(comp.end);
        row["edge_first"] = comp.edge_first >= 0 ? json(comp.edge_first) : json(nullptr);
        row["edge_second"] = comp.edge_second >= 0 ? json(comp.edge_second) : json(nullptr);
        if (comp.kind == ComponentKind::IsolatedVertex || comp.kind == ComponentKind::EdgeInEdge)
            row["owner"] = comp.owner == 0 ? "first" : "second";
        row["lift"] = lift_json(real_lift(comp, c, phase, c2, phase2));
        if (comp.kind == ComponentKind::EdgeInEdge || comp.kind == ComponentKind::SegmentOverlap)
            row["tangency_possible"] = tangency_possible(comp, c, phase, c2, phase2);
        list.push_back(row);
    }
    return json{{"components", list}, {"count", comps.size()}, {"total_multiplicity", total}};
}

json point_report(const LatticePoint& alpha, Z2Pair eps, const PointVerdict& verdict) {
    json j{{"point", to_string(alpha)},
           {"eps", z2_json(eps)},
           {"positive", verdict.positive},
           {"sample", point_json(verdict.sample)}};
    if (!verdict.positive) {
        j["failing_condition"] = verdict.failing_condition;
        j["detail"] = verdict.detail;
    }
    return j;
}

json hyperbolic_report(const HyperbolicityReport& r) {
    json j;
    j["hyperbolic"] = r.hyperbolic;
    j["kernel_dim"] = r.kernel_dim;
    j["stable"] = r.stable;
    j["nested_chain"] = r.nested_chain;
    j["H_size"] = r.locus_pointwise.size();
    j["H"] = points_json(r.locus_pointwise);
    j["RH"] = regions_json(r.real_locus_pointwise);
    j["methods_agree"] = r.methods_agree();
    j["method_a"] = json{{"H", points_json(r.locus_geometric)}, {"RH", regions_json(r.real_locus_geometric)}};
    json per = json::array();
    for (const auto& [key, verdict] : r.per_point) per.push_back(point_report(key.first, key.second, verdict));
    j["per_point"] = per;
    return j;
}

namespace {

bool scalar_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void emit(std::ostringstream& out, const json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !scalar_array(v)) {
                out << pad << k << ":\n";
                emit(out, v, indent + 1);
            } else if (v.is_array()) {
                out << pad << k << ": [";
                for (std::size_t n = 0; n < v.size(); ++n) out << (n ? ", " : "") << scalar_text(v[n]);
                out << "]\n";
            } else {
                out << pad << k << ": " << scalar_text(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                out << pad << "-\n";
                emit(out, v, indent + 1);
            } else if (scalar_array(v)) {
                out << pad << "- [";
                for (std::size_t n = 0; n < v.size(); ++n) out << (n ? ", " : "") << scalar_text(v[n]);
                out << "]\n";
            } else {
                out << pad << "- " << scalar_text(v) << "\n";
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

}  // namespace

std::string to_text(const json& report) {
    std::ostringstream out;
    emit(out, report, 0);
    return out.str();
}

}  // namespace tropreal
