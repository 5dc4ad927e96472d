#include "tropreal/hyperbolic.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace tropreal {

namespace {

constexpr FanLabel kLabels[3] = {FanLabel::X, FanLabel::Y, FanLabel::XY};
constexpr int kGenericAttempts = 256;

}  // namespace

std::string to_string(FanLabel l) {
    switch (l) {
        case FanLabel::X: return "(1,0)";
        case FanLabel::Y: return "(0,1)";
        case FanLabel::XY: return "(1,1)";
    }
    return "?";
}

IntVec label_vector(FanLabel l) {
    switch (l) {
        case FanLabel::X: return {1, 0};
        case FanLabel::Y: return {0, 1};
        case FanLabel::XY: return {1, 1};
    }
    return {};
}

IntVec ray_direction(FanLabel l) { return l == FanLabel::XY ? IntVec{-1, -1} : label_vector(l); }

std::optional<FanLabel> SigmaV::sector_of(const Point& q) const {
    Rational x = q.x - apex.x, y = q.y - apex.y;
    if (x > 0 && y > 0) return FanLabel::XY;
    if (x < 0 && y > x) return FanLabel::X;
    if (y < 0 && x > y) return FanLabel::Y;
    return std::nullopt;
}

std::optional<FanLabel> SigmaV::ray_of(const Point& q) const {
    Rational x = q.x - apex.x, y = q.y - apex.y;
    if (y == 0 && x > 0) return FanLabel::X;
    if (x == 0 && y > 0) return FanLabel::Y;
    if (x == y && x < 0) return FanLabel::XY;
    return std::nullopt;
}

SigmaV sigma_v(const Point& v) { return SigmaV{v}; }

namespace {

// Number of monomials attaining the maximum at v.
int maximizers(const TropicalCurve& curve, const Point& v, LatticePoint* top) {
    std::optional<Rational> best;
    int count = 0;
    for (const auto& [p, a] : curve.polynomial().coefficients) {
        Rational val = a + p.i * v.x + p.j * v.y;
        if (!best || val > *best) {
            best = val;
            count = 1;
            if (top) *top = p;
        } else if (val == *best) {
            ++count;
        }
    }
    return count;
}

struct RayCrossing {
    FanLabel ray;
    int edge;
    Point at;
};

// Crossings of the three rays from v with the curve. Returns nullopt when some ray meets
// a vertex or runs along an edge.
std::optional<std::vector<RayCrossing>> ray_crossings(const TropicalCurve& curve, const Point& v) {
    std::vector<RayCrossing> out;
    for (FanLabel lab : kLabels) {
        IntVec r = ray_direction(lab);
        for (std::size_t id = 0; id < curve.edges().size(); ++id) {
            const auto& e = curve.edges()[id];
            const Point& p = curve.vertices()[static_cast<std::size_t>(e.tail)].position;
            std::optional<Rational> len;
            if (e.bounded()) len = curve.length(static_cast<int>(id));
            Rational rx = v.x - p.x, ry = v.y - p.y;
            long D = det(e.direction, r);
            if (D == 0) {
                if (rx * e.direction.y - ry * e.direction.x != 0) continue;
                // Collinear: compare the edge interval with the ray, both on the edge parameter.
                long dd = e.direction.x * e.direction.x + e.direction.y * e.direction.y;
                Rational s0 = (rx * e.direction.x + ry * e.direction.y) / dd;
                bool same = e.direction.x * r.x + e.direction.y * r.y > 0;
                bool overlap = same ? (!len || *len >= s0) : s0 >= 0;
                if (overlap) return std::nullopt;
                continue;
            }
            // p + s * dir = v + t * r
            Rational s = (rx * r.y - ry * r.x) / D;
            Rational t = (rx * e.direction.y - ry * e.direction.x) / D;
            if (t < 0 || s < 0 || (len && s > *len)) continue;
            if (s == 0 || (len && s == *len)) return std::nullopt;
            out.push_back({lab, static_cast<int>(id), along(p, e.direction, s)});
        }
    }
    return out;
}

}  // namespace

bool is_generic(const Point& v, const TropicalCurve& curve) {
    if (maximizers(curve, v, nullptr) > 1) throw PointOnCurve("point " + to_string(v) + " lies on the curve");
    return ray_crossings(curve, v).has_value();
}

bool in_component(const TropicalCurve& curve, const LatticePoint& alpha, const Point& v) {
    LatticePoint top;
    return maximizers(curve, v, &top) == 1 && top == alpha;
}

Point generic_point(const TropicalCurve& curve, const LatticePoint& alpha, int sample) {
    if (!curve.dual().contains(alpha)) throw UnknownPoint("no complement component dual to " + to_string(alpha));
    std::vector<Point> corners;
    for (const auto& v : curve.vertices()) {
        const auto& cell = curve.dual().cells[static_cast<std::size_t>(v.cell)];
        if (std::find(cell.corners.begin(), cell.corners.end(), alpha) != cell.corners.end())
            corners.push_back(v.position);
    }
    std::vector<IntVec> rays;
    for (std::size_t id = 0; id < curve.edges().size(); ++id) {
        const auto& e = curve.edges()[id];
        const auto& de = curve.dual().edges[id];
        if (!e.bounded() && (de.a == alpha || de.b == alpha)) rays.push_back(e.direction);
    }
    ensure(!corners.empty(), "complement component without vertices");

    std::mt19937 rng(0x5eed + 7919u * static_cast<unsigned>(alpha.i) + 104729u * static_cast<unsigned>(alpha.j));
    int found = 0;
    for (int attempt = 0; attempt < kGenericAttempts; ++attempt) {
        Rational total = 0, x = 0, y = 0;
        for (const auto& c : corners) {
            Rational w(static_cast<long>(1 + rng() % 61));
            x += w * c.x;
            y += w * c.y;
            total += w;
        }
        Point p{x / total, y / total};
        for (const auto& r : rays) {
            Rational t(static_cast<long>(1 + rng() % 61), 16);
            p = along(p, r, t);
        }
        p.x.canonicalize();
        p.y.canonicalize();
        if (!in_component(curve, alpha, p) || !is_generic(p, curve)) continue;
        if (found++ == sample) return p;
    }
    throw NotGenericAfterRetries("no generic sample found in the component dual to " + to_string(alpha));
}

namespace {

PointVerdict fail(int condition, std::string detail, const Point& v) {
    return PointVerdict{false, condition, std::move(detail), v};
}

std::optional<FanLabel> label_of_direction(const IntVec& d) {
    for (FanLabel l : kLabels) {
        IntVec u = label_vector(l);
        if (d == u || d == -u) return l;
    }
    return std::nullopt;
}

int edge_with_label(const TropicalCurve& line, FanLabel l) {
    for (std::size_t id = 0; id < line.edges().size(); ++id)
        if (label_of_direction(line.edges()[id].direction) == l) return static_cast<int>(id);
    throw InternalError("tropical line lacks a direction");
}

}  // namespace

PointVerdict hyperbolic_wrt_generic_point(const TropicalCurve& curve, const RealPhaseStructure& phase,
                                          const Point& v, Z2Pair eps) {
    auto crossings = ray_crossings(curve, v);
    if (maximizers(curve, v, nullptr) > 1) throw PointOnCurve("point " + to_string(v) + " lies on the curve");
    if (!crossings) throw NotGenericAfterRetries("point " + to_string(v) + " is not generic");
    SigmaV fan = sigma_v(v);

    for (std::size_t u = 0; u < curve.vertices().size(); ++u) {
        const auto& vert = curve.vertices()[u];
        auto s = fan.sector_of(vert.position);
        ensure(s.has_value(), "generic point with a vertex on a ray");
        IntVec eta = label_vector(*s);
        for (int id : vert.edges)
            if (std::abs(det(curve.edge(id).direction, eta)) > 1)
                return fail(1, "vertex " + std::to_string(u) + " in sector " + to_string(*s) +
                                   " has no edge of that direction", v);
    }

    for (const auto& c : *crossings) {
        const auto& e = curve.edge(c.edge);
        if (std::abs(det(e.direction, label_vector(c.ray))) == 2 && !phase.line(c.edge).contains(eps))
            return fail(2, "edge " + std::to_string(c.edge) + " crosses ray " + to_string(c.ray) +
                               " with quadrant outside its phase", v);
    }

    for (int id : curve.bounded_edges()) {
        const auto& e = curve.edge(id);
        auto eta = label_of_direction(e.direction);
        if (!eta) continue;
        bool tail_in = fan.sector_of(curve.vertices()[static_cast<std::size_t>(e.tail)].position) == eta;
        bool head_in = fan.sector_of(curve.vertices()[static_cast<std::size_t>(e.head)].position) == eta;
        if (!tail_in && !head_in) continue;
        if (tail_in && head_in) {
            if (!is_twisted(curve, phase, id))
                return fail(3, "edge " + std::to_string(id) + " lies in sector " + to_string(*eta) +
                                   " and is not twisted", v);
            continue;
        }
        int inner = tail_in ? e.tail : e.head;
        const RayCrossing* hit = nullptr;
        for (const auto& c : *crossings)
            if (c.edge == id) {
                ensure(hit == nullptr, "edge crosses two rays");
                hit = &c;
            }
        ensure(hit != nullptr, "edge leaves its sector without crossing a ray");

        // Tropical line with vertex at the crossing; it passes through v.
        TropicalPolynomial lp;
        lp.coefficients[{0, 0}] = 0;
        lp.coefficients[{1, 0}] = -hit->at.x;
        lp.coefficients[{0, 1}] = -hit->at.y;
        TropicalCurve line = curve_from_polynomial(lp);
        int shared = edge_with_label(line, *eta);
        int through_v = edge_with_label(line, hit->ray);
        std::optional<RealPhaseStructure> line_phase;
        for (std::uint8_t b = 0; b < 4; ++b) {
            RealPhaseStructure cand = phase_from_missing(line, {Z2Pair{b}});
            if (cand.line(through_v).contains(eps) && cand.line(shared) == phase.line(id)) {
                ensure(!line_phase, "two lines through the real point share the phase");
                line_phase = cand;
            }
        }
        ensure(line_phase.has_value(), "no real line through the point with the edge's phase");

        IntersectionComponent comp;
        comp.kind = ComponentKind::SegmentOverlap;
        comp.multiplicity = 2;
        comp.location = curve.vertices()[static_cast<std::size_t>(inner)].position;
        comp.end = hit->at;
        comp.edge_first = id;
        comp.edge_second = shared;
        comp.vertex_first = inner;
        comp.vertex_second = 0;
        if (is_relatively_twisted(comp, curve, phase, line, *line_phase))
            return fail(3, "segment of edge " + std::to_string(id) + " in sector " + to_string(*eta) +
                               " is relatively twisted", v);
    }
    return PointVerdict{true, 0, "", v};
}

PointVerdict hyperbolic_wrt_point(const TropicalCurve& curve, const RealPhaseStructure& phase,
                                  const LatticePoint& alpha, Z2Pair eps, int sample) {
    validate_phase(curve, phase);
    return hyperbolic_wrt_generic_point(curve, phase, generic_point(curve, alpha, sample), eps);
}

HyperbolicityCheck is_hyperbolic(const TropicalCurve& curve, const TwistSet& twists) {
    int d = curve.require_degree();
    if (!is_admissible(curve, twists)) throw NotAdmissible("hyperbolicity test needs an admissible twist set");
    HyperbolicityCheck out;
    out.kernel_dim = kernel(twist_matrix(curve, twists)).dim();
    out.hyperbolic = is_dividing(curve, twists) && out.kernel_dim == static_cast<std::size_t>((d + 1) / 2 - 1);
    return out;
}

bool is_stable_limit(const TropicalCurve& curve, const RealPhaseStructure& phase) {
    if (!curve.is_honeycomb()) return false;
    if (twists_from_phase(curve, phase).size() != curve.bounded_edges().size()) return false;
    SignDistribution delta = signs_from_phase(curve, phase);
    return std::all_of(delta.signs.begin(), delta.signs.end(), [](const auto& kv) { return kv.second == 1; });
}

HyperbolicityReport hyperbolicity_locus(const TropicalCurve& curve, const RealPhaseStructure& phase) {
    int d = curve.require_degree();
    validate_phase(curve, phase);
    HyperbolicityReport rep;
    auto check = is_hyperbolic(curve, twists_from_phase(curve, phase));
    rep.hyperbolic = check.hyperbolic;
    rep.kernel_dim = check.kernel_dim;
    rep.stable = is_stable_limit(curve, phase);

    RealPart rp = real_part(curve, phase);
    ComponentReport comps = count_components_direct(rp);
    std::vector<int> depths;
    for (const auto& c : comps.components)
        if (c.kind == RealComponent::Kind::Oval) depths.push_back(c.depth);
    std::sort(depths.begin(), depths.end());
    std::vector<int> chain(static_cast<std::size_t>(d / 2));
    for (std::size_t k = 0; k < chain.size(); ++k) chain[k] = static_cast<int>(k) + 1;
    rep.nested_chain = depths == chain && comps.pseudo_lines() == static_cast<std::size_t>(d % 2);
    if (rep.nested_chain) {
        if (d == 1) {
            rep.real_locus_geometric.insert(rp.regions().begin(), rp.regions().end());
        } else {
            for (const auto& c : comps.components)
                if (c.kind == RealComponent::Kind::Oval && c.depth == d / 2)
                    rep.real_locus_geometric.insert(c.interior.begin(), c.interior.end());
        }
        for (const auto& r : rep.real_locus_geometric) rep.locus_geometric.insert(r.point);
    }

    for (const auto& alpha : curve.dual().points)
        for (std::uint8_t b = 0; b < 4; ++b) {
            Z2Pair eps{b};
            PointVerdict verdict = hyperbolic_wrt_point(curve, phase, alpha, eps);
            if (verdict.positive) {
                rep.locus_pointwise.insert(alpha);
                rep.real_locus_pointwise.insert(rp.canonical(alpha, eps));
            }
            rep.per_point.emplace(std::make_pair(alpha, eps), std::move(verdict));
        }
    return rep;
}

Gf2Vector MultiBridge::vector(const TropicalCurve& curve) const {
    return TwistSet::from_edges(curve, edges).vector();
}

std::string MultiBridge::dual_line() const {
    switch (line) {
        case DualLineKind::Vertical: return "x=" + std::to_string(level);
        case DualLineKind::Horizontal: return "y=" + std::to_string(level);
        case DualLineKind::Diagonal: return "x+y=" + std::to_string(level);
    }
    return "?";
}

namespace {

int line_value(DualLineKind kind, const LatticePoint& p) {
    switch (kind) {
        case DualLineKind::Vertical: return p.i;
        case DualLineKind::Horizontal: return p.j;
        case DualLineKind::Diagonal: return p.i + p.j;
    }
    return 0;
}

std::size_t graph_components_without(const TropicalCurve& curve, const std::vector<int>& removed) {
    std::vector<int> seen(curve.vertices().size(), -1);
    std::size_t count = 0;
    for (std::size_t s = 0; s < seen.size(); ++s) {
        if (seen[s] >= 0) continue;
        std::deque<int> queue{static_cast<int>(s)};
        seen[s] = static_cast<int>(count);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int id : curve.vertices()[static_cast<std::size_t>(u)].edges) {
                if (!curve.edge(id).bounded() || std::binary_search(removed.begin(), removed.end(), id)) continue;
                int w = curve.other_end(id, u);
                if (seen[static_cast<std::size_t>(w)] < 0) {
                    seen[static_cast<std::size_t>(w)] = static_cast<int>(count);
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }
    return count;
}

}  // namespace

std::vector<MultiBridge> multi_bridges(const TropicalCurve& curve) {
    if (!curve.is_honeycomb()) throw NotHoneycomb("multi-bridges are defined on honeycombs only");
    int d = curve.require_degree();
    std::vector<MultiBridge> out;
    for (DualLineKind kind : {DualLineKind::Vertical, DualLineKind::Horizontal, DualLineKind::Diagonal})
        for (int k = 1; k < d; ++k) {
            MultiBridge b;
            b.line = kind;
            b.level = k;
            for (int id : curve.bounded_edges()) {
                const auto& de = curve.dual().edges[static_cast<std::size_t>(id)];
                if (line_value(kind, de.a) == k && line_value(kind, de.b) == k) b.edges.push_back(id);
            }
            ensure(!b.edges.empty(), "interior dual line without edges");
            b.direction = curve.edge(b.edges.front()).direction;
            if (b.direction.x < 0 || (b.direction.x == 0 && b.direction.y < 0)) b.direction = -b.direction;
            for (int id : b.edges) {
                IntVec dir = curve.edge(id).direction;
                ensure(dir == b.direction || dir == -b.direction, "bridge edges are not parallel");
            }
            ensure(graph_components_without(curve, b.edges) == 2, "bridge does not disconnect the curve");
            out.push_back(std::move(b));
        }
    return out;
}

std::vector<MultiBridge> constraining_bridges(const TropicalCurve& curve, const LatticePoint& alpha) {
    int d = curve.require_degree();
    if (!curve.dual().contains(alpha)) throw UnknownPoint("lattice point " + to_string(alpha) + " is outside the polygon");
    std::vector<MultiBridge> out;
    for (auto& b : multi_bridges(curve)) {
        bool constraining = false;
        switch (b.line) {
            case DualLineKind::Vertical: constraining = b.level < alpha.i; break;
            case DualLineKind::Horizontal: constraining = b.level < alpha.j; break;
            case DualLineKind::Diagonal: constraining = b.level > alpha.i + alpha.j && b.level <= d - 1; break;
        }
        if (constraining) out.push_back(std::move(b));
    }
    return out;
}

std::set<LatticePoint> honeycomb_locus(const TropicalCurve& curve, const TwistSet& twists) {
    if (!curve.is_honeycomb()) throw NotHoneycomb("honeycomb locus needs a honeycomb");
    if (!is_admissible(curve, twists) || !is_dividing(curve, twists))
        throw NotDividing("honeycomb locus needs a dividing twist set");
    std::set<LatticePoint> out;
    for (const auto& alpha : curve.dual().points) {
        bool all = true;
        for (const auto& b : constraining_bridges(curve, alpha))
            for (int id : b.edges) all = all && twists.contains(id);
        if (all) out.insert(alpha);
    }
    return out;
}

bool HypAlphaFlat::contains(const Gf2Vector& v) const { return directions.contains(v ^ origin); }

HypAlphaFlat hyp_alpha_flat(const TropicalCurve& curve, const LatticePoint& alpha) {
    if (!curve.is_honeycomb()) throw NotHoneycomb("Hyp flats are defined on honeycombs only");
    HypAlphaFlat flat;
    flat.alpha = alpha;
    flat.constraining = constraining_bridges(curve, alpha);
    std::size_t n = curve.bounded_edges().size();
    flat.origin = Gf2Vector(n);
    for (const auto& b : flat.constraining) flat.origin ^= b.vector(curve);
    flat.directions = Gf2Subspace(n);
    for (const auto& b : multi_bridges(curve)) {
        bool used = std::any_of(flat.constraining.begin(), flat.constraining.end(),
                                [&](const MultiBridge& c) { return c.line == b.line && c.level == b.level; });
        if (!used) flat.directions.insert(b.vector(curve));
    }
    return flat;
}

}  // namespace tropreal
