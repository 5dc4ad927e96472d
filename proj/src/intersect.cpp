#include "tropreal/intersect.hpp"

#include <algorithm>
#include <map>

namespace tropreal {

std::string to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::TransversePoint: return "TransversePoint";
        case ComponentKind::IsolatedVertex: return "IsolatedVertex";
        case ComponentKind::EdgeInEdge: return "EdgeInEdge";
        case ComponentKind::SegmentOverlap: return "SegmentOverlap";
    }
    return "?";
}

std::string to_string(LiftOutcome::Kind k) {
    switch (k) {
        case LiftOutcome::Kind::ForcedReal: return "ForcedReal";
        case LiftOutcome::Kind::ForcedPairs: return "ForcedPairs";
        case LiftOutcome::Kind::ForcedMixed: return "ForcedMixed";
        case LiftOutcome::Kind::Indeterminate: return "Indeterminate";
    }
    return "?";
}

std::string to_string(LiftOutcome::Possibility p) {
    switch (p) {
        case LiftOutcome::Possibility::TwoReal: return "two-real";
        case LiftOutcome::Possibility::ConjugatePair: return "conjugate-pair";
        case LiftOutcome::Possibility::TangentDoubleReal: return "tangent-double-real";
    }
    return "?";
}

LiftOutcome LiftOutcome::forced(int reals, int pairs, std::optional<std::vector<Point>> where) {
    LiftOutcome o;
    o.reals = reals;
    o.pairs = pairs;
    o.locations = std::move(where);
    if (pairs == 0)
        o.kind = Kind::ForcedReal;
    else if (reals == 0)
        o.kind = Kind::ForcedPairs;
    else
        o.kind = Kind::ForcedMixed;
    return o;
}

LiftOutcome LiftOutcome::indeterminate() {
    LiftOutcome o;
    o.kind = Kind::Indeterminate;
    o.possible = {{Possibility::TwoReal, Realisations::Infinite},
                  {Possibility::ConjugatePair, Realisations::Infinite},
                  {Possibility::TangentDoubleReal, Realisations::ExactlyTwoPairs}};
    return o;
}

int transverse_multiplicity(const IntVec& a, const IntVec& b) {
    long d = det(a, b);
    if (d == 0) throw ParallelDirections("directions are parallel");
    return static_cast<int>(d < 0 ? -d : d);
}

namespace {

struct Piece {
    Point a;
    Point b;  // equals a for point pieces
    bool segment = false;
    int e = -1;
    int f = -1;
};

bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
    Rational cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

int orient(const Point& a, const Point& b, const Point& c) {
    return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool touches(const Piece& p, const Piece& q) {
    if (!p.segment && !q.segment) return p.a == q.a;
    if (!p.segment) return on_closed_segment(p.a, q.a, q.b);
    if (!q.segment) return on_closed_segment(q.a, p.a, p.b);
    int o1 = orient(p.a, p.b, q.a), o2 = orient(p.a, p.b, q.b);
    int o3 = orient(q.a, q.b, p.a), o4 = orient(q.a, q.b, p.b);
    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) return true;
    return on_closed_segment(q.a, p.a, p.b) || on_closed_segment(q.b, p.a, p.b) || on_closed_segment(p.a, q.a, q.b) ||
           on_closed_segment(p.b, q.a, q.b);
}

// Parameter interval on a line, with missing bounds meaning infinity.
struct Interval {
    std::optional<Rational> lo, hi;
};

Interval edge_interval(const TropicalCurve& c, int id) {
    if (c.edge(id).bounded()) return {Rational(0), c.length(id)};
    return {Rational(0), std::nullopt};
}

const Point& tail_of(const TropicalCurve& c, int id) {
    return c.vertices()[static_cast<std::size_t>(c.edge(id).tail)].position;
}

// Pieces of edge e of c meeting edge f of c2.
void meet(const TropicalCurve& c, int e, const TropicalCurve& c2, int f, std::vector<Piece>& out) {
    const IntVec de = c.edge(e).direction, df = c2.edge(f).direction;
    const Point& pe = tail_of(c, e);
    const Point& pf = tail_of(c2, f);
    Rational rx = pf.x - pe.x, ry = pf.y - pe.y;
    Interval ie = edge_interval(c, e);
    long D = det(de, df);
    if (D != 0) {
        Rational s = (rx * df.y - ry * df.x) / D;
        Rational t = (rx * de.y - ry * de.x) / D;
        Interval jf = edge_interval(c2, f);
        if (s < 0 || (ie.hi && s > *ie.hi) || t < 0 || (jf.hi && t > *jf.hi)) return;
        Point x = along(pe, de, s);
        out.push_back({x, x, false, e, f});
        return;
    }
    if (rx * de.y - ry * de.x != 0) return;  // parallel, not collinear
    long sigma = (de.x * df.x + de.y * df.y) > 0 ? 1 : -1;
    Rational s0 = (rx * de.x + ry * de.y) / (de.x * de.x + de.y * de.y);
    Interval jf;
    std::optional<Rational> far;
    if (c2.edge(f).bounded()) far = s0 + sigma * c2.length(f);
    if (sigma > 0)
        jf = {s0, far};
    else
        jf = {far, s0};
    std::optional<Rational> lo = *ie.lo;
    if (jf.lo && *jf.lo > *lo) lo = jf.lo;
    std::optional<Rational> hi = ie.hi;
    if (jf.hi && (!hi || *jf.hi < *hi)) hi = jf.hi;
    if (!hi) throw UnsupportedConfiguration("non-compact overlap of parallel rays");
    if (*lo > *hi) return;
    Point a = along(pe, de, *lo), b = along(pe, de, *hi);
    out.push_back({a, b, *lo != *hi, e, f});
}

std::map<Point, int> vertex_index(const TropicalCurve& c) {
    std::map<Point, int> m;
    for (std::size_t v = 0; v < c.vertices().size(); ++v) m[c.vertices()[v].position] = static_cast<int>(v);
    return m;
}

int lookup(const std::map<Point, int>& m, const Point& p) {
    auto it = m.find(p);
    return it == m.end() ? -1 : it->second;
}

// Area of the mixed cell of a vertex of one curve on an edge of the other, minus the vertex cell area.
int vertex_on_edge_multiplicity(const TropicalCurve& owner, int vertex, const TropicalCurve& host, int host_edge) {
    const auto& de = host.dual().edges[static_cast<std::size_t>(host_edge)];
    IntVec w = de.b - de.a;
    const auto& cell = owner.dual().cells[static_cast<std::size_t>(owner.vertices()[static_cast<std::size_t>(vertex)].cell)];
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& p : cell.corners) {
        long v = det(w, IntVec{p.i, p.j});
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
    }
    return static_cast<int>(hi - lo);
}

Point component_key(const IntersectionComponent& c) {
    bool overlap = c.kind == ComponentKind::EdgeInEdge || c.kind == ComponentKind::SegmentOverlap;
    return overlap ? std::min(c.location, c.end) : c.location;
}

}  // namespace

std::vector<IntersectionComponent> intersection_components(const TropicalCurve& c, const TropicalCurve& c2) {
    std::vector<Piece> pieces;
    for (std::size_t e = 0; e < c.edges().size(); ++e)
        for (std::size_t f = 0; f < c2.edges().size(); ++f) meet(c, static_cast<int>(e), c2, static_cast<int>(f), pieces);

    std::vector<int> group(pieces.size(), -1);
    int groups = 0;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (group[k] >= 0) continue;
        std::vector<std::size_t> stack{k};
        group[k] = groups;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < pieces.size(); ++y)
                if (group[y] < 0 && touches(pieces[x], pieces[y])) {
                    group[y] = groups;
                    stack.push_back(y);
                }
        }
        ++groups;
    }

    auto vc = vertex_index(c), vc2 = vertex_index(c2);
    std::vector<IntersectionComponent> out;
    for (int g = 0; g < groups; ++g) {
        std::vector<Piece> segs, pts;
        for (std::size_t k = 0; k < pieces.size(); ++k)
            if (group[k] == g) (pieces[k].segment ? segs : pts).push_back(pieces[k]);

        IntersectionComponent comp;
        if (segs.empty()) {
            const Point& x = pts.front().a;
            int u = lookup(vc, x), u2 = lookup(vc2, x);
            comp.location = x;
            if (u >= 0 && u2 >= 0) throw UnsupportedConfiguration("curves share the vertex " + to_string(x));
            if (u < 0 && u2 < 0) {
                comp.kind = ComponentKind::TransversePoint;
                comp.edge_first = pts.front().e;
                comp.edge_second = pts.front().f;
                for (const auto& p : pts)
                    ensure(p.e == comp.edge_first && p.f == comp.edge_second, "transverse point on several edges");
                comp.multiplicity = transverse_multiplicity(c.edge(comp.edge_first).direction,
                                                            c2.edge(comp.edge_second).direction);
            } else {
                comp.kind = ComponentKind::IsolatedVertex;
                comp.owner = u >= 0 ? 0 : 1;
                comp.vertex = u >= 0 ? u : u2;
                // The host edge is the unique edge of the other curve through the point.
                int host = comp.owner == 0 ? pts.front().f : pts.front().e;
                for (const auto& p : pts) ensure((comp.owner == 0 ? p.f : p.e) == host, "vertex on several host edges");
                comp.edge_first = comp.owner == 0 ? -1 : host;
                comp.edge_second = comp.owner == 0 ? host : -1;
                comp.multiplicity = comp.owner == 0 ? vertex_on_edge_multiplicity(c, comp.vertex, c2, host)
                                                    : vertex_on_edge_multiplicity(c2, comp.vertex, c, host);
            }
            out.push_back(comp);
            continue;
        }

        if (segs.size() != 1) throw UnsupportedConfiguration("intersection component with several overlaps");
        const Piece& s = segs.front();
        for (const auto& p : pts)
            if (!(p.a == s.a) && !(p.a == s.b))
                throw UnsupportedConfiguration("overlap component with an interior crossing");
        int a1 = lookup(vc, s.a), a2 = lookup(vc2, s.a), b1 = lookup(vc, s.b), b2 = lookup(vc2, s.b);
        if ((a1 >= 0 && a2 >= 0) || (b1 >= 0 && b2 >= 0))
            throw UnsupportedConfiguration("overlap ends at a vertex of both curves");
        comp.edge_first = s.e;
        comp.edge_second = s.f;
        if (a1 >= 0 && b1 >= 0) {
            comp.kind = ComponentKind::EdgeInEdge;
            comp.owner = 0;
            comp.location = s.a;
            comp.end = s.b;
            comp.multiplicity = vertex_on_edge_multiplicity(c, a1, c2, s.f) + vertex_on_edge_multiplicity(c, b1, c2, s.f);
        } else if (a2 >= 0 && b2 >= 0) {
            comp.kind = ComponentKind::EdgeInEdge;
            comp.owner = 1;
            comp.location = s.a;
            comp.end = s.b;
            comp.multiplicity = vertex_on_edge_multiplicity(c2, a2, c, s.e) + vertex_on_edge_multiplicity(c2, b2, c, s.e);
        } else if ((a1 >= 0 && b2 >= 0) || (a2 >= 0 && b1 >= 0)) {
            comp.kind = ComponentKind::SegmentOverlap;
            bool a_first = a1 >= 0;
            comp.location = a_first ? s.a : s.b;
            comp.end = a_first ? s.b : s.a;
            comp.vertex_first = a_first ? a1 : b1;
            comp.vertex_second = a_first ? b2 : a2;
            comp.multiplicity = vertex_on_edge_multiplicity(c, comp.vertex_first, c2, s.f) +
                                vertex_on_edge_multiplicity(c2, comp.vertex_second, c, s.e);
        } else {
            throw UnsupportedConfiguration("unclassified overlap component");
        }
        ensure(comp.multiplicity == 2, "overlap multiplicity must be 2 for non-singular curves");
        out.push_back(comp);
    }
    std::sort(out.begin(), out.end(), [](const IntersectionComponent& x, const IntersectionComponent& y) {
        return component_key(x) < component_key(y);
    });
    return out;
}

int bezout_total(const TropicalCurve& c, const TropicalCurve& c2) {
    c.require_degree();
    c2.require_degree();
    int total = 0;
    for (const auto& comp : intersection_components(c, c2)) total += comp.multiplicity;
    return total;
}

namespace {

void require_overlap(const IntersectionComponent& comp) {
    if (comp.kind != ComponentKind::SegmentOverlap) throw WrongKind("relative twist needs a segment overlap");
}

bool phases_equal(const IntersectionComponent& comp, const RealPhaseStructure& phase,
                  const RealPhaseStructure& phase2) {
    return phase.line(comp.edge_first) == phase2.line(comp.edge_second);
}

}  // namespace

bool relatively_twisted_geometric(const IntersectionComponent& comp, const TropicalCurve& c,
                                  const RealPhaseStructure& phase, const TropicalCurve& c2,
                                  const RealPhaseStructure& phase2) {
    require_overlap(comp);
    if (!phases_equal(comp, phase, phase2)) throw PhasesDiffer("relative twist needs equal phase lines");
    IntVec dir = c.edge(comp.edge_first).direction;
    std::optional<bool> verdict;
    for (Z2Pair eps : phase.line(comp.edge_first).elements()) {
        int x = partner_edge(c, phase, comp.vertex_first, comp.edge_first, eps);
        int x2 = partner_edge(c2, phase2, comp.vertex_second, comp.edge_second, eps);
        int s1 = sign(det(dir, c.outgoing(x, comp.vertex_first)));
        int s2 = sign(det(dir, c2.outgoing(x2, comp.vertex_second)));
        bool t = s1 != s2;
        ensure(!verdict || *verdict == t, "relative twist depends on the chosen quadrant");
        verdict = t;
    }
    return *verdict;
}

bool relatively_twisted_signs(const IntersectionComponent& comp, const TropicalCurve& c,
                              const RealPhaseStructure& phase, const TropicalCurve& c2,
                              const RealPhaseStructure& phase2) {
    require_overlap(comp);
    if (!phases_equal(comp, phase, phase2)) throw PhasesDiffer("relative twist needs equal phase lines");
    SignDistribution delta = signs_from_phase(c, phase);
    SignDistribution delta2 = signs_from_phase(c2, phase2);

    auto third = [](const DualCell& cell, const DualEdge& de) {
        for (const auto& p : cell.corners)
            if (p != de.a && p != de.b) return p;
        throw InternalError("degenerate cell");
    };
    const DualEdge& de = c.dual().edges[static_cast<std::size_t>(comp.edge_first)];
    const DualEdge& de2 = c2.dual().edges[static_cast<std::size_t>(comp.edge_second)];
    const DualCell& cell = c.dual().cells[static_cast<std::size_t>(c.vertices()[static_cast<std::size_t>(comp.vertex_first)].cell)];
    const DualCell& cell2 =
        c2.dual().cells[static_cast<std::size_t>(c2.vertices()[static_cast<std::size_t>(comp.vertex_second)].cell)];

    LatticePoint v1 = de.a, v2 = de.b, v3 = third(cell, de);
    // Translate the second cell so its edge lands on [v1, v2]; w1, w2 are the preimages of v1, v2.
    LatticePoint w1 = de2.a, w2 = de2.b;
    if (de2.b - de2.a != v2 - v1) std::swap(w1, w2);
    ensure(w2 - w1 == v2 - v1, "overlapping edges have non-parallel duals");
    IntVec shift = v1 - w1;
    LatticePoint w3 = third(cell2, de2);
    LatticePoint v3t{w3.i + static_cast<int>(shift.x), w3.j + static_cast<int>(shift.y)};

    int s1 = delta.at(v1), s2 = delta.at(v2), s3 = delta.at(v3);
    int t1 = delta2.at(w1), t2 = delta2.at(w2), t3 = delta2.at(w3);
    ensure(s1 * s2 * t1 * t2 == 1, "equal phases must give matching edge signs");
    if (Z2Pair::of(v3) != Z2Pair::of(v3t)) {
        bool a = s1 * s3 * t2 * t3 == 1;
        bool b = s2 * s3 * t1 * t3 == 1;
        ensure(a == b, "sign rule disagrees between the two index orders");
        return a;
    }
    bool a = s3 * s1 * t3 * t1 == -1;
    bool b = s3 * s2 * t3 * t2 == -1;
    ensure(a == b, "sign rule disagrees between the two edge endpoints");
    return a;
}

bool is_relatively_twisted(const IntersectionComponent& comp, const TropicalCurve& c, const RealPhaseStructure& phase,
                           const TropicalCurve& c2, const RealPhaseStructure& phase2) {
    bool geometric = relatively_twisted_geometric(comp, c, phase, c2, phase2);
    ensure(geometric == relatively_twisted_signs(comp, c, phase, c2, phase2),
           "geometric and sign relative twist rules disagree");
    return geometric;
}

LiftOutcome real_lift(const IntersectionComponent& comp, const TropicalCurve& c, const RealPhaseStructure& phase,
                      const TropicalCurve& c2, const RealPhaseStructure& phase2) {
    switch (comp.kind) {
        case ComponentKind::TransversePoint: {
            int m = comp.multiplicity;
            if (m % 2) return LiftOutcome::forced(1, (m - 1) / 2, std::vector<Point>{comp.location});
            if (phases_equal(comp, phase, phase2))
                return LiftOutcome::forced(2, (m - 2) / 2, std::vector<Point>{comp.location, comp.location});
            return LiftOutcome::forced(0, m / 2, std::vector<Point>{});
        }
        case ComponentKind::IsolatedVertex: {
            LiftOutcome o;
            o.kind = LiftOutcome::Kind::Indeterminate;
            o.non_real_possible = true;
            return o;
        }
        case ComponentKind::EdgeInEdge: {
            if (!phases_equal(comp, phase, phase2))
                return LiftOutcome::forced(2, 0, std::vector<Point>{comp.location, comp.end});
            bool twisted = comp.owner == 0 ? is_twisted(c, phase, comp.edge_first)
                                           : is_twisted(c2, phase2, comp.edge_second);
            if (twisted) return LiftOutcome::forced(2, 0, std::nullopt);
            return LiftOutcome::indeterminate();
        }
        case ComponentKind::SegmentOverlap: {
            if (!phases_equal(comp, phase, phase2))
                return LiftOutcome::forced(2, 0, std::vector<Point>{comp.location, comp.end});
            if (!is_relatively_twisted(comp, c, phase, c2, phase2)) return LiftOutcome::forced(2, 0, std::nullopt);
            return LiftOutcome::indeterminate();
        }
    }
    throw InternalError("unknown component kind");
}

bool tangency_possible(const IntersectionComponent& comp, const TropicalCurve& c, const RealPhaseStructure& phase,
                       const TropicalCurve& c2, const RealPhaseStructure& phase2) {
    if (comp.kind == ComponentKind::EdgeInEdge) {
        if (!phases_equal(comp, phase, phase2)) return false;
        bool twisted = comp.owner == 0 ? is_twisted(c, phase, comp.edge_first) : is_twisted(c2, phase2, comp.edge_second);
        return !twisted;
    }
    if (comp.kind == ComponentKind::SegmentOverlap) {
        if (!phases_equal(comp, phase, phase2)) return false;
        return is_relatively_twisted(comp, c, phase, c2, phase2);
    }
    throw WrongKind("tangency is only defined for overlap components");
}

}  // namespace tropreal
