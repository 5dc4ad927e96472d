#include "tropreal/realstruct.hpp"

#include <algorithm>
#include <deque>

namespace tropreal {

SignDistribution SignDistribution::constant(const TropicalCurve& curve, int sign) {
    SignDistribution d;
    for (const auto& p : curve.dual().points) d.signs[p] = sign;
    return d;
}

int SignDistribution::at(const LatticePoint& v) const {
    auto it = signs.find(v);
    if (it == signs.end()) throw UnknownPoint("no sign at lattice point " + to_string(v));
    return it->second;
}

SignDistribution SignDistribution::negated() const {
    SignDistribution d = *this;
    for (auto& [p, s] : d.signs) s = -s;
    return d;
}

SignDistribution SignDistribution::resigned(Z2Pair eps) const {
    SignDistribution d = *this;
    for (auto& [p, s] : d.signs) s = extend_sign(*this, eps, p);
    return d;
}

int extend_sign(const SignDistribution& delta, Z2Pair eps, const LatticePoint& v) {
    int s = delta.at(v);
    return dot(eps, v) ? -s : s;
}

RealPhaseStructure RealPhaseStructure::translated(Z2Pair by) const {
    RealPhaseStructure out = *this;
    for (auto& l : out.lines) l = l.translated(by);
    return out;
}

TwistSet TwistSet::from_edges(const TropicalCurve& curve, std::vector<int> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    TwistSet t;
    t.vector_ = Gf2Vector(curve.bounded_edges().size());
    for (int id : edges) {
        if (id < 0 || static_cast<std::size_t>(id) >= curve.edges().size())
            throw ValidationError("edge id " + std::to_string(id) + " out of range");
        int k = curve.bounded_index(id);
        if (k < 0) throw ValidationError("edge " + std::to_string(id) + " is unbounded and cannot be twisted");
        t.vector_.set(static_cast<std::size_t>(k));
    }
    t.edges_ = std::move(edges);
    return t;
}

TwistSet TwistSet::from_vector(const TropicalCurve& curve, const Gf2Vector& v) {
    ensure(v.size() == curve.bounded_edges().size(), "twist vector has wrong length");
    std::vector<int> edges;
    for (std::size_t k : v.ones()) edges.push_back(curve.bounded_edges()[k]);
    return from_edges(curve, std::move(edges));
}

TwistSet TwistSet::all_bounded(const TropicalCurve& curve) { return from_edges(curve, curve.bounded_edges()); }

bool TwistSet::contains(int edge_id) const { return std::binary_search(edges_.begin(), edges_.end(), edge_id); }

RealPhaseStructure phase_from_signs(const TropicalCurve& curve, const SignDistribution& delta) {
    RealPhaseStructure phase;
    for (const auto& de : curve.dual().edges) {
        std::vector<Z2Pair> members;
        for (std::uint8_t b = 0; b < 4; ++b) {
            Z2Pair eps{b};
            if (extend_sign(delta, eps, de.a) != extend_sign(delta, eps, de.b)) members.push_back(eps);
        }
        ensure(members.size() == 2, "sign rule must select exactly two quadrants per edge");
        phase.lines.emplace_back(members[0], members[0] + members[1]);
    }
    validate_phase(curve, phase);
    return phase;
}

void validate_phase(const TropicalCurve& curve, const RealPhaseStructure& phase) {
    if (phase.lines.size() != curve.edges().size())
        throw ValidationError("phase structure has " + std::to_string(phase.lines.size()) + " lines for " +
                              std::to_string(curve.edges().size()) + " edges");
    for (std::size_t e = 0; e < curve.edges().size(); ++e)
        if (phase.lines[e].direction() != Z2Pair::of(curve.edges()[e].direction))
            throw ValidationError("phase line of edge " + std::to_string(e) + " is not parallel to the edge mod 2");
    for (std::size_t v = 0; v < curve.vertices().size(); ++v) {
        int count[4] = {0, 0, 0, 0};
        for (int id : curve.vertices()[v].edges)
            for (Z2Pair eps : phase.line(id).elements()) ++count[eps.bits];
        for (int c : count)
            if (c != 0 && c != 2)
                throw ValidationError("vertex condition fails at vertex " + std::to_string(v));
    }
}

Z2Pair missing_element(const TropicalCurve& curve, const RealPhaseStructure& phase, int vertex) {
    bool seen[4] = {false, false, false, false};
    for (int id : curve.vertices().at(static_cast<std::size_t>(vertex)).edges)
        for (Z2Pair eps : phase.line(id).elements()) seen[eps.bits] = true;
    int missing = -1;
    for (int b = 0; b < 4; ++b)
        if (!seen[b]) {
            ensure(missing < 0, "more than one quadrant misses a vertex");
            missing = b;
        }
    ensure(missing >= 0, "every quadrant meets a vertex");
    return Z2Pair{static_cast<std::uint8_t>(missing)};
}

namespace {

// Line of an edge at a vertex whose missing element is m: the coset of the edge direction avoiding m.
PhaseLine line_avoiding(Z2Pair m, Z2Pair dir) {
    Z2Pair other = dir == Z2Pair::of(1, 0) ? Z2Pair::of(0, 1) : Z2Pair::of(1, 0);
    return PhaseLine(m + other, dir);
}

}  // namespace

RealPhaseStructure phase_from_missing(const TropicalCurve& curve, const std::vector<Z2Pair>& missing) {
    ensure(missing.size() == curve.vertices().size(), "one element per vertex required");
    RealPhaseStructure phase;
    for (const auto& e : curve.edges()) {
        Z2Pair dir = Z2Pair::of(e.direction);
        PhaseLine l = line_avoiding(missing[static_cast<std::size_t>(e.tail)], dir);
        if (e.bounded() && !(line_avoiding(missing[static_cast<std::size_t>(e.head)], dir) == l))
            throw ValidationError("inconsistent vertex data across a bounded edge");
        phase.lines.push_back(l);
    }
    validate_phase(curve, phase);
    return phase;
}

SignDistribution signs_from_phase(const TropicalCurve& curve, const RealPhaseStructure& phase) {
    validate_phase(curve, phase);
    const auto& cells = curve.dual().cells;
    std::map<LatticePoint, int> sign;
    std::vector<bool> done(cells.size(), false);
    std::deque<std::size_t> queue;
    auto settle = [&](std::size_t c) {
        Z2Pair m = missing_element(curve, phase, static_cast<int>(c));
        // (-1)^{m.p} delta(p) is constant over the cell's corners.
        std::optional<int> level;
        for (const auto& p : cells[c].corners)
            if (sign.count(p)) {
                int l = dot(m, p) ? -sign[p] : sign[p];
                ensure(!level || *level == l, "phase admits no sign distribution");
                level = l;
            }
        if (!level) level = 1;
        for (const auto& p : cells[c].corners)
            if (!sign.count(p)) sign[p] = dot(m, p) ? -*level : *level;
        done[c] = true;
        for (int id : cells[c].edges) {
            const auto& de = curve.dual().edges[static_cast<std::size_t>(id)];
            for (int n : de.cells)
                if (n >= 0 && !done[static_cast<std::size_t>(n)]) queue.push_back(static_cast<std::size_t>(n));
        }
    };
    for (std::size_t start = 0; start < cells.size(); ++start) {
        if (done[start]) continue;
        queue.push_back(start);
        while (!queue.empty()) {
            std::size_t c = queue.front();
            queue.pop_front();
            if (!done[c]) settle(c);
        }
    }
    SignDistribution d{sign};
    if (!d.signs.empty() && d.signs.begin()->second < 0) d = d.negated();
    ensure(phase_from_signs(curve, d) == phase, "reconstructed signs do not reproduce the phase");
    return d;
}

std::pair<LatticePoint, LatticePoint> opposite_corners(const TropicalCurve& curve, int edge_id) {
    const auto& de = curve.dual().edges.at(static_cast<std::size_t>(edge_id));
    ensure(de.interior(), "opposite corners of a boundary edge");
    auto third = [&](int cell) {
        for (const auto& p : curve.dual().cells[static_cast<std::size_t>(cell)].corners)
            if (p != de.a && p != de.b) return p;
        throw InternalError("degenerate cell");
    };
    return {third(de.cells[0]), third(de.cells[1])};
}

TwistSet twists_from_signs(const TropicalCurve& curve, const SignDistribution& delta) {
    std::vector<int> twisted;
    for (int id : curve.bounded_edges()) {
        const auto& de = curve.dual().edges[static_cast<std::size_t>(id)];
        auto [v3, v4] = opposite_corners(curve, id);
        bool twist;
        if (Z2Pair::of(v3) != Z2Pair::of(v4))
            twist = delta.at(de.a) * delta.at(de.b) * delta.at(v3) * delta.at(v4) == 1;
        else
            twist = delta.at(v3) * delta.at(v4) == -1;
        if (twist) twisted.push_back(id);
    }
    return TwistSet::from_edges(curve, std::move(twisted));
}

int partner_edge(const TropicalCurve& curve, const RealPhaseStructure& phase, int vertex, int edge_id, Z2Pair eps) {
    int found = -1;
    for (int id : curve.vertices().at(static_cast<std::size_t>(vertex)).edges)
        if (id != edge_id && phase.line(id).contains(eps)) {
            ensure(found < 0, "two partner edges share a quadrant");
            found = id;
        }
    ensure(found >= 0, "no partner edge for a quadrant");
    return found;
}

bool is_twisted(const TropicalCurve& curve, const RealPhaseStructure& phase, int edge_id) {
    const auto& e = curve.edge(edge_id);
    ensure(e.bounded(), "twist of a ray");
    std::optional<bool> verdict;
    for (Z2Pair eps : phase.line(edge_id).elements()) {
        int sides[2];
        int ends[2] = {e.tail, e.head};
        for (int k = 0; k < 2; ++k) {
            int partner = partner_edge(curve, phase, ends[k], edge_id, eps);
            sides[k] = sign(det(e.direction, curve.outgoing(partner, ends[k])));
        }
        bool t = sides[0] != sides[1];
        ensure(!verdict || *verdict == t, "twist verdict depends on the chosen quadrant");
        verdict = t;
    }
    return *verdict;
}

TwistSet twists_from_phase(const TropicalCurve& curve, const RealPhaseStructure& phase) {
    validate_phase(curve, phase);
    std::vector<int> twisted;
    for (int id : curve.bounded_edges())
        if (is_twisted(curve, phase, id)) twisted.push_back(id);
    return TwistSet::from_edges(curve, std::move(twisted));
}

RealPhaseStructure phase_from_twists(const TropicalCurve& curve, const TwistSet& twists,
                                     std::optional<PhaseSeed> seed) {
    if (!is_admissible(curve, twists)) throw NotAdmissible("twist set violates the cycle condition");
    PhaseSeed s = seed.value_or(PhaseSeed{0, Z2Pair{}});
    if (s.edge < 0 || static_cast<std::size_t>(s.edge) >= curve.edges().size())
        throw ValidationError("seed edge " + std::to_string(s.edge) + " out of range");

    const auto& seed_edge = curve.edge(s.edge);
    int root = seed_edge.tail;
    // The seed quadrant lies on the seed edge and pairs with the lower-id neighbour at the root.
    int higher = -1;
    for (int id : curve.vertices()[static_cast<std::size_t>(root)].edges)
        if (id != s.edge) higher = std::max(higher, id);
    std::vector<std::optional<Z2Pair>> missing(curve.vertices().size());
    missing[static_cast<std::size_t>(root)] = s.eps + Z2Pair::of(curve.edge(higher).direction);

    std::deque<int> queue{root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        Z2Pair mu = *missing[static_cast<std::size_t>(u)];
        for (int id : curve.vertices()[static_cast<std::size_t>(u)].edges) {
            const auto& e = curve.edge(id);
            if (!e.bounded()) continue;
            auto [v3, v4] = opposite_corners(curve, id);
            bool same_parity = Z2Pair::of(v3) == Z2Pair::of(v4);
            bool shift = twists.contains(id) == same_parity;
            Z2Pair mw = shift ? mu + Z2Pair::of(e.direction) : mu;
            int w = curve.other_end(id, u);
            auto& slot = missing[static_cast<std::size_t>(w)];
            if (!slot) {
                slot = mw;
                queue.push_back(w);
            } else if (*slot != mw) {
                throw NotAdmissible("phase propagation is inconsistent around a cycle");
            }
        }
    }
    std::vector<Z2Pair> m;
    for (const auto& x : missing) {
        ensure(x.has_value(), "curve graph is disconnected");
        m.push_back(*x);
    }
    RealPhaseStructure phase = phase_from_missing(curve, m);
    ensure(phase.line(s.edge).contains(s.eps), "seed quadrant missing from the seed edge");
    ensure(twists_from_phase(curve, phase) == twists, "twist round trip failed");
    return phase;
}

std::vector<Gf2Constraint> admissibility_constraints(const TropicalCurve& curve) {
    std::vector<Gf2Constraint> out;
    std::size_t n = curve.bounded_edges().size();
    for (const auto& cycle : curve.primitive_cycles()) {
        Gf2Vector first(n), second(n);
        for (int id : cycle.edges) {
            Z2Pair d = Z2Pair::of(curve.edge(id).direction);
            auto k = static_cast<std::size_t>(curve.bounded_index(id));
            first.set(k, d.first() != 0);
            second.set(k, d.second() != 0);
        }
        out.push_back({first, false});
        out.push_back({second, false});
    }
    return out;
}

std::vector<Gf2Constraint> dividing_constraints(const TropicalCurve& curve) {
    std::vector<Gf2Constraint> out = admissibility_constraints(curve);
    std::size_t n = curve.bounded_edges().size();
    for (const auto& cycle : curve.primitive_cycles()) {
        Gf2Vector parity(n);
        for (int id : cycle.edges) parity.set(static_cast<std::size_t>(curve.bounded_index(id)));
        out.push_back({parity, false});
    }
    return out;
}

bool is_admissible(const TropicalCurve& curve, const TwistSet& twists) {
    for (const auto& cycle : curve.primitive_cycles()) {
        Z2Pair sum;
        for (int id : cycle.edges)
            if (twists.contains(id)) sum = sum + Z2Pair::of(curve.edge(id).direction);
        if (!sum.zero()) return false;
    }
    return true;
}

bool is_dividing(const TropicalCurve& curve, const TwistSet& twists) {
    if (!is_admissible(curve, twists)) throw NotAdmissible("dividing test needs an admissible twist set");
    for (const auto& cycle : curve.primitive_cycles()) {
        std::size_t n = std::count_if(cycle.edges.begin(), cycle.edges.end(),
                                      [&](int id) { return twists.contains(id); });
        if (n % 2) return false;
    }
    return true;
}

Gf2Subspace adm_space(const TropicalCurve& curve) {
    return solve_affine(admissibility_constraints(curve), curve.bounded_edges().size()).directions;
}

Gf2Subspace div_space(const TropicalCurve& curve) {
    return solve_affine(dividing_constraints(curve), curve.bounded_edges().size()).directions;
}

Gf2Matrix twist_matrix(const TropicalCurve& curve, const TwistSet& twists) {
    auto cycles = curve.primitive_cycles();
    std::size_t g = cycles.size();
    Gf2Vector chosen = TwistSet::from_edges(curve, twists.edges()).vector();
    std::vector<Gf2Vector> masks;
    for (const auto& c : cycles) {
        Gf2Vector v(curve.bounded_edges().size());
        for (int id : c.edges) v.set(static_cast<std::size_t>(curve.bounded_index(id)));
        masks.push_back(v & chosen);
    }
    Gf2Matrix a(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) a.set(i, j, (masks[i] & masks[j]).popcount() % 2 == 1);
    return a;
}

std::size_t count_components_matrix(const TropicalCurve& curve, const TwistSet& twists) {
    if (!is_admissible(curve, twists)) throw NotAdmissible("component count needs an admissible twist set");
    return 1 + kernel(twist_matrix(curve, twists)).dim();
}

}  // namespace tropreal
