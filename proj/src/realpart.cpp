#include "tropreal/realpart.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tropreal {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

// Boundary strata of the compactified plane, named by the side of the simplex they are dual to.
enum Stratum { Left = 0, Bottom = 1, Diagonal = 2 };

std::vector<Stratum> strata_of(const LatticePoint& p, int degree) {
    std::vector<Stratum> s;
    if (p.i == 0) s.push_back(Left);
    if (p.j == 0) s.push_back(Bottom);
    if (p.i + p.j == degree) s.push_back(Diagonal);
    return s;
}

Z2Pair stratum_glue(Stratum s) {
    switch (s) {
        case Left: return Z2Pair::of(1, 0);
        case Bottom: return Z2Pair::of(0, 1);
        case Diagonal: return Z2Pair::of(1, 1);
    }
    return {};
}

// Sheets of the region graph: 4 quadrants of the projective plane, or 8 octants of its double cover
// (bit 0: sign of the homogenizing coordinate, bits 1-2: signs of the affine ones).
struct Sheets {
    bool sphere = false;
    std::size_t count() const { return sphere ? 8 : 4; }
    Z2Pair eps(std::size_t s) const {
        if (!sphere) return Z2Pair{static_cast<std::uint8_t>(s)};
        int s0 = s & 1, s1 = (s >> 1) & 1, s2 = (s >> 2) & 1;
        return Z2Pair::of(s1 ^ s0, s2 ^ s0);
    }
    std::size_t across(std::size_t s, Stratum st) const {
        if (!sphere) return (Z2Pair{static_cast<std::uint8_t>(s)} + stratum_glue(st)).bits;
        static const std::size_t bit[3] = {2, 4, 1};
        return s ^ bit[st];
    }
};

}  // namespace

struct RealPartAccess {
    const RealPart& rp;

    std::size_t point_index(const LatticePoint& p) const {
        auto it = std::lower_bound(rp.points_.begin(), rp.points_.end(), p);
        ensure(it != rp.points_.end() && *it == p, "unknown lattice point");
        return static_cast<std::size_t>(it - rp.points_.begin());
    }

    // Labels every (point, sheet) node by connected component of the complement of `walls`.
    std::vector<std::size_t> label(const std::set<EdgeCopy>& walls, Sheets sheets, std::size_t& components) const {
        std::size_t n = rp.points_.size(), k = sheets.count();
        DisjointSets ds(n * k);
        for (std::size_t e = 0; e < rp.edge_info_.size(); ++e) {
            std::size_t a = point_index(rp.edge_info_[e].left), b = point_index(rp.edge_info_[e].right);
            for (std::size_t s = 0; s < k; ++s)
                if (!walls.count({static_cast<int>(e), sheets.eps(s)})) ds.unite(a * k + s, b * k + s);
        }
        for (std::size_t p = 0; p < n; ++p)
            for (Stratum st : strata_of(rp.points_[p], rp.degree_))
                for (std::size_t s = 0; s < k; ++s) ds.unite(p * k + s, p * k + sheets.across(s, st));
        std::map<std::size_t, std::size_t> dense;
        std::vector<std::size_t> out(n * k);
        for (std::size_t x = 0; x < n * k; ++x) {
            auto [it, inserted] = dense.emplace(ds.find(x), dense.size());
            out[x] = it->second;
        }
        components = dense.size();
        return out;
    }
};

RegionId RealPart::canonical(const LatticePoint& p, Z2Pair eps) const {
    Z2Pair best = eps;
    // Closure of eps under the glue vectors of the strata the component touches.
    std::vector<Z2Pair> orbit{eps};
    for (std::size_t k = 0; k < orbit.size(); ++k)
        for (Stratum st : strata_of(p, degree_)) {
            Z2Pair next = orbit[k] + stratum_glue(st);
            if (std::find(orbit.begin(), orbit.end(), next) == orbit.end()) orbit.push_back(next);
        }
    for (Z2Pair e : orbit) best = std::min(best, e);
    return {p, best};
}

RealPart real_part(const TropicalCurve& curve, const RealPhaseStructure& phase) {
    RealPart rp;
    rp.degree_ = curve.require_degree();
    validate_phase(curve, phase);
    rp.points_ = curve.dual().points;
    rp.vertex_count_ = curve.vertices().size();
    for (std::size_t e = 0; e < curve.edges().size(); ++e) {
        const auto& edge = curve.edges()[e];
        const auto& de = curve.dual().edges[e];
        rp.edge_info_.push_back({edge.tail, edge.head, de.a, de.b, Z2Pair::of(edge.direction)});
        auto elems = phase.lines[e].elements();
        for (Z2Pair eps : elems) rp.edge_copies_.push_back({static_cast<int>(e), eps});
        if (!edge.bounded()) rp.gluings_.push_back({static_cast<int>(e), elems[0], elems[1]});
    }
    std::sort(rp.edge_copies_.begin(), rp.edge_copies_.end());
    rp.copy_set_.insert(rp.edge_copies_.begin(), rp.edge_copies_.end());

    for (std::size_t v = 0; v < curve.vertices().size(); ++v) {
        Z2Pair m = missing_element(curve, phase, static_cast<int>(v));
        for (std::uint8_t b = 0; b < 4; ++b)
            if (Z2Pair{b} != m) rp.vertex_copies_.push_back({static_cast<int>(v), Z2Pair{b}});
    }

    std::set<RegionId> regions;
    for (const auto& p : rp.points_)
        for (std::uint8_t b = 0; b < 4; ++b) regions.insert(rp.canonical(p, Z2Pair{b}));
    rp.regions_.assign(regions.begin(), regions.end());

    std::set<std::pair<RegionId, RegionId>> adj;
    for (std::size_t e = 0; e < rp.edge_info_.size(); ++e)
        for (std::uint8_t b = 0; b < 4; ++b) {
            if (rp.copy_set_.count({static_cast<int>(e), Z2Pair{b}})) continue;
            RegionId x = rp.canonical(rp.edge_info_[e].left, Z2Pair{b});
            RegionId y = rp.canonical(rp.edge_info_[e].right, Z2Pair{b});
            adj.insert({std::min(x, y), std::max(x, y)});
        }
    rp.adjacency_.assign(adj.begin(), adj.end());
    return rp;
}

std::size_t ComponentReport::ovals() const {
    return static_cast<std::size_t>(std::count_if(components.begin(), components.end(),
                                                  [](const auto& c) { return c.kind == RealComponent::Kind::Oval; }));
}

std::size_t ComponentReport::pseudo_lines() const { return components.size() - ovals(); }

ComponentReport count_components_direct(const RealPart& rp) {
    RealPartAccess acc{rp};
    const auto& info = rp.edge_info_;

    // Curve nodes: vertex copies, then points at infinity of rays (one per glued pair).
    std::size_t nv = rp.vertex_count_ * 4;
    DisjointSets ds(nv + info.size() * 4);
    auto vnode = [](int v, Z2Pair eps) { return static_cast<std::size_t>(v) * 4 + eps.bits; };
    for (const auto& c : rp.edge_copies_) {
        const auto& e = info[static_cast<std::size_t>(c.edge)];
        std::size_t other = e.head >= 0 ? vnode(e.head, c.eps)
                                        : nv + static_cast<std::size_t>(c.edge) * 4 + std::min(c.eps, c.eps + e.glue).bits;
        ds.unite(vnode(e.tail, c.eps), other);
    }
    std::map<std::size_t, std::vector<EdgeCopy>> groups;
    for (const auto& c : rp.edge_copies_) groups[ds.find(vnode(info[static_cast<std::size_t>(c.edge)].tail, c.eps))].push_back(c);

    ComponentReport report;
    for (auto& [root, copies] : groups) {
        RealComponent comp;
        comp.edges = std::move(copies);
        std::sort(comp.edges.begin(), comp.edges.end());
        report.components.push_back(std::move(comp));
    }
    std::sort(report.components.begin(), report.components.end(),
              [](const RealComponent& a, const RealComponent& b) { return a.edges.front() < b.edges.front(); });
    report.count = report.components.size();

    const std::size_t quads = 4;
    std::vector<std::vector<std::size_t>> side_labels(report.count);
    std::vector<std::size_t> disk_label(report.count, 0);
    for (std::size_t k = 0; k < report.count; ++k) {
        auto& comp = report.components[k];
        std::set<EdgeCopy> walls(comp.edges.begin(), comp.edges.end());
        std::size_t sides = 0;
        side_labels[k] = acc.label(walls, Sheets{false}, sides);
        if (sides == 1) {
            comp.kind = RealComponent::Kind::PseudoLine;
            continue;
        }
        ensure(sides == 2, "a real component cuts the plane into more than two pieces");
        comp.kind = RealComponent::Kind::Oval;
        // The disk side lifts to two disjoint copies on the sphere; the Moebius side lifts to one annulus.
        std::size_t lifted = 0;
        auto sphere = acc.label(walls, Sheets{true}, lifted);
        ensure(lifted == 3, "an oval must cut the sphere into three pieces");
        std::set<std::size_t> lifts_of[2];
        Sheets s8{true};
        for (std::size_t p = 0; p < rp.points_.size(); ++p)
            for (std::size_t s = 0; s < 8; ++s)
                lifts_of[side_labels[k][p * quads + s8.eps(s).bits]].insert(sphere[p * 8 + s]);
        ensure(lifts_of[0].size() + lifts_of[1].size() == 3, "inconsistent lift of an oval");
        disk_label[k] = lifts_of[0].size() == 2 ? 0 : 1;
        std::set<RegionId> inside;
        for (std::size_t p = 0; p < rp.points_.size(); ++p)
            for (std::uint8_t b = 0; b < 4; ++b)
                if (side_labels[k][p * quads + b] == disk_label[k]) inside.insert(rp.canonical(rp.points_[p], Z2Pair{b}));
        comp.interior.assign(inside.begin(), inside.end());
    }

    auto contains = [&](std::size_t outer, std::size_t inner) {
        const auto& c = report.components[inner].edges.front();
        std::size_t p = acc.point_index(info[static_cast<std::size_t>(c.edge)].left);
        return side_labels[outer][p * quads + c.eps.bits] == disk_label[outer];
    };
    std::vector<std::vector<std::size_t>> containers(report.count);
    for (std::size_t k = 0; k < report.count; ++k) {
        if (report.components[k].kind != RealComponent::Kind::Oval) continue;
        for (std::size_t o = 0; o < report.count; ++o)
            if (o != k && report.components[o].kind == RealComponent::Kind::Oval && contains(o, k))
                containers[k].push_back(o);
        report.components[k].depth = static_cast<int>(containers[k].size()) + 1;
    }
    for (std::size_t k = 0; k < report.count; ++k) {
        int best = -1;
        for (std::size_t o : containers[k])
            if (best < 0 || report.components[o].depth > report.components[static_cast<std::size_t>(best)].depth)
                best = static_cast<int>(o);
        report.components[k].parent = best;
    }
    return report;
}

}  // namespace tropreal
