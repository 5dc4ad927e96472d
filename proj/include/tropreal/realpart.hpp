#pragma once

#include "tropreal/realstruct.hpp"

#include <set>
#include <vector>

namespace tropreal {

struct EdgeCopy {
    int edge = 0;
    Z2Pair eps;
    auto operator<=>(const EdgeCopy&) const = default;
};

struct VertexCopy {
    int vertex = 0;
    Z2Pair eps;
    auto operator<=>(const VertexCopy&) const = default;
};

// Quadrant copy of a complement component; eps is the smallest member of its gluing class.
struct RegionId {
    LatticePoint point;
    Z2Pair eps;
    auto operator<=>(const RegionId&) const = default;
};

// Endpoints at infinity of two copies of a ray that the compactification identifies.
struct BoundaryGluing {
    int edge = 0;
    Z2Pair first;
    Z2Pair second;
};

struct ComponentReport;

// Patchworked real part in the four-quadrant model of the real projective plane.
class RealPart {
public:
    const std::vector<EdgeCopy>& edge_copies() const { return edge_copies_; }
    const std::vector<VertexCopy>& vertex_copies() const { return vertex_copies_; }
    const std::vector<BoundaryGluing>& boundary_gluings() const { return gluings_; }
    // Canonical region classes, sorted.
    const std::vector<RegionId>& regions() const { return regions_; }
    // Region adjacency with every edge copy of the real part acting as a wall.
    const std::vector<std::pair<RegionId, RegionId>>& region_adjacency() const { return adjacency_; }

    bool has_copy(const EdgeCopy& c) const { return copy_set_.count(c) > 0; }
    RegionId canonical(const LatticePoint& p, Z2Pair eps) const;
    int degree() const { return degree_; }

    friend RealPart real_part(const TropicalCurve& curve, const RealPhaseStructure& phase);
    friend struct RealPartAccess;
    friend ComponentReport count_components_direct(const RealPart& rp);

private:
    struct EdgeInfo {
        int tail = -1, head = -1;
        LatticePoint left, right;  // dual endpoints
        Z2Pair glue;               // for rays: direction mod 2
    };
    int degree_ = 0;
    std::size_t vertex_count_ = 0;
    std::vector<LatticePoint> points_;
    std::vector<EdgeInfo> edge_info_;
    std::vector<EdgeCopy> edge_copies_;
    std::set<EdgeCopy> copy_set_;
    std::vector<VertexCopy> vertex_copies_;
    std::vector<BoundaryGluing> gluings_;
    std::vector<RegionId> regions_;
    std::vector<std::pair<RegionId, RegionId>> adjacency_;
};

RealPart real_part(const TropicalCurve& curve, const RealPhaseStructure& phase);

struct RealComponent {
    enum class Kind { Oval, PseudoLine };
    std::vector<EdgeCopy> edges;  // sorted
    Kind kind = Kind::Oval;
    int depth = 0;    // 1 for an outermost oval; 0 for a pseudo-line
    int parent = -1;  // innermost oval containing this one, or -1
    // Ovals only: regions of the disk side, ignoring all other components.
    std::vector<RegionId> interior;
};

struct ComponentReport {
    std::size_t count = 0;
    std::vector<RealComponent> components;  // ordered by smallest edge copy
    std::size_t ovals() const;
    std::size_t pseudo_lines() const;
};

ComponentReport count_components_direct(const RealPart& rp);

}  // namespace tropreal
