#pragma once

#include "tropreal/curve.hpp"
#include "tropreal/gf2.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropreal {

struct SignDistribution {
    std::map<LatticePoint, int> signs;  // values are +1 or -1

    static SignDistribution constant(const TropicalCurve& curve, int sign = 1);
    int at(const LatticePoint& v) const;
    SignDistribution negated() const;
    // The distribution seen from the quadrant eps: v -> extend_sign(*this, eps, v).
    SignDistribution resigned(Z2Pair eps) const;
    bool operator==(const SignDistribution&) const = default;
};

int extend_sign(const SignDistribution& delta, Z2Pair eps, const LatticePoint& v);

struct RealPhaseStructure {
    std::vector<PhaseLine> lines;  // indexed by edge id

    const PhaseLine& line(int edge_id) const { return lines.at(static_cast<std::size_t>(edge_id)); }
    RealPhaseStructure translated(Z2Pair by) const;
    bool operator==(const RealPhaseStructure&) const = default;
};

class TwistSet {
public:
    TwistSet() = default;
    static TwistSet from_edges(const TropicalCurve& curve, std::vector<int> edges);
    static TwistSet from_vector(const TropicalCurve& curve, const Gf2Vector& v);
    static TwistSet all_bounded(const TropicalCurve& curve);

    const std::vector<int>& edges() const { return edges_; }
    const Gf2Vector& vector() const { return vector_; }
    bool contains(int edge_id) const;
    std::size_t size() const { return edges_.size(); }
    bool operator==(const TwistSet& o) const { return edges_ == o.edges_; }

private:
    std::vector<int> edges_;  // sorted bounded edge ids
    Gf2Vector vector_;
};

struct PhaseSeed {
    int edge = 0;
    Z2Pair eps;
    bool operator==(const PhaseSeed&) const = default;
};

RealPhaseStructure phase_from_signs(const TropicalCurve& curve, const SignDistribution& delta);
// Builds a structure from the per-vertex element of Z_2^2 that lies on none of the incident lines.
RealPhaseStructure phase_from_missing(const TropicalCurve& curve, const std::vector<Z2Pair>& missing);
RealPhaseStructure phase_from_twists(const TropicalCurve& curve, const TwistSet& twists,
                                     std::optional<PhaseSeed> seed = std::nullopt);

// Throws ValidationError describing the first violated invariant.
void validate_phase(const TropicalCurve& curve, const RealPhaseStructure& phase);
Z2Pair missing_element(const TropicalCurve& curve, const RealPhaseStructure& phase, int vertex);
// One sign distribution inducing the phase; normalized to +1 at the smallest lattice point.
SignDistribution signs_from_phase(const TropicalCurve& curve, const RealPhaseStructure& phase);

// Four-sign product rule on the dual quadrilateral of each bounded edge.
TwistSet twists_from_signs(const TropicalCurve& curve, const SignDistribution& delta);
// Sidedness rule: phase-sharing neighbours on opposite sides of the edge's line.
TwistSet twists_from_phase(const TropicalCurve& curve, const RealPhaseStructure& phase);
bool is_twisted(const TropicalCurve& curve, const RealPhaseStructure& phase, int edge_id);
// The other edge at `vertex` whose phase line contains eps.
int partner_edge(const TropicalCurve& curve, const RealPhaseStructure& phase, int vertex, int edge_id, Z2Pair eps);
// Corners of the two cells on either side of a bounded edge that are off the edge.
std::pair<LatticePoint, LatticePoint> opposite_corners(const TropicalCurve& curve, int edge_id);

std::vector<Gf2Constraint> admissibility_constraints(const TropicalCurve& curve);
std::vector<Gf2Constraint> dividing_constraints(const TropicalCurve& curve);
bool is_admissible(const TropicalCurve& curve, const TwistSet& twists);
bool is_dividing(const TropicalCurve& curve, const TwistSet& twists);
Gf2Subspace adm_space(const TropicalCurve& curve);
Gf2Subspace div_space(const TropicalCurve& curve);

// Symmetric matrix of |cycle_i ∩ cycle_j ∩ T| mod 2 over primitive cycles.
Gf2Matrix twist_matrix(const TropicalCurve& curve, const TwistSet& twists);
std::size_t count_components_matrix(const TropicalCurve& curve, const TwistSet& twists);

}  // namespace tropreal
