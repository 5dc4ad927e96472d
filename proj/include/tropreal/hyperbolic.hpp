#pragma once

#include "tropreal/intersect.hpp"
#include "tropreal/realpart.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropreal {

// Sector labels; the ray of label k has direction ray_direction(k).
enum class FanLabel { X = 0, Y = 1, XY = 2 };
std::string to_string(FanLabel l);
// (1,0), (0,1), (1,1).
IntVec label_vector(FanLabel l);
// Outward ray directions (1,0), (0,1), (-1,-1).
IntVec ray_direction(FanLabel l);

// Three half-lines from an apex and the three open sectors between them.
// The sector of label k is the one whose closure avoids the ray of label k.
struct SigmaV {
    Point apex;

    // Sector strictly containing q, or nullopt when q lies on a ray or at the apex.
    std::optional<FanLabel> sector_of(const Point& q) const;
    // Label of the ray through q (apex excluded), if any.
    std::optional<FanLabel> ray_of(const Point& q) const;
};

SigmaV sigma_v(const Point& v);
// Throws PointOnCurve when v lies on the curve.
bool is_generic(const Point& v, const TropicalCurve& curve);
// True when v lies in the open complement component dual to alpha.
bool in_component(const TropicalCurve& curve, const LatticePoint& alpha, const Point& v);
// The sample-th generic point of the component, from a deterministic schedule.
Point generic_point(const TropicalCurve& curve, const LatticePoint& alpha, int sample = 0);

struct PointVerdict {
    bool positive = true;
    int failing_condition = 0;  // 1, 2 or 3 when negative
    std::string detail;
    Point sample;
};

PointVerdict hyperbolic_wrt_point(const TropicalCurve& curve, const RealPhaseStructure& phase,
                                  const LatticePoint& alpha, Z2Pair eps, int sample = 0);
// Same test at an explicit generic point.
PointVerdict hyperbolic_wrt_generic_point(const TropicalCurve& curve, const RealPhaseStructure& phase,
                                          const Point& v, Z2Pair eps);

struct HyperbolicityReport {
    bool hyperbolic = false;  // twist-matrix criterion
    std::size_t kernel_dim = 0;
    bool nested_chain = false;  // oval nesting of the real part has the hyperbolic shape
    // Method A: from the oval nesting.
    std::set<LatticePoint> locus_geometric;
    std::set<RegionId> real_locus_geometric;
    // Method B: point-wise criterion over every (component, quadrant).
    std::set<LatticePoint> locus_pointwise;
    std::set<RegionId> real_locus_pointwise;
    bool stable = false;
    std::map<std::pair<LatticePoint, Z2Pair>, PointVerdict> per_point;

    bool methods_agree() const {
        return locus_geometric == locus_pointwise && real_locus_geometric == real_locus_pointwise;
    }
};

struct HyperbolicityCheck {
    bool hyperbolic = false;
    std::size_t kernel_dim = 0;
};

HyperbolicityCheck is_hyperbolic(const TropicalCurve& curve, const TwistSet& twists);
HyperbolicityReport hyperbolicity_locus(const TropicalCurve& curve, const RealPhaseStructure& phase);
bool is_stable_limit(const TropicalCurve& curve, const RealPhaseStructure& phase);

enum class DualLineKind { Vertical, Horizontal, Diagonal };  // x = k, y = k, x + y = k

struct MultiBridge {
    std::vector<int> edges;  // sorted
    DualLineKind line = DualLineKind::Vertical;
    int level = 0;
    IntVec direction;
    Gf2Vector vector(const TropicalCurve& curve) const;
    std::string dual_line() const;
};

// All 3(d-1) bridges ordered vertical, horizontal, diagonal, then by level.
std::vector<MultiBridge> multi_bridges(const TropicalCurve& curve);
std::vector<MultiBridge> constraining_bridges(const TropicalCurve& curve, const LatticePoint& alpha);
std::set<LatticePoint> honeycomb_locus(const TropicalCurve& curve, const TwistSet& twists);

struct HypAlphaFlat {
    LatticePoint alpha;
    Gf2Vector origin;
    Gf2Subspace directions{0};
    std::vector<MultiBridge> constraining;
    std::size_t codim() const { return constraining.size(); }
    bool contains(const Gf2Vector& v) const;
};

HypAlphaFlat hyp_alpha_flat(const TropicalCurve& curve, const LatticePoint& alpha);

}  // namespace tropreal
