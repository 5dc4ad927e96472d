#pragma once

#include "tropreal/realstruct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropreal {

enum class ComponentKind { TransversePoint, IsolatedVertex, EdgeInEdge, SegmentOverlap };
std::string to_string(ComponentKind k);

// A connected component of C ∩ C'. Curve 0 is C, curve 1 is C'.
struct IntersectionComponent {
    ComponentKind kind = ComponentKind::TransversePoint;
    int multiplicity = 0;
    Point location;  // the point; for overlaps the first endpoint
    Point end;       // overlaps only: the second endpoint
    int edge_first = -1;   // edge of C containing the component
    int edge_second = -1;  // edge of C' containing the component
    // IsolatedVertex: the vertex and the curve it belongs to.
    // EdgeInEdge: `owner` is the curve of the inner bounded edge.
    int owner = 0;
    int vertex = -1;
    // SegmentOverlap: vertex of C at `location` and vertex of C' at `end`.
    int vertex_first = -1;
    int vertex_second = -1;
};

struct LiftOutcome {
    enum class Kind { ForcedReal, ForcedPairs, ForcedMixed, Indeterminate };
    enum class Possibility { TwoReal, ConjugatePair, TangentDoubleReal };
    enum class Realisations { Infinite, ExactlyTwoPairs };
    struct Option {
        Possibility possibility;
        Realisations realisations;
    };

    Kind kind = Kind::Indeterminate;
    int reals = 0;
    int pairs = 0;
    // Tropical positions of the real points; empty optional when they are not located.
    std::optional<std::vector<Point>> locations;
    std::vector<Option> possible;  // Indeterminate only
    bool non_real_possible = false;

    static LiftOutcome forced(int reals, int pairs, std::optional<std::vector<Point>> where);
    static LiftOutcome indeterminate();
};

std::string to_string(LiftOutcome::Kind k);
std::string to_string(LiftOutcome::Possibility p);

int transverse_multiplicity(const IntVec& a, const IntVec& b);

std::vector<IntersectionComponent> intersection_components(const TropicalCurve& c, const TropicalCurve& c2);
int bezout_total(const TropicalCurve& c, const TropicalCurve& c2);

LiftOutcome real_lift(const IntersectionComponent& comp, const TropicalCurve& c, const RealPhaseStructure& phase,
                      const TropicalCurve& c2, const RealPhaseStructure& phase2);

bool relatively_twisted_geometric(const IntersectionComponent& comp, const TropicalCurve& c,
                                  const RealPhaseStructure& phase, const TropicalCurve& c2,
                                  const RealPhaseStructure& phase2);
bool relatively_twisted_signs(const IntersectionComponent& comp, const TropicalCurve& c,
                              const RealPhaseStructure& phase, const TropicalCurve& c2,
                              const RealPhaseStructure& phase2);
// Geometric definition, cross-checked against the sign rule.
bool is_relatively_twisted(const IntersectionComponent& comp, const TropicalCurve& c, const RealPhaseStructure& phase,
                           const TropicalCurve& c2, const RealPhaseStructure& phase2);

bool tangency_possible(const IntersectionComponent& comp, const TropicalCurve& c, const RealPhaseStructure& phase,
                       const TropicalCurve& c2, const RealPhaseStructure& phase2);

}  // namespace tropreal
