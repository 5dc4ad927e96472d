#pragma once

#include "tropreal/realstruct.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropreal {

// Either a honeycomb of the given degree or an explicit coefficient map.
struct CurveSpec {
    std::optional<int> honeycomb;
    std::map<LatticePoint, Rational> coefficients;
    bool operator==(const CurveSpec&) const = default;
};

struct RealStructureSpec {
    enum class Kind { Signs, Twists, Phase };
    Kind kind = Kind::Signs;
    bool all_plus = false;              // Signs shorthand
    std::map<LatticePoint, int> signs;  // Signs
    std::vector<int> twists;            // Twists
    std::optional<PhaseSeed> seed;      // Twists
    std::vector<std::array<Z2Pair, 2>> phase;  // Phase: two elements per edge id
    bool operator==(const RealStructureSpec&) const = default;
};

struct RealCurveSpec {
    CurveSpec curve;
    RealStructureSpec real_structure;
    bool operator==(const RealCurveSpec&) const = default;
};

struct QuerySpec {
    LatticePoint point;
    Z2Pair eps;
    bool operator==(const QuerySpec&) const = default;
};

struct ScenarioSpec {
    RealCurveSpec primary;
    std::optional<RealCurveSpec> second;
    std::optional<QuerySpec> query;
    bool operator==(const ScenarioSpec&) const = default;
};

struct RealCurve {
    TropicalCurve curve;
    RealPhaseStructure phase;
};

// Throws ParseError (malformed JSON or field types) or ValidationError (exactly-one rule).
ScenarioSpec load_spec(const std::string& text);
// Normalized JSON text; load_spec(save_spec(s)) == s.
std::string save_spec(const ScenarioSpec& spec);
ScenarioSpec load_spec_file(const std::string& path);

TropicalCurve build_curve(const CurveSpec& spec);
// Throws ValidationError naming the offending lattice point or edge.
RealCurve realize(const RealCurveSpec& spec);

}  // namespace tropreal
