#pragma once

#include "tropreal/hyperbolic.hpp"

#include <json.hpp>

#include <string>

namespace tropreal {

nlohmann::json build_report(const TropicalCurve& curve);
nlohmann::json analyze_report(const TropicalCurve& curve, const RealPhaseStructure& phase);
nlohmann::json intersect_report(const TropicalCurve& c, const RealPhaseStructure& phase, const TropicalCurve& c2,
                                const RealPhaseStructure& phase2);
nlohmann::json hyperbolic_report(const HyperbolicityReport& report);
nlohmann::json point_report(const LatticePoint& alpha, Z2Pair eps, const PointVerdict& verdict);

nlohmann::json lift_json(const LiftOutcome& lift);

// Indented "key: value" rendering of a report; scalars arrays stay on one line.
std::string to_text(const nlohmann::json& report);

}  // namespace tropreal
