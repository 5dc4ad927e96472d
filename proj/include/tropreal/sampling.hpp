#pragma once

#include "tropreal/realstruct.hpp"

#include <random>

namespace tropreal {

// Random non-singular curve of degree d: a perturbed concave quadratic lift, retried until unimodular.
TropicalCurve random_curve(int d, std::mt19937& rng);
SignDistribution random_signs(const TropicalCurve& curve, std::mt19937& rng);
// Uniform element of the dividing space.
TwistSet random_dividing(const TropicalCurve& curve, std::mt19937& rng);
// Rational in [lo, hi] with the given denominator.
Rational random_rational(std::mt19937& rng, long lo, long hi, long denominator);

}  // namespace tropreal
