#include "tropreal/sampling.hpp"

namespace tropreal {

Rational random_rational(std::mt19937& rng, long lo, long hi, long denominator) {
    std::uniform_int_distribution<long> pick(lo * denominator, hi * denominator);
    Rational q(pick(rng), denominator);
    q.canonicalize();
    return q;
}

TropicalCurve random_curve(int d, std::mt19937& rng) {
    if (d < 1) throw ValidationError("degree must be at least 1");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // Positive definite form a*i^2 + b*i*j + c*j^2 with b^2 < 4ac.
        Rational a = random_rational(rng, 1, 4, 8), c = random_rational(rng, 1, 4, 8);
        Rational b = random_rational(rng, -1, 1, 8) * a;
        if (b * b >= 4 * a * c) continue;
        TropicalPolynomial poly;
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) {
                Rational q = a * i * i + b * i * j + c * j * j;
                poly.coefficients[{i, j}] = -q + random_rational(rng, -1, 1, 64) / 4;
            }
        try {
            return curve_from_polynomial(poly);
        } catch (const SingularSubdivision&) {
        }
    }
    throw InternalError("no non-singular sample after 1000 attempts");
}

SignDistribution random_signs(const TropicalCurve& curve, std::mt19937& rng) {
    SignDistribution delta;
    for (const auto& p : curve.dual().points) delta.signs[p] = (rng() & 1U) ? 1 : -1;
    return delta;
}

TwistSet random_dividing(const TropicalCurve& curve, std::mt19937& rng) {
    Gf2Subspace div = div_space(curve);
    Gf2Vector v(curve.bounded_edges().size());
    for (const auto& b : div.basis())
        if (rng() & 1U) v ^= b;
    return TwistSet::from_vector(curve, v);
}

}  // namespace tropreal
