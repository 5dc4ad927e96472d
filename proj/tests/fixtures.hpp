#pragma once

// Shared constructions for the test suites and the acceptance binary.

#include "tropreal/hyperbolic.hpp"
#include "tropreal/sampling.hpp"

#include <functional>
#include <map>
#include <random>
#include <vector>

namespace fixtures {

using namespace tropreal;

inline TropicalCurve from_coefficients(const std::map<LatticePoint, Rational>& coefficients) {
    TropicalPolynomial p;
    p.coefficients = coefficients;
    return curve_from_polynomial(p);
}

inline long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Every sign distribution on the curve's lattice points, in a fixed order.
inline std::vector<SignDistribution> all_sign_distributions(const TropicalCurve& c) {
    const auto& pts = c.dual().points;
    std::vector<SignDistribution> out;
    for (unsigned mask = 0; mask < (1U << pts.size()); ++mask) {
        SignDistribution d;
        for (std::size_t k = 0; k < pts.size(); ++k) d.signs[pts[k]] = (mask >> k) & 1U ? -1 : 1;
        out.push_back(d);
    }
    return out;
}

// One-vertex curve whose ray of direction (m-1,-1) crosses the diagonal ray of the standard
// line transversally with multiplicity m; the pair meets in exactly that one point.
inline TropicalCurve transverse_partner(int m) {
    static const std::map<int, std::pair<Rational, Rational>> shifts{
        {1, {Rational(-11, 3), Rational(-18, 5)}},
        {2, {Rational(-5, 3), Rational(22, 5)}},
        {3, {Rational(-11, 3), Rational(17, 5)}},
        {4, {Rational(-11, 3), Rational(17, 5)}},
    };
    TropicalCurve c = from_coefficients({{{0, 0}, 0}, {{0, 1}, 0}, {{1, m - 1}, 0}});
    const auto& [dx, dy] = shifts.at(m);
    return c.translated(dx, dy);
}

// Standard line with its vertex at (1/2,1/2): its diagonal ray swallows the bounded diagonal edge
// of honeycomb(2) from (1,1) to (2,2).
inline TropicalCurve line_through_diagonal_edge() { return honeycomb(1).translated(Rational(-1, 2), Rational(-1, 2)); }

// Standard line with its vertex at (3/2,3/2), the midpoint of that diagonal edge; the overlap is
// the segment from (3/2,3/2) to (2,2).
inline TropicalCurve line_on_diagonal_edge() { return honeycomb(1).translated(Rational(1, 2), Rational(1, 2)); }

// Conic with a bounded edge of direction (1,-1) from (-1/2,0) to (0,-1/2).
inline TropicalCurve skew_conic() {
    return from_coefficients(
        {{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{2, 0}, -1}, {{1, 1}, Rational(1, 2)}, {{0, 2}, -1}});
}

// Standard line with its vertex at (-1/4,-1/4), inside the skew edge of skew_conic().
inline TropicalCurve line_vertex_on_skew_edge() {
    return honeycomb(1).translated(Rational(-5, 4), Rational(-5, 4));
}

// Brute-force relative twist: for each element shared by the equal phase lines, take the
// neighbour edge of each curve at its overlap endpoint carrying that element and compare sides
// of the overlap line. Returns the common answer; both elements must agree.
inline bool relative_twist_oracle(const IntersectionComponent& comp, const TropicalCurve& c,
                                  const RealPhaseStructure& phase, const TropicalCurve& c2,
                                  const RealPhaseStructure& phase2) {
    const Point& p = comp.location;  // vertex of c
    const Point& q = comp.end;       // vertex of c2
    IntVec dir = c.edge(comp.edge_first).direction;
    std::vector<bool> answers;
    for (Z2Pair eps : phase.line(comp.edge_first).elements()) {
        int n1 = partner_edge(c, phase, comp.vertex_first, comp.edge_first, eps);
        int n2 = partner_edge(c2, phase2, comp.vertex_second, comp.edge_second, eps);
        Point a = p + c.outgoing(n1, comp.vertex_first);
        Point b = q + c2.outgoing(n2, comp.vertex_second);
        answers.push_back(side_of(p, dir, a) != side_of(p, dir, b));
    }
    if (answers[0] != answers[1]) throw InternalError("relative twist depends on the phase element");
    return answers[0];
}

// Union of every diagonal multi-bridge of a honeycomb.
inline TwistSet diagonal_bridge_union(const TropicalCurve& c) {
    std::vector<int> edges;
    for (const auto& b : multi_bridges(c))
        if (b.line == DualLineKind::Diagonal) edges.insert(edges.end(), b.edges.begin(), b.edges.end());
    return TwistSet::from_edges(c, edges);
}

// Random coefficients on the triangle of degree d, retried until the subdivision is unimodular.
inline TropicalCurve random_coefficient_curve(int d, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-25, 25);
    for (;;) {
        std::map<LatticePoint, Rational> co;
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) co[{i, j}] = Rational(num(rng) - 60 * (i * i + i * j + j * j), 37);
        try {
            return from_coefficients(co);
        } catch (const SingularSubdivision&) {
        }
    }
}

}  // namespace fixtures
