#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace tropreal;
using fixtures::binom;

namespace {

const Z2Pair kAllEps[4] = {Z2Pair::of(0, 0), Z2Pair::of(1, 0), Z2Pair::of(0, 1), Z2Pair::of(1, 1)};

std::set<LatticePoint> all_points(const TropicalCurve& c) {
    return {c.dual().points.begin(), c.dual().points.end()};
}

TwistSet bridge(const TropicalCurve& c, DualLineKind kind, int level) {
    for (const auto& b : multi_bridges(c))
        if (b.line == kind && b.level == level) return TwistSet::from_edges(c, b.edges);
    throw InternalError("no such bridge");
}

// Locus from the bridge census, written out independently of the library's constraining_bridges.
std::set<LatticePoint> census_locus(const TropicalCurve& c, const TwistSet& t) {
    int d = c.require_degree();
    std::set<LatticePoint> out;
    for (const auto& a : c.dual().points) {
        bool ok = true;
        for (const auto& b : multi_bridges(c)) {
            bool constraining = (b.line == DualLineKind::Vertical && b.level < a.i) ||
                                (b.line == DualLineKind::Horizontal && b.level < a.j) ||
                                (b.line == DualLineKind::Diagonal && b.level > a.i + a.j && b.level <= d - 1);
            if (!constraining) continue;
            for (int e : b.edges) ok = ok && t.contains(e);
        }
        if (ok) out.insert(a);
    }
    return out;
}

}  // namespace

TEST_CASE("is_hyperbolic examples") {
    auto empty4 = is_hyperbolic(honeycomb(4), TwistSet{});
    CHECK_FALSE(empty4.hyperbolic);
    CHECK(empty4.kernel_dim == 3);
    auto stable5 = is_hyperbolic(honeycomb(5), TwistSet::all_bounded(honeycomb(5)));
    CHECK(stable5.hyperbolic);
    CHECK(stable5.kernel_dim == 2);
    TropicalCurve c6 = honeycomb(6);
    auto diag6 = is_hyperbolic(c6, fixtures::diagonal_bridge_union(c6));
    CHECK(diag6.hyperbolic);
    CHECK(diag6.kernel_dim == 2);
    TropicalCurve c3 = honeycomb(3);
    CHECK_THROWS_AS(is_hyperbolic(c3, TwistSet::from_edges(c3, {c3.primitive_cycles()[0].edges[0]})), NotAdmissible);
}

TEST_CASE("fan at a point") {
    SigmaV s = sigma_v({Rational(1, 2), 3});
    CHECK(ray_direction(FanLabel::X) == IntVec{1, 0});
    CHECK(ray_direction(FanLabel::Y) == IntVec{0, 1});
    CHECK(ray_direction(FanLabel::XY) == IntVec{-1, -1});
    auto at = [&](Rational dx, Rational dy) { return Point{s.apex.x + dx, s.apex.y + dy}; };
    CHECK(s.sector_of(at(1, 1)) == FanLabel::XY);
    CHECK(s.sector_of(at(-1, 2)) == FanLabel::X);
    CHECK(s.sector_of(at(-2, -1)) == FanLabel::X);
    CHECK(s.sector_of(at(1, -2)) == FanLabel::Y);
    CHECK(s.sector_of(at(-1, -2)) == FanLabel::Y);
    CHECK_FALSE(s.sector_of(at(3, 0)).has_value());
    CHECK(s.ray_of(at(3, 0)) == FanLabel::X);
    CHECK(s.ray_of(at(0, Rational(1, 7))) == FanLabel::Y);
    CHECK(s.ray_of(at(-2, -2)) == FanLabel::XY);
    CHECK_FALSE(s.ray_of(s.apex).has_value());
    // The sector of a label is the one whose closure avoids that label's ray.
    for (FanLabel l : {FanLabel::X, FanLabel::Y, FanLabel::XY}) {
        IntVec r = ray_direction(l);
        Point near_ray = at(Rational(r.x) + Rational(1, 100), Rational(r.y) - Rational(1, 100));
        Point other_side = at(Rational(r.x) - Rational(1, 100), Rational(r.y) + Rational(1, 100));
        CHECK(s.sector_of(near_ray) != l);
        CHECK(s.sector_of(other_side) != l);
    }
}

TEST_CASE("genericity") {
    TropicalCurve c = honeycomb(2);
    CHECK_FALSE(is_generic({Rational(3, 2), 2}, c));                    // ray X runs into the vertex (2,2)
    CHECK_FALSE(is_generic({Rational(5, 2), Rational(5, 2)}, c));       // ray XY contains the diagonal edge
    CHECK(is_generic({0, 0}, c));
    CHECK_THROWS_AS(is_generic({Rational(3, 2), Rational(3, 2)}, c), PointOnCurve);
    for (const auto& alpha : c.dual().points)
        for (int k = 0; k < 5; ++k) {
            Point v = generic_point(c, alpha, k);
            CHECK(is_generic(v, c));
            CHECK(in_component(c, alpha, v));
        }
}

TEST_CASE("stable honeycombs are hyperbolic everywhere in the positive quadrant") {
    for (int d = 1; d <= 5; ++d) {
        TropicalCurve c = honeycomb(d);
        RealPhaseStructure p = phase_from_signs(c, SignDistribution::constant(c));
        for (const auto& alpha : c.dual().points) CHECK(hyperbolic_wrt_point(c, p, alpha, Z2Pair{}).positive);
        CHECK(is_stable_limit(c, p));
        HyperbolicityReport r = hyperbolicity_locus(c, p);
        CHECK(r.stable);
        CHECK(r.locus_pointwise == all_points(c));
        CHECK(r.methods_agree());
    }
}

TEST_CASE("stability needs the positive quadrant") {
    TropicalCurve c = honeycomb(4);
    SignDistribution shifted = SignDistribution::constant(c).resigned(Z2Pair::of(1, 0));
    RealPhaseStructure p = phase_from_signs(c, shifted);
    CHECK(twists_from_phase(c, p) == TwistSet::all_bounded(c));
    CHECK_FALSE(is_stable_limit(c, p));
    for (const auto& alpha : c.dual().points) CHECK(hyperbolic_wrt_point(c, p, alpha, Z2Pair::of(1, 0)).positive);

    TropicalCurve skew = fixtures::skew_conic();
    CHECK_FALSE(is_stable_limit(skew, phase_from_signs(skew, SignDistribution::constant(skew))));
}

TEST_CASE("a single diagonal bridge on the quartic") {
    TropicalCurve c = honeycomb(4);
    TwistSet t = bridge(c, DualLineKind::Diagonal, 3);
    RealPhaseStructure p = phase_from_twists(c, t);
    bool any_positive = false;
    for (Z2Pair eps : kAllEps) {
        PointVerdict v = hyperbolic_wrt_point(c, p, {2, 1}, eps);
        CHECK_FALSE(v.positive);
        CHECK(v.failing_condition == 3);
        any_positive = any_positive || hyperbolic_wrt_point(c, p, {1, 1}, eps).positive;
    }
    CHECK(any_positive);
    CHECK(honeycomb_locus(c, t) == std::set<LatticePoint>{{1, 1}});
    HyperbolicityReport r = hyperbolicity_locus(c, p);
    CHECK(r.locus_pointwise == std::set<LatticePoint>{{1, 1}});
    CHECK(r.real_locus_pointwise.size() == 1);
    CHECK(r.methods_agree());
}

TEST_CASE("honeycombs only fail the twist condition") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        TropicalCurve c = honeycomb(2 + trial % 3);
        RealPhaseStructure p = phase_from_twists(c, random_dividing(c, rng));
        for (const auto& alpha : c.dual().points)
            for (Z2Pair eps : kAllEps) {
                PointVerdict v = hyperbolic_wrt_point(c, p, alpha, eps);
                CHECK((v.positive || v.failing_condition == 3));
            }
    }
}

TEST_CASE("verdict does not depend on the sampled point") {
    std::mt19937 rng(88);
    for (int trial = 0; trial < 8; ++trial) {
        TropicalCurve c = trial % 2 ? honeycomb(2 + trial % 3) : random_curve(2 + trial % 2, rng);
        RealPhaseStructure p = trial % 2 ? phase_from_twists(c, random_dividing(c, rng))
                                         : phase_from_signs(c, random_signs(c, rng));
        for (const auto& alpha : c.dual().points)
            for (Z2Pair eps : kAllEps) {
                PointVerdict first = hyperbolic_wrt_point(c, p, alpha, eps, 0);
                for (int k = 1; k < 5; ++k) {
                    PointVerdict again = hyperbolic_wrt_point(c, p, alpha, eps, k);
                    CHECK(again.positive == first.positive);
                    CHECK((again.positive || again.failing_condition > 0));
                }
            }
    }
}

TEST_CASE("hyperbolicity loci examples") {
    TropicalCurve c4 = honeycomb(4);
    HyperbolicityReport empty = hyperbolicity_locus(c4, phase_from_twists(c4, TwistSet{}));
    CHECK_FALSE(empty.hyperbolic);
    CHECK(empty.locus_pointwise.empty());
    CHECK(empty.locus_geometric.empty());
    CHECK(empty.real_locus_pointwise.empty());

    for (int d = 1; d <= 5; ++d) {
        TropicalCurve c = honeycomb(d);
        std::vector<TwistSet> all_bridges;
        std::vector<int> edges;
        for (const auto& b : multi_bridges(c)) edges.insert(edges.end(), b.edges.begin(), b.edges.end());
        TwistSet everything = TwistSet::from_edges(c, edges);
        CHECK(everything == TwistSet::all_bounded(c));
        CHECK(honeycomb_locus(c, everything) == all_points(c));
        std::set<LatticePoint> empty_locus = honeycomb_locus(c, TwistSet{});
        if (d >= 4) CHECK(empty_locus.empty());
        CHECK(empty_locus.empty() != is_hyperbolic(c, TwistSet{}).hyperbolic);
    }
    // Low degrees: the empty twist set is hyperbolic and the locus is not empty.
    CHECK(honeycomb_locus(honeycomb(2), TwistSet{}) == std::set<LatticePoint>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(honeycomb_locus(honeycomb(3), TwistSet{}) == std::set<LatticePoint>{{1, 1}});
}

TEST_CASE("locus errors") {
    TropicalCurve skew = fixtures::skew_conic();
    CHECK_THROWS_AS(multi_bridges(skew), NotHoneycomb);
    CHECK_THROWS_AS(honeycomb_locus(skew, TwistSet{}), NotHoneycomb);
    CHECK_THROWS_AS(hyp_alpha_flat(skew, {0, 0}), NotHoneycomb);
    TropicalCurve c3 = honeycomb(3);
    Gf2Subspace adm = adm_space(c3), div = div_space(c3);
    for (const auto& v : adm.basis())
        if (!div.contains(v)) {
            CHECK_THROWS_AS(honeycomb_locus(c3, TwistSet::from_vector(c3, v)), NotDividing);
            break;
        }
}

TEST_CASE("multi-bridges") {
    CHECK(multi_bridges(honeycomb(4)).size() == 9);
    auto b2 = multi_bridges(honeycomb(2));
    REQUIRE(b2.size() == 3);
    for (const auto& b : b2) CHECK(b.edges.size() == 1);
    for (int d = 2; d <= 7; ++d) {
        TropicalCurve c = honeycomb(d);
        auto bridges = multi_bridges(c);
        REQUIRE(static_cast<int>(bridges.size()) == 3 * (d - 1));
        std::set<int> seen;
        std::vector<Gf2Vector> vecs;
        for (const auto& b : bridges) {
            for (int e : b.edges) CHECK(seen.insert(e).second);
            for (int e : b.edges) CHECK((c.edge(e).direction == b.direction || c.edge(e).direction == -b.direction));
            vecs.push_back(b.vector(c));
            CHECK(div_space(c).contains(b.vector(c)));
            CHECK(is_admissible(c, TwistSet::from_edges(c, b.edges)));
        }
        Gf2Subspace span = Gf2Subspace::span(c.bounded_edges().size(), vecs);
        CHECK(static_cast<int>(span.dim()) == 3 * (d - 1));
        CHECK(span.dim() == div_space(c).dim());
    }
    CHECK(bridge(honeycomb(4), DualLineKind::Diagonal, 3).size() == 3);
    CHECK(multi_bridges(honeycomb(4))[0].dual_line() == "x=1");
}

TEST_CASE("hyperbolicity flats") {
    TropicalCurve c = honeycomb(4);
    HypAlphaFlat f11 = hyp_alpha_flat(c, {1, 1});
    CHECK(f11.codim() == 1);
    REQUIRE(f11.constraining.size() == 1);
    CHECK(f11.constraining[0].line == DualLineKind::Diagonal);
    CHECK(f11.constraining[0].level == 3);
    CHECK(f11.directions.dim() == 8);
    HypAlphaFlat f00 = hyp_alpha_flat(c, {0, 0});
    CHECK(f00.codim() == 3);
    for (const auto& b : f00.constraining) CHECK(b.line == DualLineKind::Diagonal);
    CHECK(f00.directions.dim() == 9 - 3);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        TwistSet t = random_dividing(c, rng);
        auto locus = honeycomb_locus(c, t);
        for (const auto& alpha : c.dual().points) {
            HypAlphaFlat f = hyp_alpha_flat(c, alpha);
            CHECK(f.codim() + f.directions.dim() == div_space(c).dim());
            CHECK(f.contains(t.vector()) == (locus.count(alpha) > 0));
        }
    }
}

TEST_CASE("three loci agree on random dividing twist sets") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        TropicalCurve c = honeycomb(1 + trial % 5);
        TwistSet t = random_dividing(c, rng);
        HyperbolicityReport r = hyperbolicity_locus(c, phase_from_twists(c, t));
        CHECK(r.methods_agree());
        CHECK(r.locus_pointwise == honeycomb_locus(c, t));
        CHECK(r.locus_pointwise == census_locus(c, t));
        CHECK(r.locus_pointwise.empty() != r.hyperbolic);
        CHECK(r.hyperbolic == is_hyperbolic(c, t).hyperbolic);
    }
}

TEST_CASE("locus non-empty iff hyperbolic on general curves") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 15; ++trial) {
        TropicalCurve c = random_curve(1 + trial % 4, rng);
        RealPhaseStructure p = phase_from_signs(c, random_signs(c, rng));
        HyperbolicityReport r = hyperbolicity_locus(c, p);
        CHECK(r.locus_pointwise.empty() != r.hyperbolic);
        CHECK(r.methods_agree());
    }
}

TEST_CASE("adding a disjoint dividing set keeps hyperbolicity") {
    std::mt19937 rng(444);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        TropicalCurve c = honeycomb(2 + trial % 4);
        TwistSet t = random_dividing(c, rng), u = random_dividing(c, rng);
        if (!is_hyperbolic(c, t).hyperbolic) continue;
        bool disjoint = (t.vector() & u.vector()).is_zero();
        if (!disjoint) continue;
        CHECK(is_hyperbolic(c, TwistSet::from_vector(c, t.vector() ^ u.vector())).hyperbolic);
        ++checked;
    }
    CHECK(checked > 10);
}
