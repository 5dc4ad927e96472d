#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <set>

using namespace tropreal;
using fixtures::binom;
using fixtures::from_coefficients;

namespace {

std::multiset<IntVec> ray_directions(const TropicalCurve& c) {
    std::multiset<IntVec> out;
    for (const auto& e : c.edges())
        if (!e.bounded()) out.insert(e.direction);
    return out;
}

// Every vertex is where exactly its cell's three monomials attain the maximum.
void check_vertices_by_evaluation(const TropicalCurve& c) {
    const auto& poly = c.polynomial();
    for (const auto& v : c.vertices()) {
        const auto& corners = c.dual().cells[static_cast<std::size_t>(v.cell)].corners;
        Rational top = poly.evaluate(v.position);
        for (const auto& [p, a] : poly.coefficients) {
            Rational value = a + p.i * v.position.x + p.j * v.position.y;
            bool corner = std::find(corners.begin(), corners.end(), p) != corners.end();
            if (corner) REQUIRE(value == top);
            else REQUIRE(value < top);
        }
    }
}

void check_structure(const TropicalCurve& c) {
    REQUIRE(static_cast<long>(c.vertices().size()) == c.dual().twice_area);
    for (std::size_t v = 0; v < c.vertices().size(); ++v) {
        IntVec sum;
        for (int e : c.vertices()[v].edges) sum = sum + c.outgoing(e, static_cast<int>(v));
        REQUIRE(sum == IntVec{0, 0});
    }
    for (std::size_t id = 0; id < c.edges().size(); ++id) {
        const auto& de = c.dual().edges[id];
        IntVec dual_dir = de.b - de.a;
        REQUIRE(det(c.edges()[id].direction, dual_dir) != 0);
        REQUIRE(c.edges()[id].direction.x * dual_dir.x + c.edges()[id].direction.y * dual_dir.y == 0);
        REQUIRE(c.edges()[id].bounded() == de.interior());
        if (c.edges()[id].bounded()) REQUIRE(c.length(static_cast<int>(id)) > 0);
    }
    long area = 0;
    for (const auto& cell : c.dual().cells) {
        const auto& k = cell.corners;
        area += std::abs(det(k[1] - k[0], k[2] - k[0]));
    }
    REQUIRE(area == c.dual().twice_area);
}

// The cycle's edges form one closed loop: every touched vertex has degree two and the edges are connected.
bool single_closed_cycle(const TropicalCurve& c, const std::vector<int>& edges) {
    std::map<int, int> degree;
    std::map<int, std::vector<int>> adj;
    for (int e : edges) {
        const auto& ed = c.edge(e);
        if (!ed.bounded()) return false;
        ++degree[ed.tail], ++degree[ed.head];
        adj[ed.tail].push_back(ed.head);
        adj[ed.head].push_back(ed.tail);
    }
    for (const auto& [v, k] : degree)
        if (k != 2) return false;
    std::set<int> seen;
    std::vector<int> stack{degree.begin()->first};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (int w : adj[v]) stack.push_back(w);
    }
    return seen.size() == degree.size();
}

}  // namespace

TEST_CASE("max(0, x, y) is a single vertex at the origin") {
    TropicalCurve c = from_coefficients({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}});
    REQUIRE(c.vertices().size() == 1);
    CHECK(c.vertices()[0].position == Point{0, 0});
    CHECK(c.bounded_edges().empty());
    CHECK(ray_directions(c) == std::multiset<IntVec>{{-1, 0}, {0, -1}, {1, 1}});
    CHECK(c.degree() == 1);
}

TEST_CASE("quadratic lift on the degree-2 triangle") {
    TropicalCurve c = honeycomb(2);
    CHECK(c.vertices().size() == 4);
    CHECK(c.bounded_edges().size() == 3);
    CHECK(c.edges().size() - c.bounded_edges().size() == 6);
    CHECK(c.dual().cells.size() == 4);
    check_structure(c);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(from_coefficients({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{2, 0}, 0}, {{1, 1}, 0}, {{0, 2}, 0}}),
                    SingularSubdivision);
    CHECK_THROWS_AS(from_coefficients({{{0, 0}, 0}, {{1, 1}, 0}, {{2, 2}, 0}}), DegeneratePolygon);
    CHECK_THROWS_AS(from_coefficients({{{0, 0}, 0}, {{2, 0}, 0}, {{0, 1}, 0}}), SingularSubdivision);
    CHECK_THROWS_AS(from_coefficients({}), DegeneratePolygon);
}

TEST_CASE("honeycomb examples") {
    CHECK(honeycomb(1).bounded_edges().empty());
    CHECK(honeycomb(1).primitive_cycles().empty());
    CHECK(honeycomb(4).bounded_edges().size() == 18);
    CHECK(honeycomb(6).primitive_cycles().size() == 10);
    for (int d = 1; d <= 7; ++d) {
        TropicalCurve c = honeycomb(d);
        CHECK(c.is_honeycomb());
        CHECK(c.degree() == d);
        for (const auto& e : c.edges()) {
            IntVec a{std::abs(e.direction.x), std::abs(e.direction.y)};
            bool ok = a == IntVec{1, 0} || a == IntVec{0, 1} || (e.direction.x == e.direction.y && a == IntVec{1, 1});
            CHECK(ok);
        }
    }
    CHECK_FALSE(fixtures::skew_conic().is_honeycomb());
}

TEST_CASE("primitive cycles") {
    CHECK(fixtures::skew_conic().primitive_cycles().empty());
    auto cyc3 = honeycomb(3).primitive_cycles();
    REQUIRE(cyc3.size() == 1);
    CHECK(cyc3[0].center == LatticePoint{1, 1});
    CHECK(cyc3[0].edges.size() == 6);
    for (int d = 2; d <= 7; ++d) {
        TropicalCurve c = honeycomb(d);
        auto cycles = c.primitive_cycles();
        REQUIRE(static_cast<long>(cycles.size()) == binom(d - 1, 2));
        for (const auto& g : cycles) {
            CHECK(g.edges.size() == 6);
            CHECK(single_closed_cycle(c, g.edges));
        }
    }
}

TEST_CASE("complement components") {
    auto count_bounded = [](const std::vector<ComplementComponent>& comps) {
        return std::count_if(comps.begin(), comps.end(), [](const auto& k) { return k.bounded; });
    };
    auto c1 = honeycomb(1).complement_components();
    CHECK(c1.size() == 3);
    CHECK(count_bounded(c1) == 0);
    auto c4 = honeycomb(4).complement_components();
    CHECK(c4.size() == 15);
    CHECK(count_bounded(c4) == 3);
    std::set<LatticePoint> inner;
    for (const auto& k : c4)
        if (k.bounded) inner.insert(k.dual_point);
    CHECK(inner == std::set<LatticePoint>{{1, 1}, {1, 2}, {2, 1}});
    auto c2 = honeycomb(2).complement_components();
    CHECK(c2.size() == 6);
    CHECK(count_bounded(c2) == 0);
    for (int d = 1; d <= 7; ++d) {
        auto comps = honeycomb(d).complement_components();
        CHECK(static_cast<long>(comps.size()) == binom(d + 2, 2));
        CHECK(count_bounded(comps) == binom(d - 1, 2));
        for (const auto& k : comps)
            if (k.bounded) CHECK(k.boundary_edges.size() == 6);
    }
    TropicalCurve square = from_coefficients({{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, -1}});
    CHECK_THROWS_AS(square.complement_components(), DegreeUnset);
    CHECK_FALSE(square.degree().has_value());
}

TEST_CASE("random lifts give correct regular subdivisions") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        TropicalCurve c = fixtures::random_coefficient_curve(deg(rng), rng);
        check_structure(c);
        check_vertices_by_evaluation(c);
    }
}

TEST_CASE("translation moves vertices and keeps combinatorics") {
    TropicalCurve c = honeycomb(3);
    TropicalCurve t = c.translated(Rational(1, 3), Rational(-5, 2));
    REQUIRE(t.vertices().size() == c.vertices().size());
    for (std::size_t v = 0; v < c.vertices().size(); ++v)
        CHECK(t.vertices()[v].position == Point{c.vertices()[v].position.x + Rational(1, 3),
                                                 c.vertices()[v].position.y - Rational(5, 2)});
    for (std::size_t id = 0; id < c.edges().size(); ++id) CHECK(t.edges()[id].direction == c.edges()[id].direction);
    check_vertices_by_evaluation(t);
}

TEST_CASE("parsing helpers") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK(parse_lattice_point(" ( 2 , 1 ) ") == LatticePoint{2, 1});
    CHECK_THROWS_AS(parse_lattice_point("2,1"), ParseError);
    CHECK(parse_z2pair("1,0") == Z2Pair::of(1, 0));
    CHECK(parse_z2pair("(0,1)") == Z2Pair::of(0, 1));
    CHECK_THROWS_AS(parse_z2pair("2,0"), ParseError);
}
