#pragma once

#include "tropreal/base.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace tropreal {

// Max-plus polynomial max over the support of (a_ij + i*x + j*y).
struct TropicalPolynomial {
    std::map<LatticePoint, Rational> coefficients;

    Rational evaluate(const Point& p) const;
};

struct DualEdge {
    LatticePoint a;  // a < b
    LatticePoint b;
    std::array<int, 2> cells{-1, -1};  // second is -1 on the boundary of the polygon
    bool interior() const { return cells[1] >= 0; }
};

struct DualCell {
    std::array<LatticePoint, 3> corners;  // sorted
    std::array<int, 3> edges;             // dual edge opposite each corner
};

struct DualSubdivision {
    std::vector<LatticePoint> polygon;  // hull vertices, counter-clockwise
    std::vector<LatticePoint> points;   // every lattice point of the polygon, sorted
    std::vector<DualCell> cells;
    std::vector<DualEdge> edges;        // sorted by (a, b)
    long twice_area = 0;

    bool contains(const LatticePoint& p) const;
    bool on_boundary(const LatticePoint& p) const;
    // Index into edges, or -1.
    int edge_between(const LatticePoint& a, const LatticePoint& b) const;
};

struct CurveVertex {
    Point position;
    int cell = -1;
    std::array<int, 3> edges{};  // edge ids, same order as the cell's edges
};

// Edge ids coincide with dual edge ids.
struct CurveEdge {
    int tail = -1;  // vertex index
    int head = -1;  // vertex index, or -1 for a ray
    IntVec direction;  // primitive; tail to head, or outward along a ray
    int dual_edge = -1;
    bool bounded() const { return head >= 0; }
};

struct PrimitiveCycle {
    LatticePoint center;
    std::vector<int> edges;  // sorted edge ids
};

struct ComplementComponent {
    LatticePoint dual_point;
    bool bounded = false;
    std::vector<int> boundary_edges;  // sorted edge ids
};

class TropicalCurve {
public:
    const TropicalPolynomial& polynomial() const { return poly_; }
    const DualSubdivision& dual() const { return dual_; }
    const std::vector<CurveVertex>& vertices() const { return vertices_; }
    const std::vector<CurveEdge>& edges() const { return edges_; }
    const CurveEdge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
    std::optional<int> degree() const { return degree_; }
    int require_degree() const;

    // Bounded edges in increasing id order; position is the GF(2) coordinate.
    const std::vector<int>& bounded_edges() const { return bounded_; }
    // GF(2) coordinate of a bounded edge, or -1 for a ray.
    int bounded_index(int edge_id) const { return bounded_index_.at(static_cast<std::size_t>(edge_id)); }

    // Vertex at the other end of a bounded edge.
    int other_end(int edge_id, int vertex) const;
    // Primitive direction of the edge leaving the given endpoint.
    IntVec outgoing(int edge_id, int vertex) const;
    // Exact length parameter: head = tail + length * direction.
    Rational length(int edge_id) const;

    bool is_honeycomb() const;
    std::vector<PrimitiveCycle> primitive_cycles() const;
    std::vector<ComplementComponent> complement_components() const;

    // Same curve shifted by (dx, dy); coefficients adjusted accordingly.
    TropicalCurve translated(const Rational& dx, const Rational& dy) const;

    friend TropicalCurve curve_from_polynomial(const TropicalPolynomial& poly);

private:
    TropicalPolynomial poly_;
    DualSubdivision dual_;
    std::vector<CurveVertex> vertices_;
    std::vector<CurveEdge> edges_;
    std::vector<int> bounded_;
    std::vector<int> bounded_index_;
    std::optional<int> degree_;
};

TropicalCurve curve_from_polynomial(const TropicalPolynomial& poly);
TropicalPolynomial honeycomb_polynomial(int d);
TropicalCurve honeycomb(int d);

// Convex hull of lattice points, counter-clockwise, collinear points dropped.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts);

}  // namespace tropreal
