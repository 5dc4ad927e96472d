#include "tropreal/curve.hpp"

#include <algorithm>
#include <set>

namespace tropreal {

Rational TropicalPolynomial::evaluate(const Point& p) const {
    ensure(!coefficients.empty(), "evaluate on empty polynomial");
    std::optional<Rational> best;
    for (const auto& [m, a] : coefficients) {
        Rational v = a + m.i * p.x + m.j * p.y;
        if (!best || v > *best) best = v;
    }
    return *best;
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
        return det(a - o, b - o);
    };
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool DualSubdivision::contains(const LatticePoint& p) const {
    for (std::size_t k = 0; k < polygon.size(); ++k) {
        const auto& a = polygon[k];
        const auto& b = polygon[(k + 1) % polygon.size()];
        if (det(b - a, p - a) < 0) return false;
    }
    return true;
}

bool DualSubdivision::on_boundary(const LatticePoint& p) const {
    if (!contains(p)) return false;
    for (std::size_t k = 0; k < polygon.size(); ++k) {
        const auto& a = polygon[k];
        const auto& b = polygon[(k + 1) % polygon.size()];
        if (det(b - a, p - a) == 0) return true;
    }
    return false;
}

int DualSubdivision::edge_between(const LatticePoint& a, const LatticePoint& b) const {
    LatticePoint lo = std::min(a, b), hi = std::max(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{lo, hi},
                               [](const DualEdge& e, const std::pair<LatticePoint, LatticePoint>& key) {
                                   return std::pair{e.a, e.b} < key;
                               });
    if (it == edges.end() || it->a != lo || it->b != hi) return -1;
    return static_cast<int>(it - edges.begin());
}

int TropicalCurve::require_degree() const {
    if (!degree_) throw DegreeUnset("curve has no degree: Newton polygon is not a standard simplex");
    return *degree_;
}

int TropicalCurve::other_end(int edge_id, int vertex) const {
    const auto& e = edge(edge_id);
    ensure(e.bounded(), "other_end on a ray");
    return e.tail == vertex ? e.head : e.tail;
}

IntVec TropicalCurve::outgoing(int edge_id, int vertex) const {
    const auto& e = edge(edge_id);
    if (e.tail == vertex) return e.direction;
    ensure(e.head == vertex, "vertex is not an endpoint");
    return -e.direction;
}

Rational TropicalCurve::length(int edge_id) const {
    const auto& e = edge(edge_id);
    ensure(e.bounded(), "length of a ray");
    const auto& p = vertices_[static_cast<std::size_t>(e.tail)].position;
    const auto& q = vertices_[static_cast<std::size_t>(e.head)].position;
    return e.direction.x != 0 ? Rational((q.x - p.x) / e.direction.x) : Rational((q.y - p.y) / e.direction.y);
}

bool TropicalCurve::is_honeycomb() const {
    if (!degree_) return false;
    for (const auto& e : edges_) {
        IntVec d = e.direction;
        if (d.x < 0 || (d.x == 0 && d.y < 0)) d = -d;
        if (d != IntVec{1, 0} && d != IntVec{0, 1} && d != IntVec{1, 1}) return false;
    }
    return true;
}

std::vector<PrimitiveCycle> TropicalCurve::primitive_cycles() const {
    std::vector<PrimitiveCycle> out;
    for (const auto& p : dual_.points) {
        if (dual_.on_boundary(p)) continue;
        PrimitiveCycle c{p, {}};
        for (std::size_t k = 0; k < dual_.edges.size(); ++k)
            if (dual_.edges[k].a == p || dual_.edges[k].b == p) c.edges.push_back(static_cast<int>(k));
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ComplementComponent> TropicalCurve::complement_components() const {
    require_degree();
    std::vector<ComplementComponent> out;
    for (const auto& p : dual_.points) {
        ComplementComponent c{p, !dual_.on_boundary(p), {}};
        for (std::size_t k = 0; k < dual_.edges.size(); ++k)
            if (dual_.edges[k].a == p || dual_.edges[k].b == p) c.boundary_edges.push_back(static_cast<int>(k));
        out.push_back(std::move(c));
    }
    return out;
}

TropicalCurve TropicalCurve::translated(const Rational& dx, const Rational& dy) const {
    TropicalCurve c = *this;
    for (auto& [m, a] : c.poly_.coefficients) a -= m.i * dx + m.j * dy;
    for (auto& v : c.vertices_) {
        v.position.x += dx;
        v.position.y += dy;
    }
    return c;
}

namespace {

struct Facet {
    std::array<LatticePoint, 3> corners;
    Point vertex;
};

// The upper-hull facet over a unimodular triangle, if every other lifted point lies strictly below.
std::optional<Facet> facet_over(const TropicalPolynomial& poly, const LatticePoint& p, const LatticePoint& q,
                                const LatticePoint& r) {
    const auto& coef = poly.coefficients;
    IntVec u = q - p, w = r - p;
    long D = det(u, w);
    Rational dq = coef.at(q) - coef.at(p);
    Rational dr = coef.at(r) - coef.at(p);
    // Plane h(s) = a_p + slope_x * (s - p).i + slope_y * (s - p).j.
    Rational slope_x = (dq * w.y - dr * u.y) / D;
    Rational slope_y = (dr * u.x - dq * w.x) / D;
    const Rational& ap = coef.at(p);
    for (const auto& [s, a] : coef) {
        if (s == p || s == q || s == r) continue;
        Rational h = ap + slope_x * (s.i - p.i) + slope_y * (s.j - p.j);
        if (a >= h) return std::nullopt;
    }
    Facet f{{p, q, r}, {-slope_x, -slope_y}};
    std::sort(f.corners.begin(), f.corners.end());
    return f;
}

}  // namespace

TropicalCurve curve_from_polynomial(const TropicalPolynomial& poly) {
    if (poly.coefficients.empty()) throw DegeneratePolygon("empty support");
    std::vector<LatticePoint> support;
    for (const auto& [m, a] : poly.coefficients) {
        if (m.i < 0 || m.j < 0) throw ValidationError("support point " + to_string(m) + " has a negative exponent");
        support.push_back(m);
    }

    TropicalCurve c;
    c.poly_ = poly;
    for (auto& [m, a] : c.poly_.coefficients) a.canonicalize();
    DualSubdivision& dual = c.dual_;
    dual.polygon = convex_hull(support);
    if (dual.polygon.size() < 3) throw DegeneratePolygon("convex hull of the support is not 2-dimensional");
    for (std::size_t k = 0; k < dual.polygon.size(); ++k) {
        const auto& a = dual.polygon[k];
        const auto& b = dual.polygon[(k + 1) % dual.polygon.size()];
        dual.twice_area += static_cast<long>(a.i) * b.j - static_cast<long>(b.i) * a.j;
    }

    int max_i = 0, max_j = 0;
    for (const auto& p : dual.polygon) {
        max_i = std::max(max_i, p.i);
        max_j = std::max(max_j, p.j);
    }
    for (int i = 0; i <= max_i; ++i)
        for (int j = 0; j <= max_j; ++j)
            if (dual.contains({i, j})) dual.points.push_back({i, j});
    for (const auto& p : dual.points)
        if (!poly.coefficients.count(p))
            throw SingularSubdivision("lattice point " + to_string(p) + " is not a vertex of the subdivision");

    const auto& pts = dual.points;
    std::vector<Facet> facets;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            IntVec u = pts[b] - pts[a];
            for (std::size_t r = b + 1; r < pts.size(); ++r) {
                long D = det(u, pts[r] - pts[a]);
                if (D != 1 && D != -1) continue;
                if (auto f = facet_over(c.poly_, pts[a], pts[b], pts[r])) facets.push_back(*f);
            }
        }
    if (static_cast<long>(facets.size()) != dual.twice_area)
        throw SingularSubdivision("subdivision has a cell of area greater than 1/2");

    std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) { return x.corners < y.corners; });

    std::map<std::pair<LatticePoint, LatticePoint>, std::vector<int>> incidence;
    for (std::size_t f = 0; f < facets.size(); ++f) {
        const auto& t = facets[f].corners;
        for (int k = 0; k < 3; ++k) {
            LatticePoint x = t[(k + 1) % 3], y = t[(k + 2) % 3];
            incidence[{std::min(x, y), std::max(x, y)}].push_back(static_cast<int>(f));
        }
    }
    for (const auto& [key, cells] : incidence) {
        ensure(cells.size() <= 2, "dual edge in more than two cells");
        DualEdge e{key.first, key.second, {cells[0], cells.size() == 2 ? cells[1] : -1}};
        dual.edges.push_back(e);
    }

    for (std::size_t f = 0; f < facets.size(); ++f) {
        DualCell cell{facets[f].corners, {}};
        CurveVertex v{facets[f].vertex, static_cast<int>(f), {}};
        for (int k = 0; k < 3; ++k) {
            int id = dual.edge_between(cell.corners[(k + 1) % 3], cell.corners[(k + 2) % 3]);
            cell.edges[static_cast<std::size_t>(k)] = id;
            v.edges[static_cast<std::size_t>(k)] = id;
        }
        dual.cells.push_back(cell);
        c.vertices_.push_back(v);
    }

    c.bounded_index_.assign(dual.edges.size(), -1);
    for (std::size_t k = 0; k < dual.edges.size(); ++k) {
        const DualEdge& de = dual.edges[k];
        IntVec normal = rot90(de.b - de.a);
        ensure(primitive(normal) == normal, "non-primitive dual edge in a unimodular cell");
        CurveEdge e;
        e.dual_edge = static_cast<int>(k);
        e.tail = de.cells[0];
        if (de.interior()) {
            e.head = de.cells[1];
            const Point& p = c.vertices_[static_cast<std::size_t>(e.tail)].position;
            const Point& q = c.vertices_[static_cast<std::size_t>(e.head)].position;
            Rational along_normal = (q.x - p.x) * normal.x + (q.y - p.y) * normal.y;
            ensure(along_normal != 0, "adjacent cells share a curve vertex");
            e.direction = along_normal > 0 ? normal : -normal;
            c.bounded_index_[k] = static_cast<int>(c.bounded_.size());
            c.bounded_.push_back(static_cast<int>(k));
        } else {
            const auto& corners = dual.cells[static_cast<std::size_t>(e.tail)].corners;
            LatticePoint third{};
            for (const auto& x : corners)
                if (x != de.a && x != de.b) third = x;
            IntVec inward = third - de.a;
            e.direction = (normal.x * inward.x + normal.y * inward.y) < 0 ? normal : -normal;
        }
        c.edges_.push_back(e);
    }

    for (std::size_t v = 0; v < c.vertices_.size(); ++v) {
        IntVec sum{0, 0};
        for (int id : c.vertices_[v].edges) sum = sum + c.outgoing(id, static_cast<int>(v));
        ensure(sum == IntVec{0, 0}, "balancing fails at a vertex");
    }

    const auto& hull = dual.polygon;
    if (hull.size() == 3 && hull[0] == LatticePoint{0, 0} && hull[1].j == 0 && hull[1].i > 0 &&
        hull[2] == LatticePoint{0, hull[1].i})
        c.degree_ = hull[1].i;
    return c;
}

TropicalPolynomial honeycomb_polynomial(int d) {
    if (d < 1) throw ValidationError("honeycomb degree must be positive");
    TropicalPolynomial p;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) p.coefficients[{i, j}] = -(i * i + i * j + j * j);
    return p;
}

TropicalCurve honeycomb(int d) {
    TropicalCurve c = curve_from_polynomial(honeycomb_polynomial(d));
    ensure(c.is_honeycomb(), "honeycomb lift produced a non-honeycomb curve");
    return c;
}

}  // namespace tropreal
