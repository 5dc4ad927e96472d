#include "tropreal/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace tropreal {

namespace {

constexpr double kPanel = 400.0;
constexpr double kMargin = 20.0;
constexpr int kSamples = 32;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

struct XY {
    double x, y;
};

XY to_xy(const Point& p) { return {p.x.get_d(), p.y.get_d()}; }

// Affine map from a world box onto a square panel, y pointing up.
struct Frame {
    double x0, y0, scale, left;
    XY operator()(XY p) const {
        return {left + kMargin + (p.x - x0) * scale, kPanel - kMargin - (p.y - y0) * scale};
    }
};

Frame fit(double xmin, double xmax, double ymin, double ymax, double left) {
    double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    double scale = (kPanel - 2 * kMargin) / span;
    double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
    return Frame{cx - span / 2, cy - span / 2, scale, left};
}

void polyline(std::ostringstream& out, const std::vector<XY>& pts, const std::string& cls, const std::string& extra = "") {
    out << "<polyline class=\"" << cls << "\"" << extra << " points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) out << (k ? " " : "") << num(pts[k].x) << "," << num(pts[k].y);
    out << "\"/>\n";
}

void polygon(std::ostringstream& out, const std::vector<XY>& pts, const std::string& cls, const std::string& extra = "") {
    out << "<polygon class=\"" << cls << "\"" << extra << " points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) out << (k ? " " : "") << num(pts[k].x) << "," << num(pts[k].y);
    out << "\"/>\n";
}

std::vector<XY> convex_hull_xy(std::vector<XY> pts) {
    std::sort(pts.begin(), pts.end(), [](XY a, XY b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (pts.size() < 3) return pts;
    auto cross = [](XY o, XY a, XY b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
    std::vector<XY> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

struct Geometry {
    double xmin, xmax, ymin, ymax, cx, cy, reach;
};

Geometry geometry(const TropicalCurve& curve) {
    Geometry g{0, 0, 0, 0, 0, 0, 0};
    bool first = true;
    for (const auto& v : curve.vertices()) {
        XY p = to_xy(v.position);
        if (first) {
            g.xmin = g.xmax = p.x;
            g.ymin = g.ymax = p.y;
            first = false;
        }
        g.xmin = std::min(g.xmin, p.x);
        g.xmax = std::max(g.xmax, p.x);
        g.ymin = std::min(g.ymin, p.y);
        g.ymax = std::max(g.ymax, p.y);
        g.cx += p.x;
        g.cy += p.y;
    }
    g.cx /= static_cast<double>(curve.vertices().size());
    g.cy /= static_cast<double>(curve.vertices().size());
    double pad = std::max(1.0, 0.25 * std::max(g.xmax - g.xmin, g.ymax - g.ymin));
    g.xmin -= pad;
    g.xmax += pad;
    g.ymin -= pad;
    g.ymax += pad;
    g.reach = 2 * std::max(g.xmax - g.xmin, g.ymax - g.ymin);
    return g;
}

// End points of an edge in world coordinates; rays are cut at a length beyond the frame.
std::pair<XY, XY> edge_ends(const TropicalCurve& curve, int id, double reach) {
    const auto& e = curve.edge(id);
    XY a = to_xy(curve.vertices()[static_cast<std::size_t>(e.tail)].position);
    if (e.bounded()) return {a, to_xy(curve.vertices()[static_cast<std::size_t>(e.head)].position)};
    double n = std::hypot(static_cast<double>(e.direction.x), static_cast<double>(e.direction.y));
    return {a, {a.x + reach * e.direction.x / n, a.y + reach * e.direction.y / n}};
}

void curve_layer(std::ostringstream& out, const TropicalCurve& curve, const RealPhaseStructure* phase,
                 const std::set<LatticePoint>& locus) {
    Geometry g = geometry(curve);
    Frame f = fit(g.xmin, g.xmax, g.ymin, g.ymax, 0);
    out << "<clipPath id=\"curve-clip\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(kPanel - 2 * kMargin) << "\" height=\"" << num(kPanel - 2 * kMargin) << "\"/></clipPath>\n";
    out << "<g id=\"curve\" class=\"layer\" clip-path=\"url(#curve-clip)\">\n";

    if (!locus.empty()) {
        out << "<g id=\"locus\">\n";
        for (const auto& alpha : locus) {
            std::vector<XY> pts;
            for (const auto& v : curve.vertices()) {
                const auto& cell = curve.dual().cells[static_cast<std::size_t>(v.cell)];
                if (std::find(cell.corners.begin(), cell.corners.end(), alpha) != cell.corners.end())
                    pts.push_back(to_xy(v.position));
            }
            for (std::size_t id = 0; id < curve.edges().size(); ++id) {
                const auto& de = curve.dual().edges[id];
                if (!curve.edges()[id].bounded() && (de.a == alpha || de.b == alpha))
                    pts.push_back(edge_ends(curve, static_cast<int>(id), g.reach).second);
            }
            std::vector<XY> screen;
            for (XY p : convex_hull_xy(pts)) screen.push_back(f(p));
            polygon(out, screen, "locus", " data-point=\"" + to_string(alpha) + "\"");
        }
        out << "</g>\n";
    }

    for (std::size_t id = 0; id < curve.edges().size(); ++id) {
        auto [a, b] = edge_ends(curve, static_cast<int>(id), g.reach);
        XY p = f(a), q = f(b);
        out << "<line class=\"edge " << (curve.edges()[id].bounded() ? "bounded" : "ray") << "\" data-edge=\"" << id
            << "\" x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(q.y)
            << "\"/>\n";
    }
    if (phase) {
        TwistSet twists = twists_from_phase(curve, *phase);
        for (int id : twists.edges()) {
            auto [a, b] = edge_ends(curve, id, g.reach);
            XY m = f({(a.x + b.x) / 2, (a.y + b.y) / 2});
            out << "<circle class=\"twist\" data-edge=\"" << id << "\" cx=\"" << num(m.x) << "\" cy=\"" << num(m.y)
                << "\" r=\"4.000\"/>\n";
        }
    }
    out << "</g>\n";
}

void dual_layer(std::ostringstream& out, const TropicalCurve& curve, const std::set<LatticePoint>& locus) {
    double xmax = 0, ymax = 0;
    for (const auto& p : curve.dual().points) {
        xmax = std::max(xmax, static_cast<double>(p.i));
        ymax = std::max(ymax, static_cast<double>(p.j));
    }
    Frame f = fit(-0.5, xmax + 0.5, -0.5, ymax + 0.5, kPanel);
    out << "<g id=\"dual\" class=\"layer\">\n";
    for (const auto& cell : curve.dual().cells) {
        std::vector<XY> pts;
        for (const auto& c : cell.corners) pts.push_back(f({static_cast<double>(c.i), static_cast<double>(c.j)}));
        polygon(out, pts, "cell");
    }
    for (const auto& p : curve.dual().points) {
        XY q = f({static_cast<double>(p.i), static_cast<double>(p.j)});
        out << "<circle class=\"lattice-point" << (locus.count(p) ? " in-locus" : "") << "\" data-point=\""
            << to_string(p) << "\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"3.000\"/>\n";
    }
    out << "</g>\n";
}

void quadrant_layer(std::ostringstream& out, const TropicalCurve& curve, const RealPhaseStructure& phase) {
    Geometry g = geometry(curve);
    double s = std::max(1.0, std::max(g.xmax - g.xmin, g.ymax - g.ymin) / 8);
    Frame f = fit(-1, 1, -1, 1, 2 * kPanel);
    auto moment = [&](XY p) {
        double ex = std::exp(std::clamp((p.x - g.cx) / s, -30.0, 30.0));
        double ey = std::exp(std::clamp((p.y - g.cy) / s, -30.0, 30.0));
        double z = 1 + ex + ey;
        return XY{ex / z, ey / z};
    };
    double reach = 40 * s + g.reach;
    out << "<g id=\"quadrants\" class=\"layer\">\n";
    polygon(out, {f({1, 0}), f({0, 1}), f({-1, 0}), f({0, -1})}, "rp2-outline");
    for (std::uint8_t b = 0; b < 4; ++b) {
        Z2Pair eps{b};
        double sx = eps.first() ? -1 : 1, sy = eps.second() ? -1 : 1;
        out << "<g class=\"quadrant\" data-eps=\"" << to_string(eps) << "\">\n";
        polygon(out, {f({0, 0}), f({sx, 0}), f({0, sy})}, "quadrant-outline");
        for (std::size_t id = 0; id < curve.edges().size(); ++id) {
            if (!phase.line(static_cast<int>(id)).contains(eps)) continue;
            auto [a, b2] = edge_ends(curve, static_cast<int>(id), reach);
            std::vector<XY> pts;
            for (int k = 0; k <= kSamples; ++k) {
                double t = static_cast<double>(k) / kSamples;
                XY m = moment({a.x + t * (b2.x - a.x), a.y + t * (b2.y - a.y)});
                pts.push_back(f({sx * m.x, sy * m.y}));
            }
            polyline(out, pts, "edge-copy", " data-edge=\"" + std::to_string(id) + "\"");
        }
        out << "</g>\n";
    }
    out << "</g>\n";
}

}  // namespace

std::string render_svg(const TropicalCurve& curve, const RealPhaseStructure* phase, const RenderOptions& options) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(3 * kPanel) << "\" height=\""
        << num(kPanel) << "\" viewBox=\"0 0 " << num(3 * kPanel) << " " << num(kPanel) << "\">\n";
    out << "<style>\n"
           ".edge{stroke:#000;stroke-width:1.5}\n"
           ".twist{fill:#1f4fd1}\n"
           ".locus{fill:#f2c94c;fill-opacity:0.5;stroke:none}\n"
           ".cell{fill:none;stroke:#555;stroke-width:1}\n"
           ".lattice-point{fill:#000}\n"
           ".in-locus{fill:#d18a00}\n"
           ".rp2-outline{fill:none;stroke:#888;stroke-width:1}\n"
           ".quadrant-outline{fill:none;stroke:#ccc;stroke-width:0.5}\n"
           ".edge-copy{fill:none;stroke:#b0211b;stroke-width:1.2}\n"
           "</style>\n";
    if (options.curve) curve_layer(out, curve, phase, options.locus);
    if (options.dual) dual_layer(out, curve, options.locus);
    if (options.quadrants && phase) quadrant_layer(out, curve, *phase);
    out << "</svg>\n";
    return out.str();
}

}  // namespace tropreal
