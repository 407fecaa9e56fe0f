#include "lensbound/plot.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace lensbound {

namespace {

constexpr double kCenter = 320.0;
constexpr double kRadius = 290.0;

struct Point {
    double x;
    double y;
};

Point boundary_point(const Slope& s, double radius) {
    double theta = s.is_infinite()
                       ? std::numbers::pi
                       : 2.0 * std::atan(static_cast<double>(s.num) / static_cast<double>(s.den));
    // SVG y grows downward; negate to keep counterclockwise visually ccw.
    return {kCenter + radius * std::cos(theta), kCenter - radius * std::sin(theta)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Arc orthogonal to the boundary circle through two boundary points, as
// an SVG path command; falls back to a chord for (nearly) antipodal
// endpoints, where the geodesic is a diameter.
std::string geodesic(const Point& a, const Point& b) {
    double ux = (a.x - kCenter) / kRadius, uy = (a.y - kCenter) / kRadius;
    double vx = (b.x - kCenter) / kRadius, vy = (b.y - kCenter) / kRadius;
    double det = ux * vy - uy * vx;
    std::string move = "M " + fmt(a.x) + " " + fmt(a.y) + " ";
    if (std::fabs(det) < 1e-9) return move + "L " + fmt(b.x) + " " + fmt(b.y);
    // Solve e.u = 1, e.v = 1 for the orthogonal-circle center (unit scale).
    double ex = (vy - uy) / det;
    double ey = (ux - vx) / det;
    double r = kRadius * std::sqrt(ex * ex + ey * ey - 1.0);
    Point center{kCenter + kRadius * ex, kCenter + kRadius * ey};
    double cross = (a.x - center.x) * (b.y - center.y) - (a.y - center.y) * (b.x - center.x);
    const char* sweep = cross > 0 ? "1" : "0";
    return move + "A " + fmt(r) + " " + fmt(r) + " 0 0 " + sweep + " " + fmt(b.x) + " " +
           fmt(b.y);
}

}  // namespace

std::string farey_path_svg(const FareyPath& path) {
    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
        "viewBox=\"0 0 640 640\">\n"
        "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n"
        "<circle cx=\"320\" cy=\"320\" r=\"290\" fill=\"none\" stroke=\"#888\" "
        "stroke-width=\"1\"/>\n";

    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        Point a = boundary_point(path.vertices[i], kRadius);
        Point b = boundary_point(path.vertices[i + 1], kRadius);
        svg += "<path d=\"" + geodesic(a, b) +
               "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
    }
    for (const Slope& s : path.vertices) {
        Point p = boundary_point(s, kRadius);
        Point label = boundary_point(s, kRadius + 22.0);
        svg += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) +
               "\" r=\"4\" fill=\"#b02318\"/>\n";
        svg += "<text x=\"" + fmt(label.x) + "\" y=\"" + fmt(label.y) +
               "\" font-size=\"13\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               s.str() + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace lensbound
