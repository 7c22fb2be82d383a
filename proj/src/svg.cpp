#include "hooke/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hooke {

namespace {

constexpr double kW = 800.0, kH = 600.0;

struct Frame {
    double x0, x1, y0, y1;  // world box
    double sx() const { return kW / (x1 - x0); }
    double sy() const { return kH / (y1 - y0); }
    double px(double x) const { return (x - x0) * sx(); }
    double py(double y) const { return kH - (y - y0) * sy(); }  // y up
};

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

void polyline(std::ostringstream& svg, const Frame& f,
              const std::vector<Vec2>& pts, const char* color, double width) {
    if (pts.size() < 2) return;
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << width << "\" points=\"";
    for (const Vec2& p : pts) svg << num(f.px(p.x)) << ',' << num(f.py(p.y)) << ' ';
    svg << "\"/>\n";
}

void dot(std::ostringstream& svg, const Frame& f, double x, double y,
         const char* color, double r = 3.0) {
    svg << "<circle cx=\"" << num(f.px(x)) << "\" cy=\"" << num(f.py(y))
        << "\" r=\"" << r << "\" fill=\"" << color << "\"/>\n";
}

void conic_curve(std::ostringstream& svg, const Frame& f, const BilliardTable& t,
                 double lambda, const char* color) {
    const ConicClass cls = classify_conic(t, lambda);
    switch (cls) {
        case ConicClass::DegenerateFocal: {
            auto [fp, fm] = t.foci();
            dot(svg, f, fp.x, fp.y, color);
            dot(svg, f, fm.x, fm.y, color);
            return;
        }
        case ConicClass::DegenerateMinorAxis: {
            polyline(svg, f, {{0.0, -std::sqrt(t.b())}, {0.0, std::sqrt(t.b())}},
                     color, 1.5);
            return;
        }
        case ConicClass::Hyperbola: {
            // Both branches, clipped to the frame height.
            const double ax = t.a() - lambda;        // > 0
            const double by = lambda - t.b();        // > 0
            const double ymax = std::max(std::abs(f.y0), std::abs(f.y1));
            for (int side : {-1, 1}) {
                std::vector<Vec2> pts;
                for (int k = 0; k <= 64; ++k) {
                    const double y = -ymax + 2.0 * ymax * k / 64.0;
                    const double x = side * std::sqrt(ax * (1.0 + y * y / by));
                    pts.push_back({x, y});
                }
                polyline(svg, f, pts, color, 1.5);
            }
            return;
        }
        default: {
            // Confocal ellipse.
            std::vector<Vec2> pts;
            const double rx = std::sqrt(t.a() - lambda);
            const double ry = std::sqrt(t.b() - lambda);
            for (int k = 0; k <= 128; ++k) {
                const double s = 2.0 * M_PI * k / 128.0;
                pts.push_back({rx * std::cos(s), ry * std::sin(s)});
            }
            polyline(svg, f, pts, color, 1.5);
            return;
        }
    }
}

std::string svg_open(double w, double h) {
    std::ostringstream ss;
    ss << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return ss.str();
}

}  // namespace

std::string trajectory_svg(const BilliardTable& table, const Trajectory& traj) {
    const double rx = std::sqrt(table.a()), ry = std::sqrt(table.b());
    const double mx = 0.15 * rx, my = 0.15 * ry;
    // Keep the world aspect ratio so circles look like circles.
    double hw = rx + mx, hh = ry + my;
    if (hw / kW * kH > hh) hh = hw / kW * kH; else hw = hh / kH * kW;
    const Frame f{-hw, hw, -hh, hh};

    std::ostringstream svg;
    svg << svg_open(kW, kH);

    std::vector<Vec2> wall;
    for (int k = 0; k <= 256; ++k) {
        wall.push_back(table.boundary_point(2.0 * M_PI * k / 256.0));
    }
    polyline(svg, f, wall, "black", 2.0);

    if (!traj.bounce_points.empty()) {
        const CausticPair cp = caustics(table, traj.bounce_points.front());
        conic_curve(svg, f, table, cp.lambda1, "#999999");
        conic_curve(svg, f, table, cp.lambda2, "#c03030");
    }

    for (const Arc& arc : traj.arcs) {
        std::vector<Vec2> pts;
        for (int k = 0; k <= 64; ++k) {
            pts.push_back(flow(table, arc.start, arc.duration * k / 64.0).xi);
        }
        polyline(svg, f, pts, "#2060b0", 1.0);
    }
    for (const PhasePoint& p : traj.bounce_points) {
        dot(svg, f, p.xi.x, p.xi.y, "#2060b0", 2.0);
    }

    svg << "</svg>\n";
    return svg.str();
}

std::string diagram_svg(const BilliardTable& table,
                        const std::vector<DiagramCsvRow>& rows) {
    const double a = table.a(), b = table.b(), s = table.sigma();
    double emax = s * (a + b);
    for (const DiagramCsvRow& r : rows) emax = std::max(emax, r.E);
    const Frame f{-0.05 * emax, 1.05 * emax, -0.12 * a, 1.1 * a};

    std::ostringstream svg;
    svg << svg_open(kW, kH);

    // Image region: lambda2 in [0, a], lambda2 + 2E/s >= a+b.
    const double e_top = 0.5 * s * b, e_bot = 0.5 * s * (a + b);
    svg << "<polygon fill=\"#e0e0e0\" stroke=\"none\" points=\""
        << num(f.px(e_top)) << ',' << num(f.py(a)) << ' '
        << num(f.px(emax)) << ',' << num(f.py(a)) << ' '
        << num(f.px(emax)) << ',' << num(f.py(0.0)) << ' '
        << num(f.px(e_bot)) << ',' << num(f.py(0.0)) << "\"/>\n";

    for (const DiagramCsvRow& r : rows) {
        if (r.kind == "sample") dot(svg, f, r.E, r.lambda2, "#2060b0", 1.2);
        else if (r.kind == "corner_sample") dot(svg, f, r.E, r.lambda2, "#c03030", 2.5);
    }
    // Critical half-lines and the diagram corners.
    polyline(svg, f, {{e_top, a}, {emax, a}}, "black", 2.0);
    polyline(svg, f, {{0.5 * s * a, b}, {emax, b}}, "#606060", 2.0);
    polyline(svg, f, {{e_bot, 0.0}, {emax, 0.0}}, "black", 2.0);
    polyline(svg, f, {{e_top, a}, {e_bot, 0.0}}, "#a0a0a0", 1.5);
    dot(svg, f, e_top, a, "black");
    dot(svg, f, 0.5 * s * a, b, "black");
    dot(svg, f, e_bot, 0.0, "black");

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hooke
