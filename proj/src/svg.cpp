#include "linarr/svg.hpp"

#include "linarr/errors.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

namespace linarr {

namespace {

struct Mapper {
    const SvgScene& sc;
    double px(double x) const { return (x - sc.x_min) / (sc.x_max - sc.x_min) * sc.width_px; }
    double py(double y) const { return (sc.y_max - y) / (sc.y_max - sc.y_min) * sc.height_px; }
};

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << v;
    return o.str();
}

// clip a*x + b*y + c = 0 to the viewport rectangle
std::optional<std::array<double, 4>> clip_line(double a, double b, double c, const SvgScene& sc) {
    std::vector<std::pair<double, double>> pts;
    auto push = [&](double x, double y) {
        for (auto& [px0, py0] : pts)
            if (std::abs(px0 - x) < 1e-9 && std::abs(py0 - y) < 1e-9) return;
        pts.emplace_back(x, y);
    };
    if (std::abs(b) > 1e-12) {
        for (double x : {sc.x_min, sc.x_max}) {
            double y = -(a * x + c) / b;
            if (y >= sc.y_min - 1e-9 && y <= sc.y_max + 1e-9) push(x, y);
        }
    }
    if (std::abs(a) > 1e-12) {
        for (double y : {sc.y_min, sc.y_max}) {
            double x = -(b * y + c) / a;
            if (x >= sc.x_min - 1e-9 && x <= sc.x_max + 1e-9) push(x, y);
        }
    }
    if (pts.size() < 2) return std::nullopt;
    return std::array<double, 4>{pts[0].first, pts[0].second, pts[1].first, pts[1].second};
}

// marching-squares sign-change contour of f(x, y, 1) = 0
void contour_segments(const HomPoly& f, const SvgScene& sc, const Mapper& map,
                      const std::string& style, std::ostringstream& out) {
    const int n = sc.grid;
    const double dx = (sc.x_max - sc.x_min) / n;
    const double dy = (sc.y_max - sc.y_min) / n;

    // double-precision evaluator on the chart z=1
    struct Term {
        double c;
        int a, b;
    };
    std::vector<Term> terms;
    for (int i = 0; i < static_cast<int>(f.coeffs().size()); ++i) {
        if (f.coeffs()[i] == 0) continue;
        auto [a, b, c] = monomial_exponents(f.degree(), i);
        terms.push_back({f.coeffs()[i].get_d(), a, b});
    }
    auto eval = [&](double x, double y) {
        double acc = 0;
        for (const Term& t : terms) acc += t.c * std::pow(x, t.a) * std::pow(y, t.b);
        return acc;
    };

    std::vector<std::vector<double>> grid(n + 1, std::vector<double>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) grid[i][j] = eval(sc.x_min + i * dx, sc.y_min + j * dy);

    auto interp = [&](double x0, double y0, double v0, double x1, double y1, double v1,
                      double& x, double& y) {
        const double t = v0 / (v0 - v1);
        x = x0 + t * (x1 - x0);
        y = y0 + t * (y1 - y0);
    };

    out << "  <path style=\"" << style << "\" d=\"";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x0 = sc.x_min + i * dx, y0 = sc.y_min + j * dy;
            const double x1 = x0 + dx, y1 = y0 + dy;
            const double v00 = grid[i][j], v10 = grid[i + 1][j];
            const double v01 = grid[i][j + 1], v11 = grid[i + 1][j + 1];
            std::vector<std::pair<double, double>> hits;
            double hx, hy;
            if ((v00 < 0) != (v10 < 0)) { interp(x0, y0, v00, x1, y0, v10, hx, hy); hits.emplace_back(hx, hy); }
            if ((v10 < 0) != (v11 < 0)) { interp(x1, y0, v10, x1, y1, v11, hx, hy); hits.emplace_back(hx, hy); }
            if ((v01 < 0) != (v11 < 0)) { interp(x0, y1, v01, x1, y1, v11, hx, hy); hits.emplace_back(hx, hy); }
            if ((v00 < 0) != (v01 < 0)) { interp(x0, y0, v00, x0, y1, v01, hx, hy); hits.emplace_back(hx, hy); }
            if (hits.size() == 2)
                out << "M" << fmt(map.px(hits[0].first)) << " " << fmt(map.py(hits[0].second))
                    << "L" << fmt(map.px(hits[1].first)) << " " << fmt(map.py(hits[1].second));
        }
    out << "\"/>\n";
}

} // namespace

std::string render_svg(const SvgScene& sc) {
    if (!(sc.x_max > sc.x_min) || !(sc.y_max > sc.y_min))
        throw DimensionMismatch("svg viewport is empty");
    Mapper map{sc};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << sc.width_px << "\" height=\""
        << sc.height_px << "\" viewBox=\"0 0 " << sc.width_px << " " << sc.height_px << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (sc.arrangement) {
        for (const LinearForm& l : sc.arrangement->lines()) {
            const double a = l.coeffs[0].get_d(), b = l.coeffs[1].get_d(), c = l.coeffs[2].get_d();
            if (std::abs(a) < 1e-12 && std::abs(b) < 1e-12) {
                out << "  <!-- line at infinity z = 0 omitted in the z = 1 chart -->\n";
                continue;
            }
            if (auto seg = clip_line(a, b, c, sc))
                out << "  <line x1=\"" << fmt(map.px((*seg)[0])) << "\" y1=\"" << fmt(map.py((*seg)[1]))
                    << "\" x2=\"" << fmt(map.px((*seg)[2])) << "\" y2=\"" << fmt(map.py((*seg)[3]))
                    << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"2,4\"/>\n";
        }
    }
    if (sc.conic)
        contour_segments(*sc.conic, sc, map,
                         "stroke:red;stroke-width:1.4;fill:none;stroke-dasharray:8,6", out);
    if (sc.quartic)
        contour_segments(*sc.quartic, sc, map, "stroke:green;stroke-width:1.6;fill:none", out);
    if (sc.pascal) {
        const double a = sc.pascal->coeffs[0].get_d(), b = sc.pascal->coeffs[1].get_d(),
                     c = sc.pascal->coeffs[2].get_d();
        if (auto seg = clip_line(a, b, c, sc))
            out << "  <line x1=\"" << fmt(map.px((*seg)[0])) << "\" y1=\"" << fmt(map.py((*seg)[1]))
                << "\" x2=\"" << fmt(map.px((*seg)[2])) << "\" y2=\"" << fmt(map.py((*seg)[3]))
                << "\" stroke=\"green\" stroke-width=\"1.6\"/>\n";
    }
    if (sc.hexagon) {
        for (const ProjPoint& p : sc.hexagon->vertices()) {
            const double z = p.coords[2].get_d();
            if (std::abs(z) < 1e-12) continue;
            out << "  <circle cx=\"" << fmt(map.px(p.coords[0].get_d() / z)) << "\" cy=\""
                << fmt(map.py(p.coords[1].get_d() / z)) << "\" r=\"3\" fill=\"black\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

void write_svg(const SvgScene& scene, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << render_svg(scene);
}

} // namespace linarr
