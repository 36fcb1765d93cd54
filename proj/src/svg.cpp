#include "hypcr/svg.hpp"

#include <cmath>
#include <sstream>

namespace hypcr {

namespace {

constexpr double kSize = 480.0;

// map the unit disc to viewport coordinates
double vx(double x) { return kSize / 2.0 + x * (kSize / 2.0 - 20.0); }
double vy(double y) { return kSize / 2.0 - y * (kSize / 2.0 - 20.0); }

std::string header() {
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << int(kSize) << "\" height=\""
      << int(kSize) << "\" viewBox=\"0 0 " << int(kSize) << ' ' << int(kSize) << "\">\n";
    return s.str();
}

void disc_outline(std::ostringstream& s) {
    s << "<circle cx=\"" << vx(0) << "\" cy=\"" << vy(0) << "\" r=\"" << (kSize / 2.0 - 20.0)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
}

// geodesic between boundary angles p and q: circular arc orthogonal to the
// unit circle, or a diameter when the angles are antipodal
void geodesic_path(std::ostringstream& s, double p, double q) {
    cplx u = std::polar(1.0, p), v = std::polar(1.0, q);
    double denom = 1.0 + std::real(u * std::conj(v));
    if (std::abs(denom) < 1e-9) {  // antipodal: straight diameter
        s << "<line x1=\"" << vx(u.real()) << "\" y1=\"" << vy(u.imag()) << "\" x2=\""
          << vx(v.real()) << "\" y2=\"" << vy(v.imag())
          << "\" stroke=\"steelblue\" stroke-width=\"1.2\" fill=\"none\"/>\n";
        return;
    }
    cplx center = (u + v) / denom;
    double radius = std::sqrt(std::norm(center) - 1.0);
    double scale = kSize / 2.0 - 20.0;
    // sweep so that the arc bulges toward the origin
    double cross = u.real() * v.imag() - u.imag() * v.real();
    int sweep = cross > 0 ? 1 : 0;
    s << "<path d=\"M " << vx(u.real()) << ' ' << vy(u.imag()) << " A " << radius * scale
      << ' ' << radius * scale << " 0 0 " << sweep << ' ' << vx(v.real()) << ' '
      << vy(v.imag()) << "\" stroke=\"steelblue\" stroke-width=\"1.2\" fill=\"none\"/>\n";
}

}  // namespace

std::string svg_disc_with_points(
    const std::vector<BoundaryPoint>& points,
    const std::vector<std::pair<BoundaryPoint, BoundaryPoint>>& geodesics) {
    std::ostringstream s;
    s << header();
    disc_outline(s);
    for (const auto& [p, q] : geodesics) geodesic_path(s, p.angle, q.angle);
    for (const BoundaryPoint& p : points) {
        cplx z = p.point();
        s << "<circle cx=\"" << vx(z.real()) << "\" cy=\"" << vy(z.imag())
          << "\" r=\"4\" fill=\"crimson\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string svg_grid_image(const std::vector<cplx>& values, int stride) {
    std::ostringstream s;
    s << header();
    disc_outline(s);
    if (stride > 0) {
        // draw the rows of the grid image as polylines
        for (std::size_t row = 0; row * stride < values.size(); ++row) {
            s << "<polyline fill=\"none\" stroke=\"seagreen\" stroke-width=\"0.8\" points=\"";
            for (int k = 0; k < stride; ++k) {
                std::size_t idx = row * stride + k;
                if (idx >= values.size()) break;
                s << vx(values[idx].real()) << ',' << vy(values[idx].imag()) << ' ';
            }
            s << "\"/>\n";
        }
    }
    for (const cplx& w : values)
        s << "<circle cx=\"" << vx(w.real()) << "\" cy=\"" << vy(w.imag())
          << "\" r=\"1.2\" fill=\"seagreen\"/>\n";
    s << "</svg>\n";
    return s.str();
}

std::string svg_curve(const std::vector<double>& xs, const std::vector<double>& ys,
                      const std::string& xlabel, const std::string& ylabel) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("svg_curve: need matching xs/ys with >= 2 points");
    double xmin = xs.front(), xmax = xs.front(), ymin = ys.front(), ymax = ys.front();
    for (double x : xs) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
    }
    for (double y : ys) {
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    auto px = [&](double x) { return 50.0 + (x - xmin) / (xmax - xmin) * (kSize - 80.0); };
    auto py = [&](double y) { return kSize - 40.0 - (y - ymin) / (ymax - ymin) * (kSize - 80.0); };
    std::ostringstream s;
    s << header();
    s << "<line x1=\"50\" y1=\"" << kSize - 40.0 << "\" x2=\"" << kSize - 30.0 << "\" y2=\""
      << kSize - 40.0 << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"50\" y1=\"" << kSize - 40.0 << "\" x2=\"50\" y2=\"20\" stroke=\"black\"/>\n";
    s << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - 12.0
      << "\" font-size=\"13\" text-anchor=\"middle\">" << xlabel << "</text>\n";
    s << "<text x=\"14\" y=\"" << kSize / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << kSize / 2 << ")\">" << ylabel << "</text>\n";
    s << "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < xs.size(); ++k) s << px(xs[k]) << ',' << py(ys[k]) << ' ';
    s << "\"/>\n</svg>\n";
    return s.str();
}

std::string render_svg(const json& envelope, const std::string& style) {
    if (!envelope.contains("outputs"))
        throw std::invalid_argument("render_svg: not a result envelope");
    const json& out = envelope.at("outputs");
    if (style == "fixed-points") {
        if (!out.contains("l_small_angle"))
            throw std::invalid_argument("render_svg: no fixed-point payload");
        BoundaryPoint ls(out.at("l_small_angle").get<double>());
        BoundaryPoint lb(out.at("l_big_angle").get<double>());
        return svg_disc_with_points({ls, lb}, {{ls, lb}});
    }
    if (style == "grid") {
        if (!envelope.contains("diagnostics") ||
            !envelope.at("diagnostics").contains("grid_csv"))
            throw std::invalid_argument("render_svg: no grid payload");
        auto values = grid_from_csv(envelope.at("diagnostics").at("grid_csv").get<std::string>());
        int stride = static_cast<int>(std::lround(std::sqrt(double(values.size()))));
        return svg_grid_image(values, stride);
    }
    if (style == "curve") {
        if (!out.contains("taus") || !out.contains("values"))
            throw std::invalid_argument("render_svg: no curve payload");
        return svg_curve(out.at("taus").get<std::vector<double>>(),
                         out.at("values").get<std::vector<double>>(), "tau", "L(tau)");
    }
    throw std::invalid_argument("render_svg: unknown style " + style);
}

}  // namespace hypcr
