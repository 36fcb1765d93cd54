#include "hypcr/schwarz.hpp"

#include <cmath>
#include <stdexcept>

namespace hypcr {

double SampledFunction::operator()(double x) const {
    if (values.size() < 2 || x <= lo || x >= hi) return 0.0;
    double u = (x - lo) / (hi - lo) * (values.size() - 1);
    int k = static_cast<int>(u);
    if (k >= static_cast<int>(values.size()) - 1) k = static_cast<int>(values.size()) - 2;
    double f = u - k;
    return values[k] * (1.0 - f) + values[k + 1] * f;
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights (positive half)
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    cplx integral;
    double error;
};

PanelResult gk15(const std::function<cplx(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx gk(0.0), g(0.0);
    for (int k = 0; k < 8; ++k) {
        cplx fv = (k == 7) ? f(c) : f(c - h * kXgk[k]) + f(c + h * kXgk[k]);
        gk += kWgk[k] * fv;
        if (k % 2 == 1) g += kWg[k / 2] * fv;
    }
    gk *= h;
    g *= h;
    double err = std::abs(gk - g);
    return {gk, std::pow(200.0 * err, 1.5) < err ? std::pow(200.0 * err, 1.5) : err};
}

cplx adapt(const std::function<cplx(double)>& f, double a, double b, double tol, int depth,
           int max_depth) {
    PanelResult r = gk15(f, a, b);
    if (r.error <= tol || r.error <= 1e-16 * std::abs(r.integral)) return r.integral;
    if (depth >= max_depth)
        throw std::runtime_error("integrate_gk: quadrature did not converge");
    double c = 0.5 * (a + b);
    return adapt(f, a, c, tol * 0.5, depth + 1, max_depth) +
           adapt(f, c, b, tol * 0.5, depth + 1, max_depth);
}

}  // namespace

cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b, double tol,
                  int max_depth) {
    if (!(b > a)) return 0.0;
    return adapt(f, a, b, tol, 0, max_depth);
}

cplx schwarz_integral(const std::function<double(double)>& gamma, double support_lo,
                      double support_hi, cplx z, double tol) {
    if (!(z.imag() > 0.0)) throw std::domain_error("schwarz_integral: im(z) > 0 required");
    auto f = [&](double zeta) { return gamma(zeta) / (z - zeta); };
    cplx integral = integrate_gk(f, support_lo, support_hi, tol);
    return cplx(0.0, 1.0) / kPi * integral;
}

cplx schwarz_integral(const SampledFunction& gamma, cplx z, double tol) {
    return schwarz_integral([&gamma](double x) { return gamma(x); }, gamma.lo, gamma.hi, z,
                            tol);
}

double schwarz_pick_ratio(cplx z, cplx du_dz, cplx du_dzbar, cplx u) {
    if (!(u.imag() > 0.0)) throw std::domain_error("schwarz_pick_ratio: value not in W");
    double norm_du = std::sqrt(std::norm(du_dz) + std::norm(du_dzbar)) / u.imag();
    return norm_du * (1.0 - std::norm(z)) / 2.0;
}

double schwarz_pick_check(const GridMap& u) {
    if (u.model != Model::half_plane)
        throw std::invalid_argument("schwarz_pick_check: half-plane-valued map expected");
    if (u.domain.shape != Shape::disc && u.domain.shape != Shape::half_disc)
        throw std::invalid_argument("schwarz_pick_check: disc or half-disc grid expected");
    Grid grid = make_grid(u.domain);
    if (u.values.size() != grid.nodes.size())
        throw std::invalid_argument("schwarz_pick_check: grid size mismatch");
    bool half = u.domain.shape == Shape::half_disc;
    int nr = u.domain.ns, na = u.domain.nt;
    double hr = 1.0 / nr;
    double ha = (half ? kPi : kTwoPi) / na;
    double worst = 0.0;
    for (int i = 1; i < nr; ++i) {
        int jlo = half ? 1 : 0;
        int jhi = half ? na - 1 : na - 1;
        for (int j = jlo; j <= jhi; ++j) {
            int self = grid.node_index(i, j);
            int inner = i == 1 ? 0 : grid.node_index(i - 1, j);
            cplx ur = (u.values[grid.node_index(i + 1, j)] - u.values[inner]) / (2.0 * hr);
            cplx ut;
            if (half) {
                ut = (u.values[grid.node_index(i, j + 1)] -
                      u.values[grid.node_index(i, j - 1)]) /
                     (2.0 * ha);
            } else {
                ut = (u.values[grid.node_index(i, j + 1)] -
                      u.values[grid.node_index(i, j - 1 + na)]) /
                     (2.0 * ha);
            }
            const GridNode& node = grid.nodes[self];
            double r = node.a, th = node.b;
            cplx uz = 0.5 * std::polar(1.0, -th) * (ur - cplx(0.0, 1.0) * ut / r);
            cplx uzb = 0.5 * std::polar(1.0, th) * (ur + cplx(0.0, 1.0) * ut / r);
            worst = std::max(worst, schwarz_pick_ratio(node.z, uz, uzb, u.values[self]));
        }
    }
    return worst;
}

}  // namespace hypcr
