#include "hypcr/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace hypcr {

GaugeGrid GaugeGrid::from_function(const std::function<MoebiusMap(double, double)>& phi,
                                   int ns, int nt, double len_s, double len_t) {
    if (ns < 2 || nt < 2) throw std::invalid_argument("GaugeGrid: need at least 2x2 nodes");
    GaugeGrid g;
    g.ns = ns;
    g.nt = nt;
    g.hs = len_s / (ns - 1);
    g.ht = len_t / (nt - 1);
    g.nodes.reserve(std::size_t(ns) * nt);
    for (int j = 0; j < nt; ++j)
        for (int i = 0; i < ns; ++i) g.nodes.push_back(phi(i * g.hs, j * g.ht));
    return g;
}

LatticeConnection LatticeConnection::constant(const LieElement& g1, const LieElement& g2,
                                              int ns, int nt, double len_s, double len_t) {
    LatticeConnection a;
    a.ns = ns;
    a.nt = nt;
    a.hs = len_s / (ns - 1);
    a.ht = len_t / (nt - 1);
    a.a_s.assign(std::size_t(ns) * nt, g1);
    a.a_t.assign(std::size_t(ns) * nt, g2);
    return a;
}

LatticeConnection induced_lattice_connection(const GaugeGrid& phi) {
    LatticeConnection a;
    a.ns = phi.ns;
    a.nt = phi.nt;
    a.hs = phi.hs;
    a.ht = phi.ht;
    a.a_s.resize(std::size_t(phi.ns) * phi.nt);
    a.a_t.resize(std::size_t(phi.ns) * phi.nt);
    auto dlog = [&](const MoebiusMap& hi, const MoebiusMap& lo) {
        return log_lie(hi * lo.inverse());
    };
    for (int j = 0; j < phi.nt; ++j) {
        for (int i = 0; i < phi.ns; ++i) {
            LieElement ds, dt;
            if (i == 0)
                ds = (dlog(phi.at(1, j), phi.at(0, j)) * 4.0 - dlog(phi.at(2, j), phi.at(0, j))) *
                     (1.0 / (2.0 * phi.hs));
            else if (i == phi.ns - 1)
                ds = (dlog(phi.at(i, j), phi.at(i - 1, j)) * 4.0 -
                      dlog(phi.at(i, j), phi.at(i - 2, j))) *
                     (1.0 / (2.0 * phi.hs));
            else
                ds = dlog(phi.at(i + 1, j), phi.at(i - 1, j)) * (1.0 / (2.0 * phi.hs));
            if (j == 0)
                dt = (dlog(phi.at(i, 1), phi.at(i, 0)) * 4.0 - dlog(phi.at(i, 2), phi.at(i, 0))) *
                     (1.0 / (2.0 * phi.ht));
            else if (j == phi.nt - 1)
                dt = (dlog(phi.at(i, j), phi.at(i, j - 1)) * 4.0 -
                      dlog(phi.at(i, j), phi.at(i, j - 2))) *
                     (1.0 / (2.0 * phi.ht));
            else
                dt = dlog(phi.at(i, j + 1), phi.at(i, j - 1)) * (1.0 / (2.0 * phi.ht));
            a.a_s[i + phi.ns * j] = ds;
            a.a_t[i + phi.ns * j] = dt;
        }
    }
    return a;
}

double plaquette_curvature(const LatticeConnection& a) {
    if (a.ns < 2 || a.nt < 2) throw std::invalid_argument("plaquette_curvature: grid too small");
    double worst = 0.0;
    const MoebiusMap id;
    for (int j = 0; j + 1 < a.nt; ++j) {
        for (int i = 0; i + 1 < a.ns; ++i) {
            // edge-averaged link variables around the plaquette
            MoebiusMap bottom = exp_lie((a.as(i, j) + a.as(i + 1, j)) * 0.5, a.hs);
            MoebiusMap right = exp_lie((a.at(i + 1, j) + a.at(i + 1, j + 1)) * 0.5, a.ht);
            MoebiusMap top = exp_lie((a.as(i, j + 1) + a.as(i + 1, j + 1)) * 0.5, a.hs);
            MoebiusMap left = exp_lie((a.at(i, j) + a.at(i, j + 1)) * 0.5, a.ht);
            MoebiusMap plaq = left.inverse() * top.inverse() * right * bottom;
            worst = std::max(worst, distance(plaq, id));
        }
    }
    return worst / (a.hs * a.ht);
}

double plaquette_curvature(const GaugeGrid& phi) {
    return plaquette_curvature(induced_lattice_connection(phi));
}

double flatness_hamiltonian_residual(const LatticeConnection& a,
                                     const std::vector<cplx>& fibre_points) {
    double worst = 0.0;
    for (cplx w : fibre_points) {
        for (int j = 1; j + 1 < a.nt; ++j) {
            for (int i = 1; i + 1 < a.ns; ++i) {
                double dt_Hs = (hamiltonian_disc(a.as(i, j + 1), w) -
                                hamiltonian_disc(a.as(i, j - 1), w)) /
                               (2.0 * a.ht);
                double ds_Ht = (hamiltonian_disc(a.at(i + 1, j), w) -
                                hamiltonian_disc(a.at(i - 1, j), w)) /
                               (2.0 * a.hs);
                double br = poisson_bracket_disc(a.as(i, j), a.at(i, j), w);
                worst = std::max(worst, std::abs(dt_Hs - ds_Ht + br));
            }
        }
    }
    return worst;
}

}  // namespace hypcr
