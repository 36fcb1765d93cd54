#include "hypcr/cylinder.hpp"

#include <cmath>
#include <random>

namespace hypcr {

double cylinder_bound(double tau) {
    if (!(tau > 2.0)) throw std::domain_error("cylinder_bound: tau > 2 required");
    return kPi / (2.0 * std::acosh(tau / 2.0));
}

CylinderExperimentReport cylinder_feasibility_experiment(double tau, double length,
                                                         int n_seeds, std::uint64_t seed0,
                                                         int ns, int nt) {
    if (!(tau > 2.0)) throw std::domain_error("cylinder experiment: tau > 2 required");
    if (!(length > 0.0)) throw std::invalid_argument("cylinder experiment: l > 0 required");
    CylinderExperimentReport rep;
    rep.tau = tau;
    rep.length = length;
    rep.bound = cylinder_bound(tau);

    double beta0 = std::acosh(tau / 2.0);
    CRProblem p;
    p.domain = {Shape::cylinder, ns, nt, length};
    p.model = Model::disc;
    p.su_t = [beta0](double, double t) {
        return LieElement{kPi, std::polar(beta0, kTwoPi * t)};
    };
    p.ends = EndMode::free_ends;
    p.options.tol_rms = 1e-9;
    p.options.max_iterations = 250;

    for (int s = 0; s < n_seeds; ++s) {
        std::mt19937_64 rng(seed0 + s);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double r0 = 0.5 * std::sqrt(unit(rng));
        double phi0 = kTwoPi * unit(rng);
        cplx w0 = std::polar(r0, phi0);
        double js = 0.03 * unit(rng), jt = 0.03 * unit(rng);
        p.initial_guess = [w0, js, jt](double a, double b) {
            return w0 + cplx(js * std::sin(kTwoPi * b) + jt * a, js * std::cos(kTwoPi * b));
        };
        SolveResult res = solve_cr(p);
        rep.outcomes.push_back(res.report.outcome);
        rep.residuals.push_back(res.report.residual_rms);
        switch (res.report.outcome) {
            case SolveOutcome::converged_interior: ++rep.converged_interior; break;
            case SolveOutcome::escape: ++rep.escapes; break;
            case SolveOutcome::plateau: ++rep.plateaus; break;
        }
    }
    return rep;
}

}  // namespace hypcr
