#pragma once

#include "hypcr/moebius.hpp"

// Vector fields and Hamiltonians of the su(1,1) action on the disc, for the
// symplectic form omega_B = dre ^ dim / (1-|w|^2)^2.
//
// Two Hamiltonian assignments appear side by side:
//   * hamiltonian_disc       H_gamma = ((1+|w|^2) alpha / 2 - im(beta w)) / (1-|w|^2),
//     a Poisson homomorphism for lie_bracket; paired with
//     ham_vector_field_disc via  i_X omega_B = -dH.
//   * flow_hamiltonian_disc  H of the conjugated element, the function whose
//     (-dH)-Hamiltonian field is the actual flow of exp_lie; this is the
//     moment-map normalization used by the solver's energy identities.
// The two agree whenever beta is real.

namespace hypcr {

inline LieElement conj_elem(const LieElement& g) { return {g.alpha, std::conj(g.beta)}; }

// d/dt act_disc(exp_lie(gamma, t), w) at t = 0.  Defined on the closed disc;
// tangent to the boundary circle at |w| = 1.
inline cplx vector_field_disc(const LieElement& g, cplx w) {
    return -std::conj(g.beta) * w * w + cplx(0.0, 2.0 * g.alpha) * w + g.beta;
}

// Hamiltonian field of hamiltonian_disc (sign i_X omega = -dH).
inline cplx ham_vector_field_disc(const LieElement& g, cplx w) {
    return vector_field_disc(conj_elem(g), w);
}

double hamiltonian_disc(const LieElement& g, cplx w);  // |w| < 1

inline double flow_hamiltonian_disc(const LieElement& g, cplx w) {
    return hamiltonian_disc(conj_elem(g), w);
}

void hamiltonian_disc_grad(const LieElement& g, cplx w, double& hx, double& hy);

// {H1, H2} for omega_B, standard orientation.
double poisson_bracket_disc(const LieElement& g1, const LieElement& g2, cplx w);

// |{H_{g1}, H_{g2}} - H_{[g1,g2]}|, which should vanish.
double poisson_residual(const LieElement& g1, const LieElement& g2, cplx w);

}  // namespace hypcr
