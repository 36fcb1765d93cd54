#pragma once

#include <complex>
#include <stdexcept>

// Orientation-preserving affine maps of the real line, x -> scale*x + shift,
// and their Lie algebra.  The action extends to the closed upper half-plane,
// fixing infinity.

namespace hypcr {

using cplx = std::complex<double>;

struct AffMap {
    double scale = 1.0;
    double shift = 0.0;

    AffMap() = default;
    AffMap(double sc, double sh) : scale(sc), shift(sh) {
        if (!(sc > 0.0)) throw std::invalid_argument("AffMap: scale must be positive");
    }

    static AffMap identity() { return AffMap(); }

    double operator()(double x) const { return scale * x + shift; }
    cplx act_halfplane(cplx w) const { return scale * w + shift; }

    AffMap inverse() const { return AffMap(1.0 / scale, -shift / scale); }
};

inline AffMap compose(const AffMap& g, const AffMap& h) {
    return AffMap(g.scale * h.scale, g.scale * h.shift + g.shift);
}
inline AffMap operator*(const AffMap& g, const AffMap& h) { return compose(g, h); }

inline double distance(const AffMap& g, const AffMap& h) {
    double ds = g.scale - h.scale, dh = g.shift - h.shift;
    return std::sqrt(ds * ds + dh * dh);
}

// Generator of x -> e^{t*scale_rate} x + ...; flow field is
// scale_rate * x + shift_rate.
struct AffLieElement {
    double scale_rate = 0.0;
    double shift_rate = 0.0;

    AffLieElement() = default;
    AffLieElement(double sr, double tr) : scale_rate(sr), shift_rate(tr) {}

    AffLieElement operator+(const AffLieElement& o) const {
        return {scale_rate + o.scale_rate, shift_rate + o.shift_rate};
    }
    AffLieElement operator-(const AffLieElement& o) const {
        return {scale_rate - o.scale_rate, shift_rate - o.shift_rate};
    }
    AffLieElement operator*(double t) const { return {scale_rate * t, shift_rate * t}; }
    AffLieElement operator-() const { return {-scale_rate, -shift_rate}; }
};

inline double norm(const AffLieElement& g) {
    return std::sqrt(g.scale_rate * g.scale_rate + g.shift_rate * g.shift_rate);
}

// Bracket of the flow fields (s1 x + t1) d/dx, (s2 x + t2) d/dx.
inline AffLieElement aff_bracket(const AffLieElement& g1, const AffLieElement& g2) {
    return {0.0, g2.scale_rate * g1.shift_rate - g1.scale_rate * g2.shift_rate};
}

AffMap aff_exp(const AffLieElement& gamma, double t);
AffLieElement aff_log(const AffMap& g);

inline AffLieElement aff_adjoint(const AffMap& g, const AffLieElement& gamma) {
    // conjugate the flow: x -> g( gamma-flow ( g^{-1} x ) )
    return {gamma.scale_rate,
            g.scale * gamma.shift_rate - gamma.scale_rate * g.shift};
}

inline cplx vector_field_halfplane(const AffLieElement& gamma, cplx w) {
    return gamma.scale_rate * w + gamma.shift_rate;
}

// H_gamma = theta_W(X_gamma) with theta_W = d re(w) / im(w).
double hamiltonian_halfplane(const AffLieElement& gamma, cplx w);

// Gradient of the Hamiltonian in (re, im) coordinates.
void hamiltonian_halfplane_grad(const AffLieElement& gamma, cplx w, double& hx, double& hy);

// Poisson bracket of H_{g1}, H_{g2} for omega_W = dre ^ dim / im^2.
double poisson_bracket_halfplane(const AffLieElement& g1, const AffLieElement& g2, cplx w);

double poisson_residual_halfplane(const AffLieElement& g1, const AffLieElement& g2, cplx w);

}  // namespace hypcr
