#include "hypcr/moebius.hpp"

#include <cmath>

namespace hypcr {

std::string to_string(IsometryClass c) {
    switch (c) {
        case IsometryClass::identity: return "identity";
        case IsometryClass::elliptic: return "elliptic";
        case IsometryClass::parabolic: return "parabolic";
        case IsometryClass::hyperbolic: return "hyperbolic";
    }
    return "?";
}

double normalize_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

BoundaryPoint::BoundaryPoint(double a) : angle(normalize_angle(a)) {}

MoebiusMap::MoebiusMap(cplx a, cplx b) : a_(a), b_(b) {
    double det = std::norm(a_) - std::norm(b_);
    if (!(det > 0.0) || !std::isfinite(det))
        throw std::invalid_argument("MoebiusMap: |a|^2 - |b|^2 must be positive");
    double s = std::sqrt(det);
    if (std::abs(s - 1.0) > 1e-15) {
        a_ /= s;
        b_ /= s;
    }
    if (a_.real() < 0.0 || (a_.real() == 0.0 && a_.imag() < 0.0)) {
        a_ = -a_;
        b_ = -b_;
    }
}

MoebiusMap compose(const MoebiusMap& g, const MoebiusMap& h) {
    // [a1 b1; ~ ~][a2 b2; ~ ~]
    cplx a = g.a_ * h.a_ + g.b_ * std::conj(h.b_);
    cplx b = g.a_ * h.b_ + g.b_ * std::conj(h.a_);
    return MoebiusMap(a, b);
}

double distance(const MoebiusMap& g, const MoebiusMap& h) {
    auto frob = [](cplx da, cplx db) {
        return std::sqrt(2.0 * (std::norm(da) + std::norm(db)));
    };
    double plus = frob(g.a() - h.a(), g.b() - h.b());
    double minus = frob(g.a() + h.a(), g.b() + h.b());
    return std::min(plus, minus);
}

double norm(const LieElement& g) {
    return std::sqrt(g.alpha * g.alpha + std::norm(g.beta));
}

LieElement lie_bracket(const LieElement& g1, const LieElement& g2) {
    // matrix commutator, back in (alpha, beta) coordinates
    double alpha = 2.0 * std::imag(g1.beta * std::conj(g2.beta));
    cplx beta = cplx(0.0, 2.0) * (g1.alpha * g2.beta - g2.alpha * g1.beta);
    return {alpha, beta};
}

MoebiusMap exp_lie(const LieElement& gamma, double t) {
    // gamma^2 = (|beta|^2 - alpha^2) * Id, so the series closes.
    double delta = std::norm(gamma.beta) - gamma.alpha * gamma.alpha;
    double c, s;  // exp(t gamma) = c*Id + s*gamma
    if (delta > 1e-14) {
        double r = std::sqrt(delta);
        c = std::cosh(t * r);
        s = std::sinh(t * r) / r;
    } else if (delta < -1e-14) {
        double r = std::sqrt(-delta);
        c = std::cos(t * r);
        s = std::sin(t * r) / r;
    } else {
        double x = t * t * delta;
        c = 1.0 + x / 2.0;
        s = t * (1.0 + x / 6.0);
    }
    cplx a(c, s * gamma.alpha);
    cplx b = s * gamma.beta;
    return MoebiusMap(a, b);
}

LieElement log_lie(const MoebiusMap& g) {
    double x = g.a().real();  // >= 0 for the canonical representative
    double fac;
    if (x >= 1.0) {
        double r = std::acosh(std::max(1.0, x));
        fac = (r < 1e-8) ? 1.0 - r * r / 6.0 : r / std::sinh(r);
    } else {
        double th = std::acos(x);
        fac = (th < 1e-8) ? 1.0 : th / std::sin(th);
    }
    return {fac * g.a().imag(), fac * g.b()};
}

LieElement adjoint(const MoebiusMap& g, const LieElement& gamma) {
    // g [i alpha, beta; conj(beta), -i alpha] g^{-1}
    cplx a = g.a(), b = g.b();
    cplx ia(0.0, gamma.alpha);
    // n = gamma * g^{-1}, with g^{-1} = [conj(a), -b; -conj(b), a]
    cplx n11 = ia * std::conj(a) - gamma.beta * std::conj(b);
    cplx n12 = -ia * b + gamma.beta * a;
    cplx n21 = std::conj(gamma.beta) * std::conj(a) + ia * std::conj(b);
    cplx n22 = -std::conj(gamma.beta) * b - ia * a;
    cplx r11 = a * n11 + b * n21;
    cplx r12 = a * n12 + b * n22;
    return {r11.imag(), r12};
}

cplx act_disc(const MoebiusMap& g, cplx w) {
    if (!(std::abs(w) < 1.0))
        throw std::domain_error("act_disc: point must lie in the open unit disc");
    return (g.a() * w + g.b()) / (std::conj(g.b()) * w + std::conj(g.a()));
}

BoundaryPoint act_boundary(const MoebiusMap& g, BoundaryPoint p) {
    cplx z = p.point();
    cplx num = g.a() * z + g.b();
    cplx den = std::conj(g.b()) * z + std::conj(g.a());
    cplx image = num / den;
    if (std::abs(std::abs(image) - 1.0) > 1e-12)
        throw std::runtime_error("act_boundary: image drifted off the unit circle");
    return BoundaryPoint(std::arg(image));
}

IsometryClass classify(const MoebiusMap& g, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("classify: tol must be positive");
    if (distance(g, MoebiusMap::identity()) <= tol) return IsometryClass::identity;
    double tr = std::abs(g.trace());
    if (tr > 2.0 + tol) return IsometryClass::hyperbolic;
    if (tr < 2.0 - tol) return IsometryClass::elliptic;
    return IsometryClass::parabolic;
}

FixedPoints fixed_points(const MoebiusMap& g, double tol) {
    if (classify(g, tol) != IsometryClass::hyperbolic)
        throw std::invalid_argument("fixed_points: element is not hyperbolic");
    double c = g.a().real();
    double r = std::sqrt(c * c - 1.0);
    // boundary point of the eigenvector for eigenvalue lambda: b / (lambda - a)
    auto fp = [&](double lambda) {
        cplx w = g.b() / (cplx(lambda) - g.a());
        return BoundaryPoint(std::arg(w));
    };
    return {fp(c - r), fp(c + r)};
}

MoebiusMap hyperbolic_with_axis(BoundaryPoint l_small, BoundaryPoint l_big, double tau) {
    if (!(tau > 2.0)) throw std::invalid_argument("hyperbolic_with_axis: need tau > 2");
    double p = l_small.angle, q = l_big.angle;
    double half = 0.5 * (q - p);
    if (std::abs(std::sin(half)) < 1e-12)
        throw std::invalid_argument("hyperbolic_with_axis: fixed points must be distinct");
    double r = std::sqrt(tau * tau / 4.0 - 1.0);
    double y = -r * (std::cos(half) / std::sin(half));
    cplx a(tau / 2.0, y);
    cplx b = std::polar(1.0, q) * cplx(r, -y);
    return MoebiusMap(a, b);
}

cplx cayley(cplx w) {
    if (!(std::abs(w) < 1.0)) throw std::domain_error("cayley: |w| < 1 required");
    return cplx(0.0, 1.0) * (1.0 + w) / (1.0 - w);
}

cplx cayley_inverse(cplx z) {
    if (!(z.imag() > 0.0)) throw std::domain_error("cayley_inverse: im(z) > 0 required");
    return (z - cplx(0.0, 1.0)) / (z + cplx(0.0, 1.0));
}

GeodesicGerm::GeodesicGerm(BoundaryPoint e, cplx p) : endpoint(e), anchor(p) {
    if (!(std::abs(p) < 1.0))
        throw std::invalid_argument("GeodesicGerm: anchor must lie in the open disc");
}

namespace {
// Unit direction at 0 of the anchor-based chart pointing toward the endpoint.
cplx germ_direction(const GeodesicGerm& g) {
    cplx zeta = g.endpoint.point();
    cplx d = (zeta - g.anchor) / (1.0 - std::conj(g.anchor) * zeta);
    return d / std::abs(d);
}
}  // namespace

cplx germ_point(const GeodesicGerm& g, double sigma) {
    cplx v = std::tanh(sigma) * germ_direction(g);
    return (v + g.anchor) / (1.0 + std::conj(g.anchor) * v);
}

cplx germ_point_derivative(const GeodesicGerm& g, double sigma) {
    cplx dir = germ_direction(g);
    cplx v = std::tanh(sigma) * dir;
    double sech2 = 1.0 - std::tanh(sigma) * std::tanh(sigma);
    cplx tp = (1.0 - std::norm(g.anchor)) /
              ((1.0 + std::conj(g.anchor) * v) * (1.0 + std::conj(g.anchor) * v));
    return tp * sech2 * dir;
}

BoundaryPoint germ_other_endpoint(const GeodesicGerm& g) {
    cplx v = -germ_direction(g);
    cplx w = (v + g.anchor) / (1.0 + std::conj(g.anchor) * v);
    return BoundaryPoint(std::arg(w));
}

LieElement tangent_generator(BoundaryPoint p, BoundaryPoint q) {
    // boundary speed of gamma=(alpha,beta) at angle th is 2(alpha - im(conj(beta) e^{i th}));
    // pick the one-parameter family vanishing at both p and q, normalized.
    cplx ep = p.point(), eq = q.point();
    cplx d = ep - eq;
    double n2 = std::norm(d);
    if (n2 < 1e-24)
        throw std::invalid_argument("tangent_generator: endpoints must be distinct");
    cplx beta_bar = std::conj(d) / n2;  // makes conj(beta) * (ep - eq) real
    double alpha = std::imag(beta_bar * ep);
    LieElement g{alpha, std::conj(beta_bar)};
    double s = norm(g);
    return {g.alpha / s, g.beta / s};
}

}  // namespace hypcr
