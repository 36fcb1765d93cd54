#pragma once

#include <complex>
#include <stdexcept>
#include <string>

// Disc-model hyperbolic isometries.  A MoebiusMap is the class of
//
//     [ a  b ]
//     [ b~ a~ ],   |a|^2 - |b|^2 = 1,
//
// modulo +-1, acting on the unit disc B by w -> (a w + b)/(b~ w + a~).
// The sign ambiguity is removed by a canonical representative, so maps
// compare by value.

namespace hypcr {

using cplx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

enum class IsometryClass { identity, elliptic, parabolic, hyperbolic };

std::string to_string(IsometryClass c);

// Point of the boundary circle of B, stored as an angle in [0, 2*pi).
struct BoundaryPoint {
    double angle = 0.0;

    BoundaryPoint() = default;
    explicit BoundaryPoint(double a);

    cplx point() const { return std::polar(1.0, angle); }
};

double normalize_angle(double a);  // reduce to [0, 2*pi)

// Point of the universal cover R -> boundary circle.
struct LiftedPoint {
    double value = 0.0;

    LiftedPoint() = default;
    explicit LiftedPoint(double v) : value(v) {}

    BoundaryPoint project() const { return BoundaryPoint(value); }
};

class MoebiusMap {
  public:
    MoebiusMap() : a_(1.0, 0.0), b_(0.0, 0.0) {}
    MoebiusMap(cplx a, cplx b);

    static MoebiusMap identity() { return MoebiusMap(); }

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    double trace() const { return 2.0 * a_.real(); }  // canonical rep, >= 0

    MoebiusMap inverse() const { return MoebiusMap(std::conj(a_), -b_); }

    friend MoebiusMap compose(const MoebiusMap& g, const MoebiusMap& h);
    friend MoebiusMap operator*(const MoebiusMap& g, const MoebiusMap& h) {
        return compose(g, h);
    }

  private:
    cplx a_, b_;  // canonical: re(a) > 0, or re(a) == 0 and im(a) >= 0
};

// Frobenius distance of matrix representatives after sign alignment.
double distance(const MoebiusMap& g, const MoebiusMap& h);

// su(1,1) element  [ i*alpha  beta; conj(beta)  -i*alpha ].
struct LieElement {
    double alpha = 0.0;
    cplx beta{0.0, 0.0};

    LieElement() = default;
    LieElement(double a, cplx b) : alpha(a), beta(b) {}

    LieElement operator+(const LieElement& o) const { return {alpha + o.alpha, beta + o.beta}; }
    LieElement operator-(const LieElement& o) const { return {alpha - o.alpha, beta - o.beta}; }
    LieElement operator*(double t) const { return {alpha * t, beta * t}; }
    LieElement operator-() const { return {-alpha, -beta}; }
};

double norm(const LieElement& g);

LieElement lie_bracket(const LieElement& g1, const LieElement& g2);

// exp(t * gamma), one-parameter subgroup through the identity.
MoebiusMap exp_lie(const LieElement& gamma, double t);

// Principal matrix logarithm of the canonical representative.
LieElement log_lie(const MoebiusMap& g);

// Adjoint action  gamma -> g gamma g^-1.
LieElement adjoint(const MoebiusMap& g, const LieElement& gamma);

cplx act_disc(const MoebiusMap& g, cplx w);                    // |w| < 1
BoundaryPoint act_boundary(const MoebiusMap& g, BoundaryPoint p);

IsometryClass classify(const MoebiusMap& g, double tol = 1e-9);

struct FixedPoints {
    BoundaryPoint l_small;  // eigenvalue of absolute value < 1 (repelling)
    BoundaryPoint l_big;    // attracting
};

FixedPoints fixed_points(const MoebiusMap& g, double tol = 1e-9);

// Hyperbolic element with prescribed boundary fixed points and |trace| = tau.
MoebiusMap hyperbolic_with_axis(BoundaryPoint l_small, BoundaryPoint l_big, double tau);

// Disc <-> half-plane identification, fixed once: 0 -> i, 1 -> inf, -1 -> 0.
cplx cayley(cplx w);
cplx cayley_inverse(cplx z);

// Geodesic ray from an interior anchor toward a boundary endpoint.
struct GeodesicGerm {
    BoundaryPoint endpoint;
    cplx anchor{0.0, 0.0};

    GeodesicGerm() = default;
    GeodesicGerm(BoundaryPoint e, cplx p);
};

// Unit-speed point of the germ's geodesic; sigma = 0 is the anchor and
// sigma -> +inf approaches the endpoint.
cplx germ_point(const GeodesicGerm& germ, double sigma);
cplx germ_point_derivative(const GeodesicGerm& germ, double sigma);

// Second ideal endpoint of the germ's full geodesic.
BoundaryPoint germ_other_endpoint(const GeodesicGerm& germ);

// Generator whose flow is tangent to the geodesic with the given ideal
// endpoints (normalized to unit boundary speed scale).
LieElement tangent_generator(BoundaryPoint p, BoundaryPoint q);

}  // namespace hypcr
