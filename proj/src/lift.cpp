#include "hypcr/lift.hpp"

#include <cmath>

namespace hypcr {

NaturalLift::NaturalLift(MoebiusMap g, double lift_const) : g_(g), c_(lift_const) {
    double drift = std::remainder(c_ - std::arg(std::conj(g_.a())), kPi);
    if (std::abs(drift) > 1e-6)
        throw std::invalid_argument("NaturalLift: constant is not a branch of arg(conj(a))");
}

double NaturalLift::apply(double ltilde) const {
    cplx ratio = std::conj(g_.b()) / std::conj(g_.a());  // |ratio| < 1
    double corr = std::arg(1.0 + ratio * std::polar(1.0, ltilde));
    return ltilde - 2.0 * c_ - 2.0 * corr;
}

double NaturalLift::apply_inverse(double ytilde) const {
    double lo = ytilde + 2.0 * c_ - kPi - 1e-9;
    double hi = ytilde + 2.0 * c_ + kPi + 1e-9;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(ytilde)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (apply(mid) < ytilde)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

NaturalLift NaturalLift::inverse() const {
    MoebiusMap ginv = g_.inverse();
    double x = apply_inverse(0.0);  // lift of g^{-1} must send 0 to x
    cplx ratio = std::conj(ginv.b()) / std::conj(ginv.a());
    double corr = std::arg(1.0 + ratio);
    double c_inv = 0.5 * (0.0 - x) - corr;
    return NaturalLift(ginv, c_inv);
}

double NaturalLift::rotation_raw(double ltilde) const {
    return (apply(ltilde) - ltilde) / kTwoPi;
}

int NaturalLift::rotation_number(double class_tol, double round_tol) const {
    if (classify(g_, class_tol) != IsometryClass::hyperbolic)
        throw std::invalid_argument("rotation_number: holonomy is not hyperbolic");
    FixedPoints fp = fixed_points(g_, class_tol);
    double raw = rotation_raw(fp.l_small.angle);
    double k = std::round(raw);
    if (std::abs(raw - k) > round_tol)
        throw std::runtime_error("rotation_number: lift is not integral at the fixed point");
    return static_cast<int>(k);
}

NaturalLift NaturalLift::with_rotation_number(const MoebiusMap& g, int rot, double class_tol) {
    if (classify(g, class_tol) != IsometryClass::hyperbolic)
        throw std::invalid_argument("with_rotation_number: element is not hyperbolic");
    double c0 = std::arg(std::conj(g.a()));
    NaturalLift base(g, c0);
    FixedPoints fp = fixed_points(g, class_tol);
    double raw = base.rotation_raw(fp.l_small.angle);
    int k0 = static_cast<int>(std::round(raw));
    return NaturalLift(g, c0 - kPi * (rot - k0));
}

NaturalLift deck_shift(const NaturalLift& lift, int k) {
    return NaturalLift(lift.element(), lift.lift_const() - kPi * k);
}

NaturalLift conjugate_lift(const NaturalLift& lift, const MoebiusMap& k) {
    NaturalLift klift(k, std::arg(std::conj(k.a())));  // any lift of k works
    MoebiusMap gc = k * lift.element() * k.inverse();
    double y = klift.apply(lift.apply(klift.apply_inverse(0.0)));
    cplx ratio = std::conj(gc.b()) / std::conj(gc.a());
    double corr = std::arg(1.0 + ratio);
    double c = -0.5 * y - corr;
    return NaturalLift(gc, c);
}

}  // namespace hypcr
