#pragma once

#include "hypcr/moebius.hpp"

// Lifts of the boundary-circle action to the universal cover R -> R/2piZ.
//
// On the circle, g acts by  theta -> theta - 2 arg(conj(a) + conj(b) e^{i theta}).
// Since |b| < |a|, the argument stays within a half-turn of arg(conj(a)), so a
// lift is pinned down by one real number: a branch c of arg(conj(a)).  The
// natural lift of a path starting at the identity tracks c continuously from 0.

namespace hypcr {

class NaturalLift {
  public:
    NaturalLift() : g_(), c_(0.0) {}
    NaturalLift(MoebiusMap g, double lift_const);

    static NaturalLift identity() { return NaturalLift(); }

    const MoebiusMap& element() const { return g_; }
    double lift_const() const { return c_; }

    // Lifted boundary map, strictly increasing, commutes with +2pi.
    double apply(double ltilde) const;

    // Functional inverse of apply (the lift of g^{-1}).
    double apply_inverse(double ytilde) const;
    NaturalLift inverse() const;

    // (apply(l) - l) / 2pi; an integer at lifts of the fixed points when the
    // underlying element is hyperbolic.
    double rotation_raw(double ltilde) const;

    // Integer rotation number, read off at l_small.  Throws if the element is
    // not hyperbolic or the value is further than round_tol from an integer.
    int rotation_number(double class_tol = 1e-9, double round_tol = 0.05) const;

    // The unique lift of g with the given rotation number (g hyperbolic).
    static NaturalLift with_rotation_number(const MoebiusMap& g, int rot,
                                            double class_tol = 1e-9);

  private:
    MoebiusMap g_;
    double c_;
};

// Lift of g composed with the deck transformation: apply() increases by 2pi*k.
NaturalLift deck_shift(const NaturalLift& lift, int k);

// Conjugation k g k^{-1} lifted compatibly: fixed points move by k, the
// rotation number is unchanged.
NaturalLift conjugate_lift(const NaturalLift& lift, const MoebiusMap& k);

}  // namespace hypcr
