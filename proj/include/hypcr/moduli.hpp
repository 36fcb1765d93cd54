#pragma once

#include <cstdint>
#include <vector>

#include "hypcr/connection.hpp"

// Membership predicates and constructive realizations for the constrained
// data spaces on intervals, circles and punctured discs, plus the integer
// sheet invariant of the punctured-disc space.
//
// Open-interval conditions are tested strictly; the margin_* companions
// report the distance to the boundary of the condition so callers can demand
// a definite margin.

namespace hypcr {

struct IntervalDatumAff {
    PathConnection<AffGroup> connection;
    double lambda0 = 0.0;
    double lambda1 = 0.0;
};

struct IntervalDatumLifted {
    PathConnection<SU11Group> connection;
    double lambda0 = 0.0;  // lifted labels
    double lambda1 = 0.0;
};

struct LoopDatum {
    PathConnection<SU11Group> connection;  // circle domain
    double tau = 3.0;

    LoopDatum(PathConnection<SU11Group> a, double t) : connection(std::move(a)), tau(t) {
        if (!(tau > 2.0)) throw std::invalid_argument("LoopDatum: tau > 2 required");
        if (connection.domain != PathDomain::circle)
            throw std::invalid_argument("LoopDatum: circle connection required");
    }
};

struct DiscBoundaryConfig {
    std::vector<double> labels;  // lifted labels, >= 2 entries
};

struct PuncturedConfig {
    LiftedHolonomy holonomy;      // g~ at the base point, with its lift
    std::vector<double> labels;   // lifted labels lambda~_0 ... lambda~_d
    double tau = 3.0;
};

// lambda0 > g^{-1}(lambda1) for the affine transport g.
bool check_paff_interval(const IntervalDatumAff& x);
double margin_paff_interval(const IntervalDatumAff& x);

// lambda0 - g~^{-1}(lambda1) in (0, 2pi) for the natural lift g~.
bool check_p_interval(const IntervalDatumLifted& x);
double margin_p_interval(const IntervalDatumLifted& x);

// Hyperbolic holonomy with |trace| = tau (within tol) and rotation number 1.
bool check_ptau_circle(const LoopDatum& x, double tol = 1e-5);

// Strictly descending labels.
bool check_c_aff(const std::vector<double>& labels);
double margin_c_aff(const std::vector<double>& labels);

// Strictly descending and lambda_0 - lambda_d in (0, 2pi).
bool check_c(const DiscBoundaryConfig& config);
double margin_c(const DiscBoundaryConfig& config);

// Punctured-disc conditions.  Evaluates both the direct formulation
//   hyperbolic rot 1, |tr| = tau;
//   lambda_0 - g~^{-1}(lambda_d) in (0, 2pi);
//   lambda_j - lambda_{j+1} in (0, 2pi)
// and its simplification (label of lambda_0 in (l_big, l_small), labels
// strictly descending); throws if the two disagree.
bool check_c_tau(const PuncturedConfig& config, double trace_tol = 1e-6);
double margin_c_tau(const PuncturedConfig& config);

IntervalDatumAff construct_interval_datum(double lambda0, double lambda1, std::uint64_t seed,
                                          int nodes = 64);

// The window parameter is lambda0 - g~^{-1}(lambda1); it must lie in (0, 2pi)
// (negative default: draw it from the seed).
IntervalDatumLifted construct_interval_datum_lifted(double lambda0, double lambda1,
                                                    std::uint64_t seed, double window = -1.0,
                                                    int nodes = 64);

LoopDatum construct_ptau_loop(double tau, std::uint64_t seed, int nodes = 8192);

// Five-step construction: leading label, axis around it, the unique lifted
// hyperbolic with |tr| = tau and rotation number 1, trailing label at the
// midpoint of its admissible interval, uniform interleaving.
PuncturedConfig construct_c_tau_point(int d, double tau, std::uint64_t seed);

// Default anchor: midpoint of the (l_big, l_small) component whose left
// endpoint is the lift of l_big in [0, 2pi).
LiftedPoint default_sheet_anchor(const PuncturedConfig& config);

// Index of the component of the preimage of (l_big, l_small) containing
// lambda_0, relative to the component containing the anchor.
int sheet_index(const PuncturedConfig& config, const LiftedPoint& anchor);
int sheet_index(const PuncturedConfig& config);

// Natural lift of the one-parameter path s -> exp(s t gamma), s in [0,1].
NaturalLift lift_of_exp(const LieElement& gamma, double t);

// Lift of the composition g1 g2 determined by composing the lifted maps.
NaturalLift compose_lifts(const NaturalLift& g1, const NaturalLift& g2);

}  // namespace hypcr
