#pragma once

#include "mukai/exact.hpp"
#include "mukai/fm_group.hpp"
#include "mukai/lattice.hpp"

#include <complex>
#include <vector>

namespace mukai {

// h_t = log(rho) + slope * t, with rho an exact algebraic number.
struct EntropyFunction {
    QuadraticReal rho;
    Rat slope;

    bool rho_is_one() const { return rho == QuadraticReal::rational(1); }
    double value_at(double t) const { return std::log(rho.to_double()) + to_double(slope) * t; }
};

// delta'_0 sequence with exact integer values and log-ratio estimates.
struct GrowthSequence {
    std::vector<unsigned long long> n_values;
    std::vector<Int> delta_values;
    std::vector<double> ratio_estimates;  // log(delta(n+1)/delta(n)), one per adjacent pair
};

struct KTReport {
    double estimate;
    double closed;
    double diff;
    bool pass;
};

// alpha^2 for tr A > 2, exactly in Q(sqrt(tr^2 - 4)); 1 for tr A <= 2.
QuadraticReal spectral_radius(const FMMatrix& A);

// Full case table on (sign of b, tr A).
EntropyFunction entropy_closed(const FMMatrix& A);

// Moebius slope dynamics x -> (c + dx)/(a + bDx).
Rat slope_step(const FMMatrix& A, const Rat& x);
QuadraticReal slope_step(const FMMatrix& A, const QuadraticReal& x);
QuadraticReal slope_fixed_point(const FMMatrix& A);

// Average homological shift per application of Phi; equals the t-slope.
Rat shift_drift(const FMMatrix& A);

// Smallest twist m >= 1 with m + s > 1, s the attracting slope.
Int choose_twist(const FMMatrix& A);

// delta'_0(n) = sum over i in {-3,-2,-1}, j in {1,2,3} of
// |chi(exp(im), A^n exp(jm))|, exact.
GrowthSequence delta0_sequence(const FMMatrix& A, const Int& m, unsigned long long n_max);

// Growth-rate estimate of h_t from the delta'_0 log-ratios (Richardson
// extrapolated) plus the drift term; exact short-circuit for tr A in {0,1}.
double entropy_estimate(const FMMatrix& A, double t, unsigned long long n_max);

// Mass-growth estimate from |Z(z, Phi^n exp(jm))|, tr A > 2 only.
double mass_growth_estimate(const FMMatrix& A, const std::complex<double>& z, const Int& m,
                            unsigned long long n_max);

// Gromov-Yomdin comparison: estimator at t = 0 against log spectral radius.
KTReport kt_check(const FMMatrix& A, unsigned long long n_max, double tol);

}  // namespace mukai
