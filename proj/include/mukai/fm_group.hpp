#pragma once

#include "mukai/exact.hpp"
#include "mukai/lattice.hpp"
#include "mukai/numeric.hpp"

#include <array>

namespace mukai {

// Matrix [[p1 sqrt(r1), p2 sqrt(r2)], [q1 sqrt(r2), q2 sqrt(r1)]] with
// r1 r2 = D and p1 q2 r1 - p2 q1 r2 = +-1. Stored up to global sign: the
// first nonzero of (p1, q2, p2) is non-negative.
class GhatElement {
public:
    GhatElement(Int p1, Int q1, Int p2, Int q2, Int r1, Int r2);

    const Int& p1() const { return p1_; }
    const Int& q1() const { return q1_; }
    const Int& p2() const { return p2_; }
    const Int& q2() const { return q2_; }
    const Int& r1() const { return r1_; }
    const Int& r2() const { return r2_; }
    Int D() const { return r1_ * r2_; }
    Int unit() const { return p1_ * q2_ * r1_ - p2_ * q1_ * r2_; }

    friend bool operator==(const GhatElement&, const GhatElement&) = default;

private:
    Int p1_, q1_, p2_, q2_, r1_, r2_;
};

// Integral matrix [[a, b sqrt(D)], [c sqrt(D), d]] with ad - bcD = 1,
// sign-normalized so that tr = a + d >= 0.
class FMMatrix {
public:
    FMMatrix(Int a, Int b, Int c, Int d, SurfaceParams P);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }
    const SurfaceParams& params() const { return P_; }
    const Int& D() const { return P_.D; }
    Int trace() const { return a_ + d_; }
    bool negated() const { return negated_; }

private:
    Int a_, b_, c_, d_;
    SurfaceParams P_;
    bool negated_ = false;
};

inline FMMatrix make_fm(Int a, Int b, Int c, Int d, SurfaceParams P) {
    return FMMatrix(std::move(a), std::move(b), std::move(c), std::move(d), std::move(P));
}

// Unnormalized integer quadruple in the same [[a, b sqrt(D)], [c sqrt(D), d]]
// shape; closed under multiplication, used for exact powers.
struct Mat2 {
    Int a, b, c, d;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 mat2_of(const FMMatrix& A) { return {A.a(), A.b(), A.c(), A.d()}; }
inline Mat2 mat2_identity() { return {1, 0, 0, 1}; }

Mat2 mat2_mul(const Mat2& lhs, const Mat2& rhs, const Int& D);

// FM matrix together with an accumulated even homological shift mod T.
struct ShiftedFM {
    FMMatrix matrix;
    Int shift;  // in 2Z
};

// g . M = g M g^t; cross terms in sqrt(D) cancel, so the result is integral.
Sym2Matrix ghat_act(const FMMatrix& A, const Sym2Matrix& M);
Sym2Matrix ghat_act(const Mat2& A, const Int& D, const Sym2Matrix& M);
Sym2Matrix ghat_act(const GhatElement& g, const Sym2Matrix& M);

MukaiVector act_on_vector(const FMMatrix& A, const MukaiVector& v);
MukaiVector act_on_vector(const Mat2& A, const SurfaceParams& P, const MukaiVector& v);

// One application of A to the column (p, q sqrt(D))^t.
std::pair<Int, Int> transform_pq(const FMMatrix& A, const Int& p, const Int& q);
std::pair<Int, Int> transform_pq(const Mat2& A, const Int& D, const Int& p, const Int& q);

// Exact A^n by binary exponentiation.
Mat2 power(const FMMatrix& A, unsigned long long n);

// Exact A^n by the closed forms: projectors for tr > 2, E + n(A - E) for
// tr = 2, periodicity (A^4 = E, A^6 = E) for tr in {0, 1}.
Mat2 power_closed(const FMMatrix& A, unsigned long long n);

// Matrix of act_on_vector in coordinates (r, d, a).
using Rep3 = std::array<std::array<Int, 3>, 3>;
Rep3 rep3_matrix(const FMMatrix& A);

// Coefficients (c2, c1, c0) of det(xI - R) = x^3 - c2 x^2 + c1 x - c0.
std::array<Int, 3> rep3_char_poly(const Rep3& R);

// g^2 lands in the integral eq-form; the shift follows the sign of
// (p1 + q2) p2.
ShiftedFM theta_square(const GhatElement& g);

// Recover the Ghat element from the isotropic pair (v1, v2) = (Phi(O), Phi(rho)).
GhatElement factor_isotropic_pair(const MukaiVector& v1, const MukaiVector& v2,
                                  const SurfaceParams& P);

}  // namespace mukai
