#pragma once

#include "mukai/exact.hpp"
#include "mukai/numeric.hpp"

#include <complex>
#include <optional>

namespace mukai {

inline Surd surd_mul(const Surd& u, const Surd& v) { return u * v; }

// Half the self-intersection of the ample generator: (H^2) = 2D.
struct SurfaceParams {
    Int D;
    explicit SurfaceParams(Int d) : D(std::move(d)) {
        if (D < 1) throw InvalidInput("SurfaceParams: D must be positive");
    }
};

// Element r + dH + a*rho of the rank-3 lattice Z + ZH + Z*rho.
struct MukaiVector {
    Int r;
    Int d;
    Int a;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
    bool is_zero() const { return r == 0 && d == 0 && a == 0; }
};

// Symmetric matrix [[x, y*sqrt(D)], [y*sqrt(D), z]].
struct Sym2Matrix {
    Int x;
    Int y;
    Int z;

    friend bool operator==(const Sym2Matrix&, const Sym2Matrix&) = default;
};

// <v, w> = 2D d1 d2 - r1 a2 - r2 a1, signature (2,1).
inline Int pairing(const MukaiVector& v, const MukaiVector& w, const SurfaceParams& P) {
    return 2 * P.D * v.d * w.d - v.r * w.a - w.r * v.a;
}

inline Sym2Matrix iota(const MukaiVector& v, const SurfaceParams&) { return {v.r, v.d, v.a}; }
inline MukaiVector iota_inv(const Sym2Matrix& m) { return {m.x, m.y, m.z}; }

inline Int b_form(const Sym2Matrix& m1, const Sym2Matrix& m2, const SurfaceParams& P) {
    return 2 * P.D * m1.y * m2.y - (m1.x * m2.z + m1.z * m2.x);
}

inline bool is_isotropic(const MukaiVector& v, const SurfaceParams& P) {
    return pairing(v, v, P) == 0;
}

inline bool is_positive(const MukaiVector& v) {
    if (v.r != 0) return v.r > 0;
    if (v.d != 0) return v.d > 0;
    return v.a > 0;
}

// v(N) = ch(N) = (1, m, m^2 D) for a line bundle N with c_1(N) = mH.
inline MukaiVector exp_vector(const Int& m, const SurfaceParams& P) {
    return {1, m, m * m * P.D};
}

// Tensor by e^{pH}: cup product with (1, p, p^2 D).
inline MukaiVector tensor_exp(const MukaiVector& v, const Int& p, const SurfaceParams& P) {
    return {v.r, v.d + p * v.r, v.a + 2 * P.D * p * v.d + p * p * P.D * v.r};
}

// chi(E, F) = -<v(E), v(F)>.
inline Int euler_chi(const MukaiVector& v, const MukaiVector& w, const SurfaceParams& P) {
    return -pairing(v, w, P);
}

// Gaussian rational, used so the central charge stays exact.
struct ComplexRat {
    Rat re;
    Rat im;

    friend ComplexRat operator+(const ComplexRat& a, const ComplexRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexRat operator-(const ComplexRat& a, const ComplexRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend ComplexRat operator*(const ComplexRat& a, const ComplexRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ComplexRat&, const ComplexRat&) = default;
};

// Z(E) = <e^{zH}, v(E)> = 2Dz d - a - z^2 D r, exact over Gaussian rationals.
ComplexRat central_charge(const ComplexRat& z, const MukaiVector& v, const SurfaceParams& P);
std::complex<double> central_charge(const std::complex<double>& z, const MukaiVector& v,
                                    const SurfaceParams& P);

// Exhaustive falsification oracle: looks for a nonzero isotropic v with
// |r|,|d|,|a| <= bound orthogonal to exp(k), exp(k+m), exp(k+2m).
std::optional<MukaiVector> lemma_d_search(const SurfaceParams& P, const Int& k, const Int& m,
                                          const Int& bound);

// Which Ext groups are forced to vanish between two semi-homogeneous classes.
struct VanishingPattern {
    bool hom = false;
    bool ext1 = false;
    bool ext2 = false;

    friend bool operator==(const VanishingPattern&, const VanishingPattern&) = default;
};

VanishingPattern hom_vanishing(const MukaiVector& vE, const MukaiVector& vF, bool E_locally_free,
                               bool F_locally_free, const SurfaceParams& P);

// max over p in {0,+-1,+-2} of 4|chi(L(pH), E)| for a line-bundle class vL.
Int hom_total_bound(const MukaiVector& vL, const MukaiVector& vE, const SurfaceParams& P);

}  // namespace mukai
