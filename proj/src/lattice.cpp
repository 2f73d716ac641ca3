#include "mukai/lattice.hpp"

namespace mukai {

ComplexRat central_charge(const ComplexRat& z, const MukaiVector& v, const SurfaceParams& P) {
    if (z.im <= 0) throw NotUpperHalfPlane("central_charge: Im(z) must be positive");
    const ComplexRat coef_d{Rat(2 * P.D * v.d), 0};
    const ComplexRat coef_r{Rat(P.D * v.r), 0};
    const ComplexRat const_a{Rat(v.a), 0};
    return coef_d * z - const_a - z * z * coef_r;
}

std::complex<double> central_charge(const std::complex<double>& z, const MukaiVector& v,
                                    const SurfaceParams& P) {
    // double -> Rat is exact, so both overloads share one code path.
    const ComplexRat zr{Rat(z.real()), Rat(z.imag())};
    const ComplexRat out = central_charge(zr, v, P);
    return {to_double(out.re), to_double(out.im)};
}

std::optional<MukaiVector> lemma_d_search(const SurfaceParams& P, const Int& k, const Int& m,
                                          const Int& bound) {
    if (bound < 1) return std::nullopt;
    const MukaiVector e1 = exp_vector(k + m, P);
    const MukaiVector e2 = exp_vector(k + 2 * m, P);
    // Orthogonality to exp(k) pins a = Dk(2d - rk), so two loops suffice;
    // any counterexample in the box must show up here.
    for (Int r = -bound; r <= bound; ++r) {
        for (Int d = -bound; d <= bound; ++d) {
            const Int a = P.D * k * (2 * d - r * k);
            if (a < -bound || a > bound) continue;
            const MukaiVector v{r, d, a};
            if (v.is_zero()) continue;
            if (!is_isotropic(v, P)) continue;
            if (pairing(v, e1, P) != 0) continue;
            if (pairing(v, e2, P) != 0) continue;
            return v;
        }
    }
    return std::nullopt;
}

VanishingPattern hom_vanishing(const MukaiVector& vE, const MukaiVector& vF, bool E_locally_free,
                               bool F_locally_free, const SurfaceParams& P) {
    if (E_locally_free && vE.r <= 0)
        throw InvalidInput("hom_vanishing: locally free class must have positive rank");
    if (F_locally_free && vF.r <= 0)
        throw InvalidInput("hom_vanishing: locally free class must have positive rank");
    if (!E_locally_free && vE.r != 0)
        throw InvalidInput("hom_vanishing: torsion class must have rank zero");
    if (!F_locally_free && vF.r != 0)
        throw InvalidInput("hom_vanishing: torsion class must have rank zero");

    const Int p = pairing(vE, vF, P);
    VanishingPattern out;

    if (E_locally_free && F_locally_free) {
        if (p > 0) {
            out.hom = out.ext2 = true;
        } else if (p < 0) {
            out.ext1 = true;
            // slope comparison d/r, cross-multiplied (ranks positive)
            const Int lhs = vE.d * vF.r;
            const Int rhs = vF.d * vE.r;
            if (lhs > rhs) out.hom = true;
            if (rhs > lhs) out.ext2 = true;
        }
        return out;
    }
    if (E_locally_free && !F_locally_free) {
        if (p > 0) out.hom = out.ext2 = true;
        if (p < 0) out.ext1 = out.ext2 = true;
        return out;
    }
    if (!E_locally_free && !F_locally_free) {
        if (p > 0) out.hom = out.ext2 = true;
        return out;
    }
    // E torsion, F locally free: nothing is forced.
    return out;
}

Int hom_total_bound(const MukaiVector& vL, const MukaiVector& vE, const SurfaceParams& P) {
    Int best = 0;
    for (int p = -2; p <= 2; ++p) {
        Int chi = euler_chi(tensor_exp(vL, p, P), vE, P);
        if (chi < 0) chi = -chi;
        if (4 * chi > best) best = 4 * chi;
    }
    return best;
}

}  // namespace mukai
