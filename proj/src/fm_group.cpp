#include "mukai/fm_group.hpp"

#include <algorithm>
#include <vector>

namespace mukai {

GhatElement::GhatElement(Int p1, Int q1, Int p2, Int q2, Int r1, Int r2)
    : p1_(std::move(p1)),
      q1_(std::move(q1)),
      p2_(std::move(p2)),
      q2_(std::move(q2)),
      r1_(std::move(r1)),
      r2_(std::move(r2)) {
    if (r1_ < 1 || r2_ < 1) throw InvalidInput("GhatElement: r1, r2 must be positive");
    const Int u = unit();
    if (u != 1 && u != -1)
        throw NotUnimodular("GhatElement: p1 q2 r1 - p2 q1 r2 must be +-1");
    // sign normalization: first nonzero of (p1, q2, p2) non-negative
    int lead = 0;
    if (p1_ != 0)
        lead = sign_of(p1_);
    else if (q2_ != 0)
        lead = sign_of(q2_);
    else
        lead = sign_of(p2_);
    if (lead < 0) {
        p1_ = -p1_;
        q1_ = -q1_;
        p2_ = -p2_;
        q2_ = -q2_;
    }
}

FMMatrix::FMMatrix(Int a, Int b, Int c, Int d, SurfaceParams P)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), P_(std::move(P)) {
    if (a_ * d_ - b_ * c_ * P_.D != 1)
        throw NotUnimodular("FMMatrix: ad - bcD must equal 1");
    if (a_ + d_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
        negated_ = true;
    }
}

Mat2 mat2_mul(const Mat2& lhs, const Mat2& rhs, const Int& D) {
    return {lhs.a * rhs.a + lhs.b * rhs.c * D, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b * D + lhs.d * rhs.d};
}

Sym2Matrix ghat_act(const Mat2& A, const Int& D, const Sym2Matrix& M) {
    const Int& a = A.a;
    const Int& b = A.b;
    const Int& c = A.c;
    const Int& d = A.d;
    return {a * a * M.x + 2 * a * b * D * M.y + b * b * D * M.z,
            a * c * M.x + (a * d + b * c * D) * M.y + b * d * M.z,
            c * c * D * M.x + 2 * c * d * D * M.y + d * d * M.z};
}

Sym2Matrix ghat_act(const FMMatrix& A, const Sym2Matrix& M) {
    return ghat_act(mat2_of(A), A.D(), M);
}

Sym2Matrix ghat_act(const GhatElement& g, const Sym2Matrix& M) {
    const Int D = g.D();
    const Int x = g.p1() * g.p1() * g.r1() * M.x + 2 * g.p1() * g.p2() * D * M.y +
                  g.p2() * g.p2() * g.r2() * M.z;
    const Int y = g.p1() * g.q1() * M.x + (g.p1() * g.q2() * g.r1() + g.p2() * g.q1() * g.r2()) * M.y +
                  g.p2() * g.q2() * M.z;
    const Int z = g.q1() * g.q1() * g.r2() * M.x + 2 * g.q1() * g.q2() * D * M.y +
                  g.q2() * g.q2() * g.r1() * M.z;
    return {x, y, z};
}

MukaiVector act_on_vector(const FMMatrix& A, const MukaiVector& v) {
    return iota_inv(ghat_act(A, iota(v, A.params())));
}

MukaiVector act_on_vector(const Mat2& A, const SurfaceParams& P, const MukaiVector& v) {
    return iota_inv(ghat_act(A, P.D, iota(v, P)));
}

std::pair<Int, Int> transform_pq(const Mat2& A, const Int& D, const Int& p, const Int& q) {
    return {A.a * p + A.b * D * q, A.c * p + A.d * q};
}

std::pair<Int, Int> transform_pq(const FMMatrix& A, const Int& p, const Int& q) {
    return transform_pq(mat2_of(A), A.D(), p, q);
}

Mat2 power(const FMMatrix& A, unsigned long long n) {
    Mat2 result = mat2_identity();
    Mat2 base = mat2_of(A);
    const Int& D = A.D();
    while (n > 0) {
        if (n & 1) result = mat2_mul(result, base, D);
        base = mat2_mul(base, base, D);
        n >>= 1;
    }
    return result;
}

namespace {

Int integral_part(const QuadraticReal& q, const char* what) {
    if (!q.is_rational() || boost::multiprecision::denominator(q.x()) != 1)
        throw InternalNonIntegral(what);
    return boost::multiprecision::numerator(q.x());
}

}  // namespace

Mat2 power_closed(const FMMatrix& A, unsigned long long n) {
    const Int tau = A.trace();
    if (n == 0) return mat2_identity();
    if (tau > 2) {
        // A^n = alpha^n P + beta^n Q = (c1 A + c0 E) with
        // c1 = (alpha^n - beta^n)/(alpha - beta), c0 = (alpha beta^n - beta alpha^n)/(alpha - beta)
        const auto [alpha, beta] = eigenvalues(tau);
        const QuadraticReal an = alpha.pow(n);
        const QuadraticReal bn = beta.pow(n);
        const QuadraticReal den = alpha - beta;
        const QuadraticReal c1 = (an - bn) / den;
        const QuadraticReal c0 = (alpha * bn - beta * an) / den;
        const Int k1 = integral_part(c1, "power_closed: non-integral A coefficient");
        const Int k0 = integral_part(c0, "power_closed: non-integral E coefficient");
        return {k1 * A.a() + k0, k1 * A.b(), k1 * A.c(), k1 * A.d() + k0};
    }
    if (tau == 2) {
        const Int m(n);
        return {1 + m * (A.a() - 1), m * A.b(), m * A.c(), 1 + m * (A.d() - 1)};
    }
    // tr = 1: A^6 = E; tr = 0: A^4 = E
    const unsigned long long period = (tau == 1) ? 6 : 4;
    unsigned long long k = n % period;
    Mat2 result = mat2_identity();
    const Mat2 base = mat2_of(A);
    for (unsigned long long i = 0; i < k; ++i) result = mat2_mul(result, base, A.D());
    return result;
}

Rep3 rep3_matrix(const FMMatrix& A) {
    const Int& a = A.a();
    const Int& b = A.b();
    const Int& c = A.c();
    const Int& d = A.d();
    const Int& D = A.D();
    return {{{a * a, 2 * a * b * D, b * b * D},
             {a * c, a * d + b * c * D, b * d},
             {c * c * D, 2 * c * d * D, d * d}}};
}

std::array<Int, 3> rep3_char_poly(const Rep3& R) {
    const Int c2 = R[0][0] + R[1][1] + R[2][2];
    const Int c1 = (R[0][0] * R[1][1] - R[0][1] * R[1][0]) +
                   (R[0][0] * R[2][2] - R[0][2] * R[2][0]) +
                   (R[1][1] * R[2][2] - R[1][2] * R[2][1]);
    const Int c0 = R[0][0] * (R[1][1] * R[2][2] - R[1][2] * R[2][1]) -
                   R[0][1] * (R[1][0] * R[2][2] - R[1][2] * R[2][0]) +
                   R[0][2] * (R[1][0] * R[2][1] - R[1][1] * R[2][0]);
    return {c2, c1, c0};
}

ShiftedFM theta_square(const GhatElement& g) {
    const Int D = g.D();
    const SurdSum e11(Surd(g.p1(), g.r1()));
    const SurdSum e12(Surd(g.p2(), g.r2()));
    const SurdSum e21(Surd(g.q1(), g.r2()));
    const SurdSum e22(Surd(g.q2(), g.r1()));

    const SurdSum s11 = e11 * e11 + e12 * e21;
    const SurdSum s12 = e11 * e12 + e12 * e22;
    const SurdSum s21 = e21 * e11 + e22 * e21;
    const SurdSum s22 = e21 * e12 + e22 * e22;

    const auto a = s11.as_integer();
    const auto d = s22.as_integer();
    const auto b = s12.as_multiple_of_sqrt(D);
    const auto c = s21.as_multiple_of_sqrt(D);
    if (!a || !b || !c || !d)
        throw NotClosed("theta_square: square does not have the integral eq-form");

    const Int trace_factor = g.p1() + g.q2();
    Int shift = 0;
    if (trace_factor * g.p2() < 0 || trace_factor == 0) shift = -2;
    return {FMMatrix(*a, *b, *c, *d, SurfaceParams(D)), shift};
}

GhatElement factor_isotropic_pair(const MukaiVector& v1, const MukaiVector& v2,
                                  const SurfaceParams& P) {
    if (!is_isotropic(v1, P) || !is_isotropic(v2, P))
        throw NotFactorizable("factor_isotropic_pair: vectors must be isotropic");
    if (!is_positive(v1) || !is_positive(v2))
        throw NotFactorizable("factor_isotropic_pair: vectors must be positive");
    if (pairing(v1, v2, P) != -1)
        throw NotFactorizable("factor_isotropic_pair: pairing must be -1");

    std::vector<Int> divisors;
    for (Int r1 = 1; r1 * r1 <= P.D; ++r1) {
        if (P.D % r1 == 0) {
            divisors.push_back(r1);
            if (r1 * r1 != P.D) divisors.push_back(P.D / r1);
        }
    }
    std::sort(divisors.begin(), divisors.end());

    for (const Int& r1 : divisors) {
        const Int r2 = P.D / r1;
        if (v1.r <= 0 || v1.r % r1 != 0) continue;
        Int p1;
        if (!is_perfect_square(v1.r / r1, p1) || p1 == 0) continue;
        if (v1.d % p1 != 0) continue;
        const Int q1 = v1.d / p1;
        if (q1 * q1 * r2 != v1.a) continue;

        if (v2.r == 0) {
            if (v2.d != 0) continue;
            if (v2.a % r1 != 0) continue;
            Int q2;
            if (!is_perfect_square(v2.a / r1, q2)) continue;
            // unit p1 q2 r1 = 1 picks the sign of q2
            if (p1 * q2 * r1 == 1) return GhatElement(p1, q1, 0, q2, r1, r2);
            if (p1 * (-q2) * r1 == 1) return GhatElement(p1, q1, 0, -q2, r1, r2);
            continue;
        }

        if (v2.r < 0 || v2.r % r2 != 0) continue;
        Int p2abs;
        if (!is_perfect_square(v2.r / r2, p2abs) || p2abs == 0) continue;
        for (int sgn : {1, -1}) {
            const Int p2 = sgn * p2abs;
            if (v2.d % p2 != 0) continue;
            const Int q2 = v2.d / p2;
            if (q2 * q2 * r1 != v2.a) continue;
            if (p1 * q2 * r1 - p2 * q1 * r2 != 1) continue;
            return GhatElement(p1, q1, p2, q2, r1, r2);
        }
    }
    throw NotFactorizable("factor_isotropic_pair: no divisor splitting satisfies the constraints");
}

}  // namespace mukai
