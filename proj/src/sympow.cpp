#include "mukai/sympow.hpp"

#include "mukai/exact.hpp"

#include <cmath>

namespace mukai {

namespace {

// Coefficients of (u x + v y)^n, lowest y-degree first.
std::vector<Int> binomial_expand(const Int& u, const Int& v, int n) {
    std::vector<Int> coeffs{1};
    for (int k = 0; k < n; ++k) {
        std::vector<Int> next(coeffs.size() + 1, Int(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i] * u;
            next[i + 1] += coeffs[i] * v;
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace

SymPowerRep sym_power(const Mat2x2& M, int d) {
    if (d < 1) throw InvalidInput("sym_power: d must be positive");
    const Int det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    if (det != 1 && det != -1) throw NotUnimodular("sym_power: det M must be +-1");

    // Substitution x -> m00 x + m10 y, y -> m01 x + m11 y; column j is the
    // expansion of the image of x^{d-j} y^j.
    SymPowerRep rep;
    rep.d = d;
    rep.matrix.assign(d + 1, std::vector<Int>(d + 1, Int(0)));
    for (int j = 0; j <= d; ++j) {
        const auto left = binomial_expand(M[0][0], M[1][0], d - j);
        const auto right = binomial_expand(M[0][1], M[1][1], j);
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t k = 0; k < right.size(); ++k)
                rep.matrix[i + k][j] += left[i] * right[k];
    }
    return rep;
}

double ppav_entropy(const Mat2x2& M, int d, double t) {
    if (d < 1) throw InvalidInput("ppav_entropy: d must be positive");
    const Int det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    if (det != 1) throw NotUnimodular("ppav_entropy: det M must be 1");
    const Int tau = M[0][0] + M[1][1];
    if (tau >= -2) throw OutOfScopeTrace("ppav_entropy: formula covers tr M < -2 only");
    // |alpha| = (-tau + sqrt(tau^2 - 4)) / 2
    const QuadraticReal alpha_abs(Rat(-tau) / 2, Rat(1, 2), tau * tau - 4);
    return d * std::log(alpha_abs.to_double()) - d * t;
}

}  // namespace mukai
