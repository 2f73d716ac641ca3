#include "mukai/exact.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace mukai {

std::pair<QuadraticReal, QuadraticReal> eigenvalues(const Int& tr, const Int& det) {
    const Int disc = tr * tr - 4 * det;
    if (disc < 0)
        throw ComplexEigenvalues("eigenvalues: tr^2 - 4 det < 0, eigenvalues are not real");
    const Rat half_tr = Rat(tr) / 2;
    const Rat half(1, 2);
    return {QuadraticReal(half_tr, half, disc), QuadraticReal(half_tr, -half, disc)};
}

std::string QuadraticReal::exact_string() const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Int dx = denominator(x_);
    const Int dy = denominator(y_);
    const Int den = boost::integer::lcm(dx, dy);
    const Int p = numerator(x_) * (den / dx);
    const Int q = numerator(y_) * (den / dy);

    std::string core;
    if (q == 0) {
        core = p.str();
    } else {
        std::string root = "sqrt(" + delta_.str() + ")";
        std::string yterm = (q == 1) ? root : (q == -1 ? "-" + root : q.str() + "*" + root);
        if (p == 0) {
            core = yterm;
        } else {
            core = p.str() + (q > 0 ? "+" : "") + yterm;
        }
    }
    if (den == 1) return core;
    const bool needs_parens = core.find('+') != std::string::npos || core.find('-', 1) != std::string::npos;
    if (needs_parens) core = "(" + core + ")";
    return core + "/" + den.str();
}

}  // namespace mukai
