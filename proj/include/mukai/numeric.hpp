#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace mukai {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Float = boost::multiprecision::cpp_bin_float_50;

// Typed errors. Names follow the failure, not the call site.
struct NotUnimodular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ComplexEigenvalues : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotUpperHalfPlane : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotClosed : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotFactorizable : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleHit : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotApplicable : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateSequence : std::domain_error {
    using std::domain_error::domain_error;
};
struct OutOfScopeTrace : std::domain_error {
    using std::domain_error::domain_error;
};
struct InternalNonIntegral : std::logic_error {
    using std::logic_error::logic_error;
};

template <typename T>
int sign_of(const T& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

// n = outer^2 * squarefree with squarefree >= 1; requires n >= 1.
inline std::pair<Int, Int> extract_square(Int n) {
    if (n < 1) throw InvalidInput("extract_square: argument must be positive");
    Int outer = 1;
    for (Int f = 2; f * f <= n; ++f) {
        Int sq = f * f;
        while (n % sq == 0) {
            n /= sq;
            outer *= f;
        }
    }
    return {outer, n};
}

inline double to_double(const Rat& r) {
    return r.convert_to<Float>().convert_to<double>();
}

inline double to_double(const Int& n) {
    return n.convert_to<Float>().convert_to<double>();
}

// Natural log of a positive integer of arbitrary size.
inline double log_big(const Int& x) {
    if (x <= 0) throw InvalidInput("log_big: argument must be positive");
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits < 900) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 62;
    const Int top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * 0.6931471805599453;
}

inline std::string rat_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace mukai
