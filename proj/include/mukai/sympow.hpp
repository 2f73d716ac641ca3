#pragma once

#include "mukai/numeric.hpp"

#include <array>
#include <vector>

namespace mukai {

using Mat2x2 = std::array<std::array<Int, 2>, 2>;
using IntMatrix = std::vector<std::vector<Int>>;

// Action on degree-d binary forms in the basis {x^d, x^{d-1}y, ..., y^d}.
struct SymPowerRep {
    int d;
    IntMatrix matrix;  // (d+1) x (d+1)
};

// Induced matrix of M on the d-th symmetric power; requires det M = +-1.
SymPowerRep sym_power(const Mat2x2& M, int d);

// h_t = d log|alpha| - d t for det M = 1 and tr M < -2.
double ppav_entropy(const Mat2x2& M, int d, double t);

}  // namespace mukai
