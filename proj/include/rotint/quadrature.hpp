#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rotint {

// Weights for composite Newton-Cotes integration on a uniform grid of n
// points with spacing h: integral ~= sum_i w[i] f(x_i).
//
// Rule selection, by interval count m = n - 1:
//   m == 1          trapezoid
//   m even          composite Simpson 1/3
//   m % 3 == 0      composite Simpson 3/8 (symmetric weights; this is the
//                   path taken by the default 1024-point grids, and the
//                   symmetry is what makes index-reversal quadrature
//                   identities hold to machine precision)
//   otherwise       1/3 on the first m-3 intervals, 3/8 on the last three
//
// Throws validation_error for n < 2 or h <= 0.
std::vector<double> simpson_weights(std::size_t n, double h);

// Adaptive composite Simpson on [a, b] to relative tolerance rel_tol,
// seeded with at least min_intervals uniform panels so narrow features are
// not missed by the first refinement decision.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-12,
                        std::size_t min_intervals = 64);

}  // namespace rotint
