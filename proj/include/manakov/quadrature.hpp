#pragma once

#include <functional>

#include "manakov/types.hpp"

namespace manakov {

struct QuadResult {
    Complex value{};
    double error_estimate = 0.0;
    long evaluations = 0;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b], worst-interval-first
// bisection until the summed error estimate drops below tol.
//
// a may be -inf: the range is mapped to (0,1] by xi = b - u/(1-u), which
// needs no endpoint evaluation (all GK nodes are interior) and no tail
// truncation. Throws AccuracyError (best value attached) if the budget of
// integrand evaluations runs out first.
QuadResult quad_adaptive(const std::function<Complex(double)>& f, double a, double b,
                         double tol, long max_evaluations = 2000000);

}  // namespace manakov
