#pragma once

#include <cmath>
#include <functional>

namespace ramsey {

struct QuadResult {
    double value = 0;
    double error_estimate = 0;
    long long evaluations = 0;
    bool converged = false;
};

// Recursive adaptive Simpson with the usual Richardson acceptance test
// (|S2 - S1| <= 15 tol) and a depth cap for integrands with boundary layers.
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double tol, int max_depth = 60);

// Globally adaptive Gauss-Kronrod 7-15: repeatedly bisects the segment with
// the largest |K15 - G7| estimate until the summed estimate meets tol.
QuadResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                  double a, double b, double tol,
                                  int max_segments = 1 << 16);

}  // namespace ramsey
