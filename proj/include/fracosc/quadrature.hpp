#pragma once

#include <functional>
#include <vector>

namespace fracosc {

struct QuadResult {
    double value = 0.0;
    double err = 0.0;       // accumulated certified error bound
    long n_evals = 0;
};

// Adaptive Simpson with Richardson extrapolation on each accepted panel.
// abs_tol is the absolute error budget for [a, b]; the returned err is the
// accumulated bound, which may exceed abs_tol only when the depth or
// evaluation caps were hit (callers check err themselves).
QuadResult adaptive_simpson(const std::function<double(double)>& f,
                            double a, double b, double abs_tol,
                            int max_depth = 52, long max_evals = 4000000);

// Same, but splitting [a, b] at the given interior breakpoints first.
// The tolerance is divided evenly among the resulting panels.
QuadResult adaptive_simpson_split(const std::function<double(double)>& f,
                                  const std::vector<double>& points,
                                  double abs_tol);

}  // namespace fracosc
