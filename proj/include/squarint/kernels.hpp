#pragma once

#include <functional>

#include "squarint/quadrature.hpp"

namespace squarint {

enum class Exec { Serial, Parallel };

/// One point (or one sub-integral) of a cubature rule, already weighted.
struct PointEval {
  Complex value{};
  long long evaluations = 1;
  double error = 0.0;
};

struct PointSum {
  Complex value{};
  long long evaluations = 0;
  double error = 0.0;  // Σ of the per-point errors
};

/// Σ_{i<n} f(i). Both variants produce bit-identical sums: the parallel one
/// stores each f(i) by index and reduces serially in index order. An
/// exception thrown by f is rethrown for the lowest failing index.
PointSum sum_points(long long n, const std::function<PointEval(long long)>& f, Exec exec);

/// The serial reference of sum_points.
PointSum sum_points_serial(long long n, const std::function<PointEval(long long)>& f);
/// The OpenMP variant of sum_points.
PointSum sum_points_parallel(long long n, const std::function<PointEval(long long)>& f);

}  // namespace squarint
