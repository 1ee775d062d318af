#include <exception>
#include <vector>

#include "squarint/kernels.hpp"

namespace squarint {

PointSum sum_points_serial(long long n, const std::function<PointEval(long long)>& f) {
  PointSum s;
  for (long long i = 0; i < n; ++i) {
    const PointEval p = f(i);
    s.value += p.value;
    s.evaluations += p.evaluations;
    s.error += p.error;
  }
  return s;
}

PointSum sum_points_parallel(long long n, const std::function<PointEval(long long)>& f) {
  std::vector<PointEval> vals(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(n));
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 64) reduction(|| : failed)
  for (long long i = 0; i < n; ++i) {
    try {
      vals[static_cast<std::size_t>(i)] = f(i);
    } catch (...) {
      errs[static_cast<std::size_t>(i)] = std::current_exception();
      failed = true;
    }
  }
  if (failed) {
    for (const auto& e : errs) {
      if (e) std::rethrow_exception(e);
    }
  }
  PointSum s;
  for (const auto& p : vals) {
    s.value += p.value;
    s.evaluations += p.evaluations;
    s.error += p.error;
  }
  return s;
}

PointSum sum_points(long long n, const std::function<PointEval(long long)>& f, Exec exec) {
  return exec == Exec::Parallel ? sum_points_parallel(n, f) : sum_points_serial(n, f);
}

}  // namespace squarint
