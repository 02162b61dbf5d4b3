#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydisc {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

inline constexpr const char* kVersion = "polydisc 0.1.0";

// Thrown when an instance would exceed the configured operation budget.
// Drivers map this to a distinct exit code instead of a generic failure.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(double estimated, double limit)
      : std::runtime_error("budget exceeded: estimated " +
                           std::to_string(estimated) + " elementary ops, limit " +
                           std::to_string(limit)),
        estimated_ops(estimated),
        limit_ops(limit) {}
  double estimated_ops;
  double limit_ops;
};

// Neumaier compensated accumulator. Keeps long sums of piece lengths
// accurate to ~1 ulp of the total independent of the term count.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

inline double pow_int(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// 0^0 = 1 throughout: the moment system's j = 0 row reads sum(c) = 1.
inline cplx pow_int(cplx base, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline lcplx pow_int(lcplx base, int e) {
  lcplx r = 1.0L;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace polydisc
