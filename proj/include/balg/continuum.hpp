#pragma once

#include <string>
#include <vector>

#include "balg/diagnostics.hpp"

namespace balg {

// The unit-interval algebra with n(x) = sqrt(1 - x^2), x*y = x when y = 1
// and (y - n(x)) v 0 otherwise, x+y = n(n(x)*n(y)). The case split at y = 1
// is exact: the definition is genuinely discontinuous there.
namespace unit_interval {

constexpr double kTol = 1e-12;

Result<double> neg(double x);
Result<double> mult(double x, double y);
Result<double> oplus(double x, double y);

enum class Op { Neg, Mult, Oplus };
Result<double> eval(Op op, const std::vector<double>& args);

struct MonotoneGridReport {
  double step = 0.0;
  long triples = 0;
  double max_violation = 0.0;       // max of z*x - z*y over x <= y
  std::vector<double> worst;        // [z, x, y] attaining it
  bool holds(double tol = kTol) const { return max_violation <= tol; }
};
Result<MonotoneGridReport> check_monotone_grid(double step);

// For x strictly inside (0,1) and y = 1 - n(x): x*1 = x exceeds y strictly,
// while x*z <= y for every z < 1. So {z : x*z <= y} contains all z < 1 but
// not 1 and has no maximum.
struct NoRightResiduumWitness {
  double x = 0.0;
  double y = 0.0;
  double x_times_one = 0.0;
  double strict_margin = 0.0;       // x*1 - y, must be > 0
  double max_below_gap = 0.0;       // max over sampled z < 1 of x*z - y
  long samples = 0;
  bool valid(double tol = kTol) const {
    return strict_margin > tol && max_below_gap <= tol;
  }
  std::string summary() const;
};
Result<NoRightResiduumWitness> witness_no_right_residuum(double x, double step = 1e-3);

}  // namespace unit_interval
}  // namespace balg
