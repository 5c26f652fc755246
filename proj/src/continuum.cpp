#include "balg/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace balg::unit_interval {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

Diagnostic domain_error(double x) {
  std::ostringstream os;
  os << "argument " << x << " outside [0,1]";
  return Diagnostic{"DomainError", {}, os.str()};
}

// 0, step, 2*step, ..., with 1 always included exactly.
std::vector<double> grid(double step) {
  std::vector<double> g;
  for (long k = 0;; ++k) {
    const double v = k * step;
    if (v >= 1.0) break;
    g.push_back(v);
  }
  g.push_back(1.0);
  return g;
}

}  // namespace

Result<double> neg(double x) {
  if (!in_unit(x)) return domain_error(x);
  return std::sqrt(1.0 - x * x);
}

Result<double> mult(double x, double y) {
  if (!in_unit(x)) return domain_error(x);
  if (!in_unit(y)) return domain_error(y);
  if (y == 1.0) return x;  // exact case split: the operation jumps at y = 1
  return std::max(y - std::sqrt(1.0 - x * x), 0.0);
}

Result<double> oplus(double x, double y) {
  if (!in_unit(x)) return domain_error(x);
  if (!in_unit(y)) return domain_error(y);
  const double nx = std::sqrt(1.0 - x * x);
  const double ny = std::sqrt(1.0 - y * y);
  const double m = mult(nx, ny).value();
  return std::sqrt(1.0 - m * m);
}

Result<double> eval(Op op, const std::vector<double>& args) {
  switch (op) {
    case Op::Neg:
      if (args.size() != 1) return Diagnostic{"BadArity", {}, "neg takes one argument"};
      return neg(args[0]);
    case Op::Mult:
      if (args.size() != 2) return Diagnostic{"BadArity", {}, "mult takes two arguments"};
      return mult(args[0], args[1]);
    case Op::Oplus:
      if (args.size() != 2) return Diagnostic{"BadArity", {}, "oplus takes two arguments"};
      return oplus(args[0], args[1]);
  }
  return Diagnostic{"BadArity", {}, "unknown operation"};
}

Result<MonotoneGridReport> check_monotone_grid(double step) {
  if (!(step > 0.0 && step < 1.0))
    return Diagnostic{"DomainError", {}, "step must lie strictly between 0 and 1"};

  MonotoneGridReport rep;
  rep.step = step;
  const std::vector<double> g = grid(step);
  for (double z : g)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i; j < g.size(); ++j) {
        const double x = g[i], y = g[j];
        ++rep.triples;
        const double d = mult(z, x).value() - mult(z, y).value();
        if (d > rep.max_violation) {
          rep.max_violation = d;
          rep.worst = {z, x, y};
        }
      }
  return rep;
}

std::string NoRightResiduumWitness::summary() const {
  std::ostringstream os;
  os << "x = " << x << ", y = 1 - n(x) = " << y << "\n"
     << "  x*1 = " << x_times_one << " > y (margin " << strict_margin << ")\n"
     << "  max over " << samples << " sampled z < 1 of x*z - y: " << max_below_gap << "\n"
     << "  {z : x*z <= y} contains every z < 1 but not 1, so it has no maximum;"
     << " x\\y does not exist";
  return os.str();
}

Result<NoRightResiduumWitness> witness_no_right_residuum(double x, double step) {
  if (!in_unit(x) || x == 0.0 || x == 1.0) {
    std::ostringstream os;
    os << "x = " << x << " must lie strictly inside (0,1)";
    return Diagnostic{"DomainError", {}, os.str()};
  }
  if (!(step > 0.0 && step < 1.0))
    return Diagnostic{"DomainError", {}, "step must lie strictly between 0 and 1"};

  NoRightResiduumWitness w;
  w.x = x;
  w.y = 1.0 - std::sqrt(1.0 - x * x);
  w.x_times_one = mult(x, 1.0).value();
  w.strict_margin = w.x_times_one - w.y;

  w.max_below_gap = -1.0;
  for (double z : grid(step)) {
    if (z >= 1.0) continue;
    ++w.samples;
    w.max_below_gap = std::max(w.max_below_gap, mult(x, z).value() - w.y);
  }
  return w;
}

}  // namespace balg::unit_interval
