#pragma once

#include <functional>
#include <span>
#include <vector>

namespace cvxn {

/// Value and derivative of a 2pi-periodic function at one angle.
struct PeriodicSample {
  double f = 0.0;
  double df = 0.0;
};

using PeriodicEval = std::function<PeriodicSample(double)>;

/// A zero of the scanned function. `direction` is -1 for a + to - crossing,
/// +1 for - to +, and 0 for a degenerate (double) zero where |f| at the
/// critical point fell below the tolerance.
struct Crossing {
  double lo = 0.0;
  double hi = 0.0;
  int direction = 0;
  bool degenerate() const { return direction == 0; }
};

struct RootScan {
  std::vector<Crossing> crossings;
  bool identically_zero = false;  // |f| <= tol on the whole grid
  bool suspicious = false;        // a cell needed critical-point refinement
  int grid = 0;
};

/// Scans tabulated f, f' on the uniform grid t_j = j * 2pi / n.
///
/// A sign change of f in a cell is one crossing. A cell where f' changes
/// sign and |f| at the nodes is within (max|f''| * step^2 + tol) of zero is
/// refined: the critical point is located by bisection on f', and |f| there
/// decides between a degenerate zero, a hidden pair of crossings, or none.
RootScan scan_periodic(std::span<const double> f, std::span<const double> df,
                       const PeriodicEval& eval, double tol);

/// Scans on successively doubled grids, starting at `base_grid`, until two
/// consecutive resolutions agree on the crossing count. Refinement is only
/// attempted when the base scan is flagged suspicious.
/// `tabulate(n, f, df)` fills the tables for an n-point grid.
RootScan scan_periodic_adaptive(
    int base_grid,
    const std::function<void(int, std::vector<double>&, std::vector<double>&)>& tabulate,
    const PeriodicEval& eval, double tol, int max_doublings = 4);

/// Bisection of f on a bracketing interval down to width `xtol`.
double refine_root(const PeriodicEval& eval, double lo, double hi, double xtol = 1e-12);

}  // namespace cvxn
