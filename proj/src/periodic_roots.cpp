#include "convexnormals/periodic_roots.hpp"

#include <algorithm>
#include <cmath>

#include "convexnormals/vec.hpp"

namespace cvxn {

namespace {

inline int sign_of(double v) { return v >= 0.0 ? 1 : -1; }

// Bisection on f' to locate the critical point inside [lo, hi].
double critical_point(const PeriodicEval& eval, double lo, double hi, int lo_sign) {
  for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sign_of(eval(mid).df) == lo_sign) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double refine_root(const PeriodicEval& eval, double lo, double hi, double xtol) {
  int slo = sign_of(eval(lo).f);
  for (int it = 0; it < 200 && hi - lo > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sign_of(eval(mid).f) == slo) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

RootScan scan_periodic(std::span<const double> f, std::span<const double> df,
                       const PeriodicEval& eval, double tol) {
  RootScan out;
  const int n = static_cast<int>(f.size());
  out.grid = n;
  const double step = kTwoPi / n;

  double fmax = std::abs(f[n - 1]), d2max = std::abs(df[0] - df[n - 1]);
  for (int j = 0; j + 1 < n; ++j) {
    fmax = std::max(fmax, std::abs(f[j]));
    d2max = std::max(d2max, std::abs(df[j + 1] - df[j]));
  }
  if (fmax <= tol) {
    out.identically_zero = true;
    return out;
  }
  // Slope of f' between nodes, doubled to cover curvature inside a cell.
  const double f2_bound = 2.0 * d2max / step;
  const double near = f2_bound * step * step + tol;

  for (int j = 0; j < n; ++j) {
    const int k = j + 1 < n ? j + 1 : 0;
    // Most cells keep the signs of f and f'.
    if ((f[j] >= 0.0) == (f[k] >= 0.0) && (df[j] >= 0.0) == (df[k] >= 0.0)) continue;
    const double lo = j * step, hi = (j + 1) * step;
    const int s0 = sign_of(f[j]), s1 = sign_of(f[k]);
    const bool df_turns = sign_of(df[j]) != sign_of(df[k]);
    const bool small = std::min(std::abs(f[j]), std::abs(f[k])) <= near;

    if (df_turns && small) {
      out.suspicious = true;
      const double tc = critical_point(eval, lo, hi, sign_of(df[j]));
      const double fc = eval(tc).f;
      if (std::abs(fc) <= tol) {
        out.crossings.push_back({tc, tc, 0});
        continue;
      }
      const int sc = sign_of(fc);
      if (s0 != sc) out.crossings.push_back({lo, tc, s0 > 0 ? -1 : 1});
      if (sc != s1) out.crossings.push_back({tc, hi, sc > 0 ? -1 : 1});
      continue;
    }
    if (s0 != s1) out.crossings.push_back({lo, hi, s0 > 0 ? -1 : 1});
  }
  return out;
}

RootScan scan_periodic_adaptive(
    int base_grid,
    const std::function<void(int, std::vector<double>&, std::vector<double>&)>& tabulate,
    const PeriodicEval& eval, double tol, int max_doublings) {
  // Reused per thread: the scan runs once per Monte Carlo sample.
  thread_local std::vector<double> f, df;
  tabulate(base_grid, f, df);
  RootScan scan = scan_periodic(f, df, eval, tol);
  if (!scan.suspicious || scan.identically_zero) return scan;
  int grid = base_grid;
  for (int d = 0; d < max_doublings; ++d) {
    grid *= 2;
    tabulate(grid, f, df);
    RootScan next = scan_periodic(f, df, eval, tol);
    const bool stable = next.crossings.size() == scan.crossings.size();
    scan = std::move(next);
    if (stable) break;
  }
  return scan;
}

}  // namespace cvxn
