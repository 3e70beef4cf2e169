#include "sasaki/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

using Sample = std::vector<double>;
using Integrand = std::function<Sample(double)>;

Sample simpson(const Sample& fa, const Sample& fm, const Sample& fb, double h) {
  Sample out(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i)
    out[i] = h / 6.0 * (fa[i] + 4.0 * fm[i] + fb[i]);
  return out;
}

void add_to(Sample& acc, const Sample& x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
}

// Classic recursive Simpson with the |S2 - S1| <= 15 tol acceptance test and
// the Richardson-corrected sum (S2 + (S2 - S1)/15).
void adaptive(const Integrand& f, double a, double b, const Sample& fa,
              const Sample& fm, const Sample& fb, const Sample& whole,
              double tol, int depth, Sample& acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const Sample flm = f(lm), frm = f(rm);
  const Sample left = simpson(fa, flm, fm, m - a);
  const Sample right = simpson(fm, frm, fb, b - m);

  double err = 0.0;
  Sample s2(whole.size());
  for (std::size_t i = 0; i < whole.size(); ++i) {
    s2[i] = left[i] + right[i];
    err = std::max(err, std::abs(s2[i] - whole[i]));
  }
  if (err <= 15.0 * tol || depth <= 0) {
    if (depth <= 0 && err > 15.0 * tol)
      throw AccuracyError("adaptive quadrature failed to converge");
    for (std::size_t i = 0; i < whole.size(); ++i)
      acc[i] += s2[i] + (s2[i] - whole[i]) / 15.0;
    return;
  }
  adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, acc);
  adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, acc);
}

Sample integrate_piece(const Integrand& f, double a, double b, double tol,
                       int max_depth) {
  const Sample fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  Sample acc(fa.size(), 0.0);
  const Sample whole = simpson(fa, fm, fb, b - a);
  adaptive(f, a, b, fa, fm, fb, whole, tol, max_depth, acc);
  return acc;
}

}  // namespace

std::vector<double> integrate_adaptive(const Integrand& f, double a, double b,
                                       double abstol, int max_depth,
                                       const std::vector<double>& breakpoints) {
  const double sign = a <= b ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);

  std::vector<double> cuts{lo};
  for (double c : breakpoints)
    if (c > lo && c < hi) cuts.push_back(c);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());

  if (hi - lo == 0.0) {
    const Sample probe = f(lo);
    return Sample(probe.size(), 0.0);
  }

  Sample total;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double len = cuts[k + 1] - cuts[k];
    if (len <= 0.0) continue;
    const double tol = abstol * std::max(len / (hi - lo), 1e-3);
    Sample piece = integrate_piece(f, cuts[k], cuts[k + 1], tol, max_depth);
    if (total.empty())
      total = std::move(piece);
    else
      add_to(total, piece);
  }
  for (auto& v : total) v *= sign;
  return total;
}

}  // namespace sasaki
