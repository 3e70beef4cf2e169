#include "sasaki/grid.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sasaki/errors.hpp"

namespace sasaki {

void GridField::validate() const {
  if (nx < 3 || ny < 3) throw DomainError("grid needs at least 3x3 nodes");
  if (!(h > 0.0)) throw DomainError("grid spacing must be positive");
  if (values.size() != static_cast<std::size_t>(nx) * ny)
    throw DomainError("grid value count does not match nx*ny");
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("grid contains non-finite values");
}

GridField make_grid(const Rect& r, int nx, int ny) {
  if (nx < 3 || ny < 3) throw DomainError("grid needs at least 3x3 nodes");
  const double hu = r.width() / (nx - 1);
  const double hv = r.height() / (ny - 1);
  if (std::abs(hu - hv) > 1e-9 * std::max(hu, hv))
    throw DomainError("grid cells must be square");
  GridField g;
  g.nx = nx;
  g.ny = ny;
  g.h = hu;
  g.u0 = r.u0;
  g.v0 = r.v0;
  g.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);
  return g;
}

GridField sample_to_grid(const ScalarJetField& f, const Rect& r, int n) {
  GridField g = make_grid(r, n, n);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) g.at(i, j) = f.eval(g.u(i), g.v(j), 0).value();
  g.validate();
  return g;
}

void write_grid_csv(const GridField& g, const std::string& path) {
  g.validate();
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  out << "u,v,value\n";
  char buf[96];
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", g.u(i), g.v(j),
                    g.at(i, j));
      out << buf;
    }
  if (!out) throw DomainError("write failed for '" + path + "'");
}

GridField read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("u,v,value", 0) != 0)
    throw DomainError("grid CSV must start with header 'u,v,value'");

  std::vector<double> us, vs, vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double u, v, x;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &u, &v, &x) != 3)
      throw DomainError("malformed grid CSV row: " + line);
    us.push_back(u);
    vs.push_back(v);
    vals.push_back(x);
  }
  if (vals.size() < 9) throw DomainError("grid CSV has too few rows");

  // u varies fastest; the first v-change marks the row length
  std::size_t nx = 0;
  for (std::size_t k = 1; k < vs.size(); ++k)
    if (vs[k] != vs[0]) {
      nx = k;
      break;
    }
  if (nx < 3 || vals.size() % nx != 0)
    throw DomainError("grid CSV is not a rectangular row-major grid");
  const std::size_t ny = vals.size() / nx;

  GridField g;
  g.nx = static_cast<int>(nx);
  g.ny = static_cast<int>(ny);
  g.u0 = us[0];
  g.v0 = vs[0];
  g.h = us[1] - us[0];
  g.values = std::move(vals);
  g.validate();

  const double tol = 1e-9 * std::max(1.0, std::abs(g.h));
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t k = j * nx + i;
      if (std::abs(us[k] - g.u(static_cast<int>(i))) > tol ||
          std::abs(vs[k] - g.v(static_cast<int>(j))) > tol)
        throw DomainError("grid CSV nodes are not uniformly spaced");
    }
  return g;
}

namespace {

// One-dimensional derivative estimates.  Fourth order when the line is long
// enough (tangent errors enter the interpolant's second derivatives divided
// by h, so second-order estimates would cost an order of accuracy there);
// second order on very short lines.
double deriv_node(const std::vector<double>& f, int n, int i, double h) {
  if (n < 5) {
    if (i == 0) return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    if (i == n - 1)
      return (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return (f[i + 1] - f[i - 1]) / (2.0 * h);
  }
  if (i == 0)
    return (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] -
            3.0 * f[4]) /
           (12.0 * h);
  if (i == 1)
    return (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) /
           (12.0 * h);
  if (i == n - 2)
    return (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] +
            6.0 * f[n - 4] - f[n - 5]) /
           (12.0 * h);
  if (i == n - 1)
    return (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] -
            16.0 * f[n - 4] + 3.0 * f[n - 5]) /
           (12.0 * h);
  return (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
}

struct HermiteData {
  GridField f, fu, fv, fuv;
};

HermiteData hermite_data(const GridField& g) {
  HermiteData d{g, g, g, g};
  std::vector<double> line;

  line.resize(g.nx);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) line[i] = g.at(i, j);
    for (int i = 0; i < g.nx; ++i) d.fu.at(i, j) = deriv_node(line, g.nx, i, g.h);
  }
  line.resize(g.ny);
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) line[j] = g.at(i, j);
    for (int j = 0; j < g.ny; ++j) d.fv.at(i, j) = deriv_node(line, g.ny, j, g.h);
  }
  // cross derivative: v-differences of fu
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) line[j] = d.fu.at(i, j);
    for (int j = 0; j < g.ny; ++j)
      d.fuv.at(i, j) = deriv_node(line, g.ny, j, g.h);
  }
  return d;
}

}  // namespace

ScalarJetField grid_to_field(const GridField& g) {
  g.validate();
  if (g.nx < 4 || g.ny < 4)
    throw DomainError("bicubic interpolation needs at least a 4x4 grid");

  auto data = std::make_shared<const HermiteData>(hermite_data(g));
  const Rect rect = g.rect();
  const double snap = 1e-12 * std::max(1.0, std::max(rect.width(), rect.height()));

  std::vector<double> breaks(g.ny);
  for (int j = 0; j < g.ny; ++j) breaks[j] = g.v(j);

  auto fn = [data, rect, snap](double u, double v, int order) -> Jet2d {
    const GridField& f = data->f;
    if (u < rect.u0 - snap || u > rect.u1 + snap || v < rect.v0 - snap ||
        v > rect.v1 + snap)
      throw DomainError("interpolation query outside the grid rectangle");

    const double h = f.h;
    int ci = static_cast<int>(std::floor((u - f.u0) / h));
    int cj = static_cast<int>(std::floor((v - f.v0) / h));
    ci = std::min(std::max(ci, 0), f.nx - 2);
    cj = std::min(std::max(cj, 0), f.ny - 2);

    // Hermite basis matrix: p(s) = [1 s s^2 s^3] M [p0 p1 m0 m1]^T with
    // tangents scaled by the cell width.
    const auto corner = [&](const GridField& q, int di, int dj) {
      return q.at(ci + di, cj + dj);
    };
    double F[4][4] = {
        {corner(data->f, 0, 0), corner(data->f, 0, 1),
         h * corner(data->fv, 0, 0), h * corner(data->fv, 0, 1)},
        {corner(data->f, 1, 0), corner(data->f, 1, 1),
         h * corner(data->fv, 1, 0), h * corner(data->fv, 1, 1)},
        {h * corner(data->fu, 0, 0), h * corner(data->fu, 0, 1),
         h * h * corner(data->fuv, 0, 0), h * h * corner(data->fuv, 0, 1)},
        {h * corner(data->fu, 1, 0), h * corner(data->fu, 1, 1),
         h * h * corner(data->fuv, 1, 0), h * h * corner(data->fuv, 1, 1)}};

    static const double M[4][4] = {{1, 0, 0, 0},
                                   {0, 0, 1, 0},
                                   {-3, 3, -2, -1},
                                   {2, -2, 1, 1}};
    // a = M F M^T: coefficients of sum a[p][q] s^p t^q
    double MF[4][4], a[4][4];
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        MF[p][q] = 0.0;
        for (int k = 0; k < 4; ++k) MF[p][q] += M[p][k] * F[k][q];
      }
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        a[p][q] = 0.0;
        for (int k = 0; k < 4; ++k) a[p][q] += MF[p][k] * M[q][k];
      }

    // local coordinates as jets: s = (u - u_i)/h has du-derivative 1/h
    Jet2d s = Jet2d::constant((u - f.u(ci)) / h, order);
    Jet2d t = Jet2d::constant((v - f.v(cj)) / h, order);
    if (order >= 1) {
      s.set_d(1, 0, 1.0 / h);
      t.set_d(0, 1, 1.0 / h);
    }

    // Horner in t then s
    Jet2d acc = Jet2d::constant(0.0, order);
    for (int p = 3; p >= 0; --p) {
      Jet2d row = Jet2d::constant(a[p][3], order);
      for (int q = 2; q >= 0; --q) row = row * t + a[p][q];
      acc = acc * s + row;
    }
    return acc;
  };
  return ScalarJetField(std::move(fn), std::move(breaks));
}

}  // namespace sasaki
