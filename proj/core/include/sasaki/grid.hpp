#pragma once

// Discrete rectangular samples of a scalar field, their CSV form
// (header "u,v,value", row-major with u fastest), and the bicubic
// interpolant that turns a grid back into a jet-capable field.

#include <string>
#include <vector>

#include "sasaki/field.hpp"

namespace sasaki {

struct GridField {
  int nx = 0;
  int ny = 0;
  double h = 0.0;   // uniform square spacing
  double u0 = 0.0;  // coordinates of node (0, 0)
  double v0 = 0.0;
  std::vector<double> values;  // idx = j * nx + i

  double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
  double at(int i, int j) const {
    return values[static_cast<std::size_t>(j) * nx + i];
  }
  double u(int i) const { return u0 + h * i; }
  double v(int j) const { return v0 + h * j; }
  Rect rect() const { return {u0, u(nx - 1), v0, v(ny - 1)}; }

  // nx, ny >= 3, h > 0, finite values; throws DomainError otherwise.
  void validate() const;
};

// Uniform grid over a rectangle; the rectangle must have square cells for
// the given node counts.
GridField make_grid(const Rect& r, int nx, int ny);

// Samples a field at the nodes.
GridField sample_to_grid(const ScalarJetField& f, const Rect& r, int n);

void write_grid_csv(const GridField& g, const std::string& path);
GridField read_grid_csv(const std::string& path);

// C^1 bicubic (Hermite) interpolant with difference-estimated node
// derivatives.  Reproduces node values exactly and supplies jets to order 3
// from the per-cell polynomial; queries outside the grid rectangle raise
// DomainError.  Requires at least a 4x4 grid.
ScalarJetField grid_to_field(const GridField& g);

}  // namespace sasaki
