#pragma once

// Metric representation: a point evaluator returning the symmetric component
// matrix g_ij together with its coordinate derivatives, packaged as jets in
// the three coordinates (r, u, v).

#include <array>
#include <functional>
#include <memory>
#include <string>

#include "sasaki/field.hpp"
#include "sasaki/jet.hpp"

namespace sasaki {

using MetricJets = Mat3<Jet3d>;

class MetricEvaluator {
public:
  virtual ~MetricEvaluator() = default;

  // Symmetric g_ij at p with derivatives to the requested order (<= 3).
  virtual MetricJets components(const Point3& p, int order) const = 0;

  // Highest derivative order this metric can supply.
  virtual int max_order() const { return 3; }

  virtual std::array<std::string, 3> coordinate_names() const {
    return {"r", "u", "v"};
  }
};

using MetricPtr = std::shared_ptr<const MetricEvaluator>;

class EuclideanMetric final : public MetricEvaluator {
public:
  MetricJets components(const Point3&, int order) const override {
    MetricJets g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        g[i][j] = Jet3d::constant(i == j ? 1.0 : 0.0, order);
    return g;
  }
};

// Metric backed by an arbitrary jet-producing callable, with a declared
// derivative capability.  Handy for closed-form metrics and test doubles.
class FunctionMetric final : public MetricEvaluator {
public:
  using Fn = std::function<MetricJets(const Point3&, int order)>;

  FunctionMetric(Fn fn, int max_order = 3,
                 std::array<std::string, 3> names = {"r", "u", "v"})
      : fn_(std::move(fn)), max_order_(max_order), names_(names) {}

  MetricJets components(const Point3& p, int order) const override {
    return fn_(p, order);
  }
  int max_order() const override { return max_order_; }
  std::array<std::string, 3> coordinate_names() const override { return names_; }

private:
  Fn fn_;
  int max_order_;
  std::array<std::string, 3> names_;
};

// Coordinate jets of a point, seeded for jet-arithmetic metric definitions.
inline std::array<Jet3d, 3> coordinate_jets(const Point3& p, int order) {
  return {Jet3d::variable(p.r, 0, order), Jet3d::variable(p.u, 1, order),
          Jet3d::variable(p.v, 2, order)};
}

}  // namespace sasaki
