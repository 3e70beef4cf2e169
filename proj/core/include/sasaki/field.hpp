#pragma once

// Scalar fields of (u,v) evaluable to jets, plus the point/rectangle types
// shared across the library.

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "sasaki/jet.hpp"

namespace sasaki {

struct Point2 {
  double u = 0.0;
  double v = 0.0;
};

struct Point3 {
  double r = 0.0;
  double u = 0.0;
  double v = 0.0;
};

struct Rect {
  double u0 = -1.0, u1 = 1.0;
  double v0 = -1.0, v1 = 1.0;

  bool contains(double u, double v) const {
    return u >= u0 && u <= u1 && v >= v0 && v <= v1;
  }
  double width() const { return u1 - u0; }
  double height() const { return v1 - v0; }
};

// A smooth function of (u,v) queryable for its jet up to order 3.
// Evaluation must be deterministic and thread-safe.
class ScalarJetField {
public:
  using Fn = std::function<Jet2d(double u, double v, int order)>;

  ScalarJetField() = default;
  explicit ScalarJetField(Fn fn, std::vector<double> v_breakpoints = {})
      : fn_(std::move(fn)), v_breaks_(std::move(v_breakpoints)) {}

  Jet2d eval(double u, double v, int order) const { return fn_(u, v, order); }

  // Knot locations of piecewise-polynomial fields (grid interpolants);
  // quadrature splits integration paths there.  Empty for smooth fields.
  const std::vector<double>& v_breakpoints() const { return v_breaks_; }

  explicit operator bool() const { return static_cast<bool>(fn_); }

private:
  Fn fn_;
  std::vector<double> v_breaks_;
};

// Complex-valued counterpart (carries e.g. the reduced torsion tau0).
class ComplexJetField {
public:
  using Fn = std::function<CJet2(double u, double v, int order)>;

  ComplexJetField() = default;
  explicit ComplexJetField(Fn fn) : fn_(std::move(fn)) {}

  CJet2 eval(double u, double v, int order) const { return fn_(u, v, order); }

  explicit operator bool() const { return static_cast<bool>(fn_); }

private:
  Fn fn_;
};

inline ScalarJetField constant_field(double c) {
  return ScalarJetField(
      [c](double, double, int order) { return Jet2d::constant(c, order); });
}

// Build a field from a jet-arithmetic expression of the coordinate jets.
template <class F>
ScalarJetField field_from(F&& f) {
  return ScalarJetField([f = std::forward<F>(f)](double u, double v, int order) {
    return f(Jet2d::variable(u, 0, order), Jet2d::variable(v, 1, order));
  });
}

template <class F>
ComplexJetField complex_field_from(F&& f) {
  return ComplexJetField([f = std::forward<F>(f)](double u, double v, int order) {
    return f(Jet2d::variable(u, 0, order), Jet2d::variable(v, 1, order));
  });
}

// Wirtinger derivatives of a real jet: d/dz = (d/du - i d/dv)/2 and its
// conjugate, returned one order lower.
inline CJet2 wirtinger_dz(const Jet2d& f) {
  const std::complex<double> half(0.5, 0.0), mihalf(0.0, -0.5);
  return complexify(f.deriv(0)) * half + complexify(f.deriv(1)) * mihalf;
}

inline CJet2 wirtinger_dzbar(const Jet2d& f) {
  const std::complex<double> half(0.5, 0.0), ihalf(0.0, 0.5);
  return complexify(f.deriv(0)) * half + complexify(f.deriv(1)) * ihalf;
}

inline CJet2 wirtinger_dz(const CJet2& f) {
  const std::complex<double> half(0.5, 0.0), mihalf(0.0, -0.5);
  return f.deriv(0) * half + f.deriv(1) * mihalf;
}

inline CJet2 wirtinger_dzbar(const CJet2& f) {
  const std::complex<double> half(0.5, 0.0), ihalf(0.0, 0.5);
  return f.deriv(0) * half + f.deriv(1) * ihalf;
}

}  // namespace sasaki
