#pragma once

// Orthonormal frames (triads) with jet-carrying components, and their
// complexification e+ = (e1 - i e2)/sqrt(2), e- = conj(e+).  An adapted
// frame may in addition carry the phase rotation e+ -> e^{-ir} e+ that
// gauges away the spin coefficient epsilon on normal-form structures.

#include <functional>

#include "sasaki/metric.hpp"

namespace sasaki {

struct TriadJets {
  Vec3<Jet3d> e0, e1, e2;
  bool phase_rotated = false;
};

class Triad {
public:
  using Fn = std::function<TriadJets(const Point3&, int order)>;

  Triad() = default;
  explicit Triad(Fn fn) : fn_(std::move(fn)) {}

  TriadJets jets(const Point3& p, int order) const { return fn_(p, order); }

  explicit operator bool() const { return static_cast<bool>(fn_); }

private:
  Fn fn_;
};

// The coordinate frame d/dr, d/du, d/dv (orthonormal for the Euclidean
// metric), without phase rotation.
Triad cartesian_triad();

// Complex frame at a point: e0 real, e+ = phase * (e1 - i e2)/sqrt(2).
struct ComplexFrameJets {
  Vec3<CJet3> e0, ep, em;
};

ComplexFrameJets complex_frame(const TriadJets& t, const Point3& p, int order);

// max |g(e_a, e_b) - delta_ab| over the six frame inner products.
double orthonormality_residual(const MetricEvaluator& metric, const Triad& triad,
                               const Point3& p);

}  // namespace sasaki
