#pragma once

// Truncated-Taylor ("jet") arithmetic in 2 or 3 coordinates, up to third
// order.  A jet stores the raw partial-derivative values d^|a| f / dx^a of a
// scalar quantity at a point; arithmetic on jets propagates derivatives
// exactly (Leibniz / Faa di Bruno), which is what every curvature computation
// in this library runs on.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <type_traits>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace detail {

constexpr int kBinom[7][7] = {
    {1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0}, {1, 2, 1, 0, 0, 0, 0},
    {1, 3, 3, 1, 0, 0, 0}, {1, 4, 6, 4, 1, 0, 0}, {1, 5, 10, 10, 5, 1, 0},
    {1, 6, 15, 20, 15, 6, 1}};

template <int N>
struct JetTraits;

// Graded-lexicographic multi-index tables.  Exponent rows list the power of
// each coordinate; index_of inverts the enumeration.
template <>
struct JetTraits<2> {
  static constexpr int kCoeffs = 10;
  static constexpr int kDegreeOffset[5] = {0, 1, 3, 6, 10};
  static constexpr int kExp[kCoeffs][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0},
                                           {1, 1}, {0, 2}, {3, 0}, {2, 1},
                                           {1, 2}, {0, 3}};
  static constexpr int index_of(int i, int j) {
    const int d = i + j;
    return kDegreeOffset[d] + (d - i);
  }
};

template <>
struct JetTraits<3> {
  static constexpr int kCoeffs = 20;
  static constexpr int kDegreeOffset[5] = {0, 1, 4, 10, 20};
  static constexpr int kExp[kCoeffs][3] = {
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
      {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2},
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
      {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
  static constexpr int index_of(int a, int b, int c) {
    const int d = a + b + c;
    const int da = d - a;
    return kDegreeOffset[d] + da * (da + 1) / 2 + (da - b);
  }
};

template <class S>
struct ScalarOf {
  using type = S;
};
template <class T>
struct ScalarOf<std::complex<T>> {
  using type = T;
};

}  // namespace detail

template <int N, class S>
class Jet {
  static_assert(N == 2 || N == 3, "jets are specialized to 2 or 3 coordinates");

public:
  using Traits = detail::JetTraits<N>;
  using Scalar = S;
  using Real = typename detail::ScalarOf<S>::type;
  static constexpr int kMaxOrder = 3;
  static constexpr int kCoeffs = Traits::kCoeffs;

  Jet() : order_(0) { c_.fill(S{}); }

  static Jet constant(S value, int order) {
    Jet j;
    j.order_ = clamp_order(order);
    j.c_[0] = value;
    return j;
  }

  // Coordinate seed: value with unit first derivative along `axis`.
  static Jet variable(S value, int axis, int order) {
    Jet j = constant(value, order);
    if (j.order_ >= 1) j.c_[1 + axis] = S{1};
    return j;
  }

  int order() const { return order_; }

  Jet truncated(int order) const {
    Jet j = *this;
    j.order_ = clamp_order(order < order_ ? order : order_);
    for (int k = 0; k < kCoeffs; ++k)
      if (degree(k) > j.order_) j.c_[k] = S{};
    return j;
  }

  S value() const { return c_[0]; }
  S& value() { return c_[0]; }

  // Raw partial-derivative access by exponent.
  template <int M = N, std::enable_if_t<M == 2, int> = 0>
  S d(int i, int j) const {
    return c_[Traits::index_of(i, j)];
  }
  template <int M = N, std::enable_if_t<M == 3, int> = 0>
  S d(int a, int b, int c) const {
    return c_[Traits::index_of(a, b, c)];
  }
  template <int M = N, std::enable_if_t<M == 2, int> = 0>
  void set_d(int i, int j, S v) {
    c_[Traits::index_of(i, j)] = v;
  }
  template <int M = N, std::enable_if_t<M == 3, int> = 0>
  void set_d(int a, int b, int c, S v) {
    c_[Traits::index_of(a, b, c)] = v;
  }

  S coeff(int k) const { return c_[k]; }
  S& coeff(int k) { return c_[k]; }
  static int degree(int k) {
    int d = 0;
    for (int i = 0; i < N; ++i) d += Traits::kExp[k][i];
    return d;
  }

  // d/dx_axis, dropping one order.
  Jet deriv(int axis) const {
    if (order_ == 0) throw CapabilityError("jet carries no derivatives to shift");
    Jet out;
    out.order_ = order_ - 1;
    for (int k = 0; k < kCoeffs; ++k) {
      if (degree(k) > out.order_) continue;
      int e[3] = {};
      for (int i = 0; i < N; ++i) e[i] = Traits::kExp[k][i];
      e[axis] += 1;
      if constexpr (N == 2)
        out.c_[k] = c_[Traits::index_of(e[0], e[1])];
      else
        out.c_[k] = c_[Traits::index_of(e[0], e[1], e[2])];
    }
    return out;
  }

  Jet operator-() const {
    Jet out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet out;
    out.order_ = a.order_ < b.order_ ? a.order_ : b.order_;
    for (int k = 0; k < kCoeffs; ++k)
      out.c_[k] = degree(k) <= out.order_ ? a.c_[k] + b.c_[k] : S{};
    return out;
  }
  friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet out;
    out.order_ = a.order_ < b.order_ ? a.order_ : b.order_;
    for (int ka = 0; ka < kCoeffs; ++ka) {
      if (degree(ka) > out.order_ || a.c_[ka] == S{}) continue;
      for (int kb = 0; kb < kCoeffs; ++kb) {
        const int d = degree(ka) + degree(kb);
        if (d > out.order_) continue;
        int e[3] = {};
        Real factor = 1;
        for (int i = 0; i < N; ++i) {
          e[i] = Traits::kExp[ka][i] + Traits::kExp[kb][i];
          factor *= detail::kBinom[e[i]][Traits::kExp[ka][i]];
        }
        int ko;
        if constexpr (N == 2)
          ko = Traits::index_of(e[0], e[1]);
        else
          ko = Traits::index_of(e[0], e[1], e[2]);
        out.c_[ko] += S(factor) * a.c_[ka] * b.c_[kb];
      }
    }
    return out;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

  friend Jet operator+(const Jet& a, S s) {
    Jet out = a;
    out.c_[0] += s;
    return out;
  }
  friend Jet operator+(S s, const Jet& a) { return a + s; }
  friend Jet operator-(const Jet& a, S s) { return a + (-s); }
  friend Jet operator-(S s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(const Jet& a, S s) {
    Jet out = a;
    for (auto& v : out.c_) v *= s;
    return out;
  }
  friend Jet operator*(S s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, S s) { return a * (S{1} / s); }
  friend Jet operator/(S s, const Jet& a) { return reciprocal(a) * s; }

  // h(f) for smooth h given h and its first three derivatives at f's value.
  // p = f - f0 is nilpotent at this truncation order, so the cubic Taylor
  // expansion of h is exact.
  friend Jet apply_smooth(const Jet& f, S h0, S h1, S h2, S h3) {
    Jet p = f;
    p.c_[0] = S{};
    Jet out = p * h1;
    out.c_[0] = h0;
    if (f.order_ >= 2) {
      Jet p2 = p * p;
      out = out + p2 * (h2 / S{2});
      if (f.order_ >= 3) out = out + p2 * p * (h3 / S{6});
    }
    return out;
  }

  friend Jet reciprocal(const Jet& f) {
    const S v = f.c_[0];
    if (v == S{}) throw DomainError("division by a jet with zero value");
    const S i1 = S{1} / v, i2 = i1 * i1;
    return apply_smooth(f, i1, -i2, S{2} * i2 * i1, S{-6} * i2 * i2);
  }

private:
  static int clamp_order(int order) {
    if (order < 0) return 0;
    return order > kMaxOrder ? kMaxOrder : order;
  }

  int order_;
  std::array<S, kCoeffs> c_;
};

using Jet2d = Jet<2, double>;
using Jet3d = Jet<3, double>;
using CJet2 = Jet<2, std::complex<double>>;
using CJet3 = Jet<3, std::complex<double>>;

// ---- elementary functions on real jets ------------------------------------

template <int N>
Jet<N, double> exp(const Jet<N, double>& f) {
  const double e = std::exp(f.value());
  return apply_smooth(f, e, e, e, e);
}

template <int N>
Jet<N, double> log(const Jet<N, double>& f) {
  const double v = f.value();
  if (v <= 0.0) throw DomainError("log of a non-positive value");
  const double i1 = 1.0 / v;
  return apply_smooth(f, std::log(v), i1, -i1 * i1, 2.0 * i1 * i1 * i1);
}

template <int N>
Jet<N, double> sqrt(const Jet<N, double>& f) {
  const double v = f.value();
  if (v < 0.0) throw DomainError("sqrt of a negative value");
  if (v == 0.0) throw DomainError("sqrt derivative singular at zero");
  const double s = std::sqrt(v);
  return apply_smooth(f, s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
}

template <int N>
Jet<N, double> pow(const Jet<N, double>& f, double p) {
  const double v = f.value();
  if (v <= 0.0) {
    // non-positive bases are only differentiable for integer exponents,
    // and zero bases additionally need p >= 0
    if (std::nearbyint(p) != p || (v == 0.0 && p < 0.0))
      throw DomainError("pow of a non-positive base");
  }
  // guard each term by its falling-factorial coefficient so that zero
  // coefficients suppress the (possibly singular) power
  const auto term = [v](double coeff, double expo) {
    return coeff == 0.0 ? 0.0 : coeff * std::pow(v, expo);
  };
  const double h0 = std::pow(v, p);
  const double h1 = term(p, p - 1);
  const double h2 = term(p * (p - 1), p - 2);
  const double h3 = term(p * (p - 1) * (p - 2), p - 3);
  return apply_smooth(f, h0, h1, h2, h3);
}

template <int N>
Jet<N, double> sin(const Jet<N, double>& f) {
  const double s = std::sin(f.value()), c = std::cos(f.value());
  return apply_smooth(f, s, c, -s, -c);
}

template <int N>
Jet<N, double> cos(const Jet<N, double>& f) {
  const double s = std::sin(f.value()), c = std::cos(f.value());
  return apply_smooth(f, c, -s, -c, s);
}

template <int N>
Jet<N, double> tan(const Jet<N, double>& f) {
  const double t = std::tan(f.value());
  const double s = 1.0 + t * t;  // sec^2
  return apply_smooth(f, t, s, 2.0 * s * t, s * (4.0 * t * t + 2.0 * s));
}

template <int N>
Jet<N, double> atan(const Jet<N, double>& f) {
  const double v = f.value();
  const double q = 1.0 / (1.0 + v * v);
  return apply_smooth(f, std::atan(v), q, -2.0 * v * q * q,
                      (6.0 * v * v - 2.0) * q * q * q);
}

template <int N>
Jet<N, double> sinh(const Jet<N, double>& f) {
  const double s = std::sinh(f.value()), c = std::cosh(f.value());
  return apply_smooth(f, s, c, s, c);
}

template <int N>
Jet<N, double> cosh(const Jet<N, double>& f) {
  const double s = std::sinh(f.value()), c = std::cosh(f.value());
  return apply_smooth(f, c, s, c, s);
}

template <int N>
Jet<N, double> tanh(const Jet<N, double>& f) {
  const double t = std::tanh(f.value());
  const double s = 1.0 - t * t;  // sech^2
  return apply_smooth(f, t, s, -2.0 * s * t, s * (4.0 * t * t - 2.0 * s));
}

template <int N>
Jet<N, double> atanh(const Jet<N, double>& f) {
  const double v = f.value();
  if (std::abs(v) >= 1.0 - 1e-12)
    throw DomainError("atanh argument at or beyond +-1");
  const double q = 1.0 / (1.0 - v * v);
  return apply_smooth(f, std::atanh(v), q, 2.0 * v * q * q,
                      (6.0 * v * v + 2.0) * q * q * q);
}

template <int N>
Jet<N, double> abs(const Jet<N, double>& f) {
  return f.value() >= 0.0 ? f : -f;
}

// exp for complex jets (frame phase factors e^{-ir}).
template <int N>
Jet<N, std::complex<double>> exp(const Jet<N, std::complex<double>>& f) {
  const std::complex<double> e = std::exp(f.value());
  return apply_smooth(f, e, e, e, e);
}

template <int N>
Jet<N, std::complex<double>> conj(const Jet<N, std::complex<double>>& f) {
  Jet<N, std::complex<double>> out = f;
  for (int k = 0; k < Jet<N, std::complex<double>>::kCoeffs; ++k)
    out.coeff(k) = std::conj(out.coeff(k));
  return out;
}

template <int N>
Jet<N, std::complex<double>> complexify(const Jet<N, double>& f) {
  Jet<N, std::complex<double>> out =
      Jet<N, std::complex<double>>::constant({}, f.order());
  for (int k = 0; k < Jet<N, double>::kCoeffs; ++k)
    out.coeff(k) = std::complex<double>(f.coeff(k), 0.0);
  return out;
}

template <int N>
Jet<N, double> real_part(const Jet<N, std::complex<double>>& f) {
  Jet<N, double> out = Jet<N, double>::constant(0.0, f.order());
  for (int k = 0; k < Jet<N, double>::kCoeffs; ++k)
    out.coeff(k) = f.coeff(k).real();
  return out;
}

template <int N>
Jet<N, double> imag_part(const Jet<N, std::complex<double>>& f) {
  Jet<N, double> out = Jet<N, double>::constant(0.0, f.order());
  for (int k = 0; k < Jet<N, double>::kCoeffs; ++k)
    out.coeff(k) = f.coeff(k).imag();
  return out;
}

// Embed a (u,v) jet into (r,u,v) with vanishing r-derivatives.
template <class S>
Jet<3, S> lift_uv(const Jet<2, S>& f) {
  Jet<3, S> out = Jet<3, S>::constant(S{}, f.order());
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      if (i + j > f.order()) continue;
      out.set_d(0, i, j, f.d(i, j));
    }
  return out;
}

// ---- small dense linear algebra over an arbitrary ring ---------------------

template <class T>
struct Vec3 {
  std::array<T, 3> c{};
  T& operator[](int i) { return c[i]; }
  const T& operator[](int i) const { return c[i]; }
};

template <class T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> m{};
  std::array<T, 3>& operator[](int i) { return m[i]; }
  const std::array<T, 3>& operator[](int i) const { return m[i]; }

  friend T det(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }

  // Adjugate inverse; caller checks the determinant for degeneracy first.
  friend Mat3 inverse(const Mat3& a) {
    const T dd = det(a);
    Mat3 out;
    out[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / dd;
    out[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / dd;
    out[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / dd;
    out[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / dd;
    out[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / dd;
    out[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / dd;
    out[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / dd;
    out[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / dd;
    out[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / dd;
    return out;
  }
};

}  // namespace sasaki
