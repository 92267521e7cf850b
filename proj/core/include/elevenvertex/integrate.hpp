#pragma once

#include "elevenvertex/matrix.hpp"

#include <cstddef>
#include <vector>

namespace elv {

// Minimal vector-space hooks used by the classical RK4 stepper.
inline Mat2<double> vs_add(const Mat2<double>& a, const Mat2<double>& b) { return a + b; }
inline Mat2<double> vs_scale(double s, const Mat2<double>& a) { return s * a; }

struct PQ {
  double p = 0, q = 0;
};
inline PQ vs_add(const PQ& a, const PQ& b) { return {a.p + b.p, a.q + b.q}; }
inline PQ vs_scale(double s, const PQ& a) { return {s * a.p, s * a.q}; }

template <class T>
std::vector<T> vs_add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = vs_add(a[i], b[i]);
  return r;
}
template <class T>
std::vector<T> vs_scale(double s, const std::vector<T>& a) {
  std::vector<T> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = vs_scale(s, a[i]);
  return r;
}

template <class Y, class F>
Y rk4_step(const Y& y, double dt, F&& rhs) {
  Y k1 = rhs(y);
  Y k2 = rhs(vs_add(y, vs_scale(dt / 2, k1)));
  Y k3 = rhs(vs_add(y, vs_scale(dt / 2, k2)));
  Y k4 = rhs(vs_add(y, vs_scale(dt, k3)));
  Y incr = vs_add(vs_add(k1, vs_scale(2, k2)), vs_add(vs_scale(2, k3), k4));
  return vs_add(y, vs_scale(dt / 6, incr));
}

}  // namespace elv
