#pragma once

#include "elevenvertex/matrix.hpp"
#include "elevenvertex/poly.hpp"
#include "elevenvertex/rational.hpp"

#include <utility>

namespace elv::tops {

// 2x2 matrix of generators at positions base..base+3 (row major).
Mat2<Poly> spin_symbols(const VarTablePtr& tab, int base);

// Lax matrices and inertia tensors for the three descriptions of the
// rational top. Spectral parameters stay in an exact or floating field K
// (divisions happen there); matrix entries live in the ring T, so the same
// formulas serve numeric states, integrator states and symbolic identity
// checks.

template <class K, class T>
Mat2<T> lax_nonrel(const K& z, const Mat2<T>& S) {
  K zi = K(1) / z;
  T zt = T(z), zit = T(zi), z3 = T(z * z * z);
  T d = S(0, 0) - S(1, 1);
  return Mat2<T>(zit * S(0, 0) - zt * S(0, 1), zit * S(0, 1),
                 zit * S(1, 0) - zt * d - z3 * S(0, 1),
                 zit * S(1, 1) + zt * S(0, 1));
}

// Scaled family: eps=1 is the plain Lax matrix, eps=0 the isotropic S/z.
template <class K, class T>
Mat2<T> lax_nonrel_eps(const K& z, const Mat2<T>& S, const K& eps) {
  K zi = K(1) / z;
  K e2 = eps * eps;
  T zt = T(e2 * z), zit = T(zi), z3 = T(e2 * e2 * z * z * z);
  T d = S(0, 0) - S(1, 1);
  return Mat2<T>(zit * S(0, 0) - zt * S(0, 1), zit * S(0, 1),
                 zit * S(1, 0) - zt * d - z3 * S(0, 1),
                 zit * S(1, 1) + zt * S(0, 1));
}

template <class T>
Mat2<T> inertia_j(const Mat2<T>& S) {
  T d = S(0, 0) - S(1, 1);
  return Mat2<T>(-S(0, 1), T(0), -d, S(0, 1));
}

template <class K, class T>
Mat2<T> m_cal(const K& z, const Mat2<T>& S) {
  T d = S(0, 0) - S(1, 1);
  return Mat2<T>(-S(0, 1), T(0), -d - T(2 * z * z) * S(0, 1), S(0, 1));
}

template <class K, class T>
Mat2<T> m_cal_eps(const K& z, const Mat2<T>& S, const K& eps) {
  K e2 = eps * eps;
  T d = S(0, 0) - S(1, 1);
  return Mat2<T>(T(e2) * -S(0, 1), T(0), T(e2) * -d - T(2 * e2 * e2 * z * z) * S(0, 1),
                 T(e2) * S(0, 1));
}

// L(z)/z - m_cal(z):  S/z^2 plus a single z^2 corner entry.
template <class K, class T>
Mat2<T> m_tilde(const K& z, const Mat2<T>& S) {
  K zi2 = K(1) / (z * z);
  T a = T(zi2);
  return Mat2<T>(a * S(0, 0), a * S(0, 1), a * S(1, 0) + T(z * z) * S(0, 1),
                 a * S(1, 1));
}

template <class K, class T>
Mat2<T> lax_eta(const K& z, const Mat2<T>& S, const T& eta, const T& eta_inv) {
  K zi = K(1) / z;
  T zt = T(z), zit = T(zi);
  T tr = S(0, 0) + S(1, 1);
  T d = S(0, 0) - S(1, 1);
  T zfac = zt + eta;
  T quad = eta * eta + T(z * z) + eta * zt;
  return Mat2<T>(zit * S(0, 0) + tr * eta_inv - zfac * S(0, 1), zit * S(0, 1),
                 zit * S(1, 0) - zfac * (d + quad * S(0, 1)),
                 zit * S(1, 1) + tr * eta_inv + zfac * S(0, 1));
}

template <class T>
Mat2<T> inertia_j_eta(const Mat2<T>& S, const T& eta, const T& eta_inv) {
  T tr = S(0, 0) + S(1, 1);
  T d = S(0, 0) - S(1, 1);
  T e3 = eta * eta * eta;
  return Mat2<T>(tr * eta_inv - eta * S(0, 1), T(0), -e3 * S(0, 1) - eta * d,
                 tr * eta_inv + eta * S(0, 1));
}

template <class K, class T>
Mat2<T> lax_tilde(const K& z, const T& S0, const Mat2<T>& S) {
  K zi = K(1) / z;
  T zt = T(z), z3 = T(z * z * z);
  T half_zi = T(zi / K(2)), zit = T(zi);
  T d = S(0, 0) - S(1, 1);
  return Mat2<T>(S0 + half_zi * d - zt * S(0, 1), zit * S(0, 1),
                 zit * S(1, 0) - zt * d - z3 * S(0, 1),
                 S0 - half_zi * d + zt * S(0, 1));
}

// The eta-description spin built out of the eta-free one.
template <class K, class T>
Mat2<T> change_vars(const K& eta, const T& S0, const Mat2<T>& S) {
  Mat2<T> l = lax_tilde(eta / K(2), S0, S);
  return T(K(1) / K(2)) * l;
}

// Component form of the same change of variables, solved for the eta-free
// side (traceless convention for the sl2 part).
template <class K, class T>
std::pair<T, Mat2<T>> tilde_from_eta(const K& eta, const Mat2<T>& A) {
  K e3 = eta * eta * eta;
  K e5 = e3 * eta * eta;
  T d = A(0, 0) - A(1, 1);
  T s0 = A(0, 0) + A(1, 1);
  T dt = T(eta) * d + T(e3 / K(2)) * A(0, 1);
  T t12 = T(eta) * A(0, 1);
  T t21 = T(eta) * A(1, 0) + T(e3 / K(4)) * d + T(e5 * K(3) / K(16)) * A(0, 1);
  T half = T(K(1) / K(2));
  return {s0, Mat2<T>(half * dt, t12, t21, -(half * dt))};
}

// Hamiltonians and Casimir candidates.
template <class T>
T ham_top(const Mat2<T>& S) {
  return -(S(0, 1) * (S(0, 0) - S(1, 1)));
}

template <class T>
T casimir_c1(const Mat2<T>& S) {
  return S.trace();
}

// (1/2) tr S^2; the centrality-certified form.
template <class T>
T casimir_c2(const Mat2<T>& S) {
  T half = T(Rat(1, 2));
  return half * (S(0, 0) * S(0, 0) + S(1, 1) * S(1, 1)) + S(0, 1) * S(1, 0);
}

// The parenthetical variant with coefficient 1/2 on the off-diagonal
// product; kept only so the verify report can show its residual.
template <class T>
T casimir_c2_printed(const Mat2<T>& S) {
  T half = T(Rat(1, 2));
  return half * (S(0, 0) * S(0, 0) + S(1, 1) * S(1, 1) + S(0, 1) * S(1, 0));
}

template <class T>
T casimir_eta_c2(const Mat2<T>& A) {
  return A.det();
}

template <class K, class T>
T casimir_eta_c1(const Mat2<T>& A, const K& eta) {
  K e2 = eta * eta;
  T s = A(0, 0) + A(1, 1) + T(e2) * A(0, 1);
  return s * s - T(4 * e2) * (A(0, 1) * A(1, 1));
}

template <class T>
T casimir_tilde_c2(const Mat2<T>& S) {
  T d = S(0, 0) - S(1, 1);
  return T(Rat(-1, 4)) * (d * d) - S(0, 1) * S(1, 0);
}

template <class T>
T casimir_tilde_c0(const T& S0, const Mat2<T>& S) {
  return S0 * S0 + T(2) * (S(0, 1) * (S(0, 0) - S(1, 1)));
}

// As printed, with the inner difference ending in the 12-entry; reported,
// not asserted.
template <class T>
T casimir_tilde_c0_printed(const T& S0, const Mat2<T>& S) {
  return S0 * S0 + T(2) * (S(0, 1) * (S(0, 0) - S(0, 1)));
}

// Euler flows.
template <class T>
Mat2<T> top_rhs(const Mat2<T>& S) {
  return comm(S, inertia_j(S));
}

template <class K, class T>
Mat2<T> top_rhs_eps(const Mat2<T>& S, const K& eps) {
  return T(eps * eps) * comm(S, inertia_j(S));
}

template <class T>
Mat2<T> eta_top_rhs(const Mat2<T>& A, const T& eta, const T& eta_inv) {
  return comm(A, inertia_j_eta(A, eta, eta_inv));
}

// Printed component flows, used as oracles against the bracket engine.
template <class T>
Mat2<T> printed_flow_nonrel(const Mat2<T>& S) {
  T d = S(0, 0) - S(1, 1);
  T s12 = S(0, 1);
  return Mat2<T>(-(s12 * d), T(2) * (s12 * s12), d * d - T(2) * (s12 * S(1, 0)),
                 s12 * d);
}

template <class K, class T>
Mat2<T> printed_flow_eta(const Mat2<T>& A, const K& eta) {
  T e = T(eta), e2 = T(eta * eta);
  T d = A(0, 0) - A(1, 1);
  T a12 = A(0, 1);
  T d11 = -(e * (a12 * (d + e2 * a12)));
  T d12 = T(2) * e * (a12 * a12);
  T d21 = e * (d * d - T(2) * (a12 * A(1, 0)) + e2 * (d * a12));
  return Mat2<T>(d11, d12, d21, -d11);
}

// L(z, L(z,S)) - S/z^2 - 2 J(S); identically zero.
template <class K, class T>
Mat2<T> nested_lax_residual(const K& z, const Mat2<T>& S) {
  Mat2<T> inner = lax_nonrel(z, S);
  Mat2<T> outer = lax_nonrel(z, inner);
  K zi2 = K(1) / (z * z);
  return outer - T(zi2) * S - T(2) * inertia_j(S);
}

// (1/2) J^{2z}(Ltilde(z)) - m_cal(z, S) - S0/(2z) * 1; identically zero.
template <class K, class T>
Mat2<T> m_from_j_residual(const K& z, const T& S0, const Mat2<T>& S) {
  Mat2<T> lt = lax_tilde(z, S0, S);
  K two_z = K(2) * z;
  Mat2<T> j = inertia_j_eta(lt, T(two_z), T(K(1) / two_z));
  T half = T(Rat(1, 2));
  return half * j - m_cal(z, S) - scaled_identity(T(K(1) / two_z) * S0);
}

// L^eta(z - eta/2, Ltilde(eta/2, S)) - phi * Ltilde(z, S) with
// phi = 2z / ((z - eta/2) eta); identically zero.
template <class K, class T>
Mat2<T> intertwine_residual(const K& z, const K& eta, const T& S0, const Mat2<T>& S) {
  K u = z - eta / K(2);
  Mat2<T> inner = lax_tilde(eta / K(2), S0, S);
  Mat2<T> lhs = lax_eta(u, inner, T(eta), T(K(1) / eta));
  K phi = K(2) * z / (u * eta);
  return lhs - T(phi) * lax_tilde(z, S0, S);
}

}  // namespace elv::tops
