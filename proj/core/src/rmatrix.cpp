#include "elevenvertex/rmatrix.hpp"

#include <stdexcept>

namespace elv::rmatrix {

TensorMat<Rat> perm() { return perm12<Rat>(); }

TensorMat<Rat> quantum_R(const Rat& hbar, const Rat& z, const Rat& eps) {
  if (hbar == 0 || z == 0) throw std::domain_error("quantum_R: pole at hbar=0 or z=0");
  TensorMat<Rat> m(4);
  Rat hi = Rat(1) / hbar, zi = Rat(1) / z;
  Rat e2 = eps * eps, e4 = e2 * e2;
  Rat hz = hbar + z;
  m.at(0, 0) = hi + zi;
  m.at(1, 0) = -e2 * hz;
  m.at(2, 0) = -e2 * hz;
  m.at(3, 0) = -e4 * hz * (hbar * hbar + hbar * z + z * z);
  m.at(1, 1) = hi;
  m.at(2, 2) = hi;
  m.at(1, 2) = zi;
  m.at(2, 1) = zi;
  m.at(3, 1) = e2 * hz;
  m.at(3, 2) = e2 * hz;
  m.at(3, 3) = hi + zi;
  return m;
}

TensorMat<Rat> classical_r(const Rat& z, const Rat& eps) {
  if (z == 0) throw std::domain_error("classical_r: pole at z=0");
  TensorMat<Rat> m(4);
  Rat zi = Rat(1) / z;
  Rat e2 = eps * eps, e4 = e2 * e2;
  m.at(0, 0) = zi;
  m.at(1, 0) = -e2 * z;
  m.at(2, 0) = -e2 * z;
  m.at(3, 0) = -e4 * z * z * z;
  m.at(1, 2) = zi;
  m.at(2, 1) = zi;
  m.at(3, 1) = e2 * z;
  m.at(3, 2) = e2 * z;
  m.at(3, 3) = zi;
  return m;
}

TensorMat<Laurent2> quantum_R_sym() {
  // Exponent slots: (z, hbar).
  auto t = [](long long c, int ez, int eh) { return Laurent2::term(Rat(c), ez, eh); };
  TensorMat<Laurent2> m(4);
  Laurent2 diag = t(1, 0, -1) + t(1, -1, 0);
  Laurent2 hz = t(1, 0, 1) + t(1, 1, 0);
  m.at(0, 0) = diag;
  m.at(1, 0) = -hz;
  m.at(2, 0) = -hz;
  m.at(3, 0) = -(t(1, 0, 3) + t(2, 1, 2) + t(2, 2, 1) + t(1, 3, 0));
  m.at(1, 1) = t(1, 0, -1);
  m.at(2, 2) = t(1, 0, -1);
  m.at(1, 2) = t(1, -1, 0);
  m.at(2, 1) = t(1, -1, 0);
  m.at(3, 1) = hz;
  m.at(3, 2) = hz;
  m.at(3, 3) = diag;
  return m;
}

TensorMat<Laurent2> classical_r_eps_sym() {
  // Exponent slots: (z, eps).
  auto t = [](long long c, int ez, int ee) { return Laurent2::term(Rat(c), ez, ee); };
  TensorMat<Laurent2> m(4);
  m.at(0, 0) = t(1, -1, 0);
  m.at(1, 0) = t(-1, 1, 2);
  m.at(2, 0) = t(-1, 1, 2);
  m.at(3, 0) = t(-1, 3, 4);
  m.at(1, 2) = t(1, -1, 0);
  m.at(2, 1) = t(1, -1, 0);
  m.at(3, 1) = t(1, 1, 2);
  m.at(3, 2) = t(1, 1, 2);
  m.at(3, 3) = t(1, -1, 0);
  return m;
}

TensorMat<Laurent2> classical_r_sym() {
  auto t = [](long long c, int ez) { return Laurent2::term(Rat(c), ez, 0); };
  TensorMat<Laurent2> m(4);
  m.at(0, 0) = t(1, -1);
  m.at(1, 0) = t(-1, 1);
  m.at(2, 0) = t(-1, 1);
  m.at(3, 0) = t(-1, 3);
  m.at(1, 2) = t(1, -1);
  m.at(2, 1) = t(1, -1);
  m.at(3, 1) = t(1, 1);
  m.at(3, 2) = t(1, 1);
  m.at(3, 3) = t(1, -1);
  return m;
}

TensorMat<Rat> series_coeff_R(const Rat& hbar, int k) {
  if (k < -1) throw std::invalid_argument("series_coeff_R: k must be >= -1");
  auto sym = quantum_R_sym();
  TensorMat<Rat> m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = sym.at(i, j).coeff_first(k).eval(Rat(1), hbar);
  return m;
}

TensorMat<Rat> series_coeff_r(int k) {
  auto sym = classical_r_sym();
  TensorMat<Rat> m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = sym.at(i, j).coeff(k, 0);
  return m;
}

TensorMat<Rat> cybe_residual(const Rat& z, const Rat& w, const Rat& eps) {
  if (z == 0 || w == 0 || z == w)
    throw std::domain_error("cybe_residual: pole collision");
  auto r12 = embed(classical_r(z - w, eps), Legs::L12);
  auto r13 = embed(classical_r(z, eps), Legs::L13);
  auto r23 = embed(classical_r(w, eps), Legs::L23);
  return comm(r12, r13) + comm(r12, r23) + comm(r13, r23);
}

TensorMat<Rat> qybe_residual(const Rat& hbar, const Rat& z, const Rat& w, const Rat& eps) {
  if (hbar == 0 || z == 0 || w == 0 || z == w)
    throw std::domain_error("qybe_residual: pole collision");
  auto R12 = embed(quantum_R(hbar, z - w, eps), Legs::L12);
  auto R13 = embed(quantum_R(hbar, z, eps), Legs::L13);
  auto R23 = embed(quantum_R(hbar, w, eps), Legs::L23);
  return R12 * R13 * R23 - R23 * R13 * R12;
}

}  // namespace elv::rmatrix
