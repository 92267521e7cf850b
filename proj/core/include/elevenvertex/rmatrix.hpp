#pragma once

#include "elevenvertex/laurent.hpp"
#include "elevenvertex/matrix.hpp"
#include "elevenvertex/rational.hpp"

namespace elv::rmatrix {

// The rational 11-vertex solution and its classical limit. Exact entries
// throughout; limits and series are coefficient extractions, never numeric.

TensorMat<Rat> perm() /* P12 */;

// Quantum matrix at numeric (hbar, z); eps scales the family so that eps=1
// is the plain matrix and eps=0 is the isotropic XXX degeneration.
TensorMat<Rat> quantum_R(const Rat& hbar, const Rat& z, const Rat& eps = Rat(1));

// Classical matrix r(z) (equivalently the hbar-free part of quantum_R).
TensorMat<Rat> classical_r(const Rat& z, const Rat& eps = Rat(1));

// Symbolic entries: Laurent in (z, hbar).
TensorMat<Laurent2> quantum_R_sym();
// Symbolic entries of the scaled classical family: Laurent in (z, eps).
TensorMat<Laurent2> classical_r_eps_sym();
// Symbolic entries of r(z): Laurent in (z, unused-second-slot).
TensorMat<Laurent2> classical_r_sym();

// z^k series coefficient; k = -1 returns P12.
TensorMat<Rat> series_coeff_R(const Rat& hbar, int k);
TensorMat<Rat> series_coeff_r(int k);

// [r12(z-w), r13(z)] + [r12(z-w), r23(w)] + [r13(z), r23(w)]  (expected 0).
TensorMat<Rat> cybe_residual(const Rat& z, const Rat& w, const Rat& eps = Rat(1));

// R12(z-w) R13(z) R23(w) - R23(w) R13(z) R12(z-w)  (checked, reported).
TensorMat<Rat> qybe_residual(const Rat& hbar, const Rat& z, const Rat& w,
                             const Rat& eps = Rat(1));

}  // namespace elv::rmatrix
