#pragma once

#include "elevenvertex/matrix.hpp"
#include "elevenvertex/poly.hpp"
#include "elevenvertex/rational.hpp"

#include <utility>

namespace elv::manybody {

// Two-body relativistic and non-relativistic models in the center-of-mass
// frame, {p, q} = 1, and their spin-variable parametrizations.

// --- numeric layer (integrators) ---

Mat2<double> rs_map(double p, double q, double eta, double c);
double rs_ham(double p, double q, double eta, double c);
double rs_ham_dp(double p, double q, double eta, double c);
double rs_ham_dq(double p, double q, double eta, double c);

// (scalar part, traceless sl2 part) of the eta-free description.
std::pair<double, Mat2<double>> tilde_map(double p, double q, double eta, double c);

Mat2<double> cm_map(double p, double q, double nu);
double cm_ham(double p, double q, double nu);
double cm_ham_dp(double p, double q, double nu);
double cm_ham_dq(double p, double q, double nu);

// H^RS - 2 - 2 H^CM / c^2 with eta = nu/c, evaluated without cancellation
// (expm1-based), so the c^{-4} tail is measurable at large c.
double rs_ham_remainder(double p, double q, double nu, double c);

// --- exact symbolic layer ---
// Exponentials are adjoined as generators u = e^{p/c} and u_inv with
// u*u_inv = 1 substituted eagerly; q carries a formal inverse likewise.

struct RsRing {
  VarTablePtr tab;
  int u, ui, q, qi;
  Rat eta, c;
};
RsRing make_rs_ring(const Rat& eta, const Rat& c);

Mat2<Poly> rs_spin(const RsRing& r);
Poly rs_trace(const RsRing& r);
Poly rs_ham_sym(const RsRing& r);
// Components of the eta-free description (scalar part first).
std::pair<Poly, Mat2<Poly>> tilde_spin(const RsRing& r);

// Canonical {f,g} on the ring: d/dp acts through the exponentials
// (chain rule with 1/c), d/dq through the formal inverse of q.
Poly canonical_bracket(const RsRing& r, const Poly& f, const Poly& g);

struct CmRing {
  VarTablePtr tab;
  int p, q, qi, nu;
};
CmRing make_cm_ring();

Mat2<Poly> cm_spin(const CmRing& r);
Poly cm_ham_sym(const CmRing& r);
Poly canonical_bracket(const CmRing& r, const Poly& f, const Poly& g);

}  // namespace elv::manybody
