#pragma once

#include "elevenvertex/matrix.hpp"
#include "elevenvertex/poly.hpp"
#include "elevenvertex/rational.hpp"
#include "elevenvertex/sampling.hpp"
#include "elevenvertex/tops.hpp"

#include <utility>
#include <vector>

namespace elv::field {

// V1 = L(z,S)/z - 2 m_cal(z,S): the 1/z^2-leading half of the V matrix.
template <class K, class T>
Mat2<T> v1_ll(const K& z, const Mat2<T>& S) {
  return tops::m_tilde(z, S) - tops::m_cal(z, S);
}

// ---------------- exact jets ----------------

// Pointwise data (S, S_x, S_xx) under the constraints tr S = 0,
// S^2 = lam2 * 1, tr(S S_x) = 0, tr(S S_xx) = -tr(S_x^2). Sufficient to
// evaluate every 1+1 algebraic identity without a grid.
struct Jet {
  Mat2<Rat> S, Sx, Sxx;
  Rat lam2;
  Rat k;
};

Jet random_jet(RatSampler& rng);
bool jet_constraints_ok(const Jet& j);

Mat2<Rat> ll_h(const Jet& j);                      // -(k/4 lam2) [S, S_x]
Mat2<Rat> ll_time_rhs(const Jet& j);               // alpha [S,S_xx] + [S,J(S)]
Mat2<Rat> zs_split1_residual(const Rat& z, const Jet& j);
Mat2<Rat> zs_split2_residual(const Rat& z, const Jet& j);
Mat2<Rat> zs_full_residual(const Rat& z, const Jet& j);

// ---------------- exact structure checks ----------------

// L(z-z1, rhs1) + L(z-z2, rhs2) + 2[L(z-z1,S1), L(z-z2,S2)] with the
// printed two-pole right sides; identically zero.
Mat2<Poly> chiral_closure_residual(const Rat& z, const Rat& z1, const Rat& z2,
                                   const Mat2<Poly>& S1, const Mat2<Poly>& S2);

struct LightconeResiduals {
  Mat2<Poly> lax;   // L(d, S2_red) + (1/2)(S1/d^2 + 2J(S1))
  Mat2<Poly> flow;  // [S1, L(d, S2_red)] + [S1, J(S1)]
};
LightconeResiduals lightcone_residuals(const Rat& delta, const Mat2<Poly>& S1);

// ---------------- periodic grids (method of lines) ----------------

struct Grid {
  double ell = 0;
  std::vector<Mat2<double>> s;

  int n() const { return static_cast<int>(s.size()); }
  double dx() const { return ell / n(); }
};

Mat2<double> grid_dx(const Grid& g, int i);
Mat2<double> grid_dxx(const Grid& g, int i);

Grid vs_add(const Grid& a, const Grid& b);
Grid vs_scale(double s, const Grid& a);

// Smooth periodic data solving S11^2 + S12 S21 = lam^2, S22 = -S11.
Grid ll_initial(int n, double ell, double lam);

Grid ll_rhs(const Grid& g, double alpha);
double ll_energy(const Grid& g);

// sup_x |tr S(x)^2 - 2 lam^2|
double max_casimir_defect(const Grid& g, double lam);
double loop_trace_sq(const Grid& g);  // circle integral of tr S^2

// || dtU - k dxV - [U,V] || for two consecutive LL states (forward dt).
double zs_residual_ll(const Grid& before, const Grid& after, double dt, double z,
                      double k, double lam);

struct ChiralState {
  Grid a, b;
  double z1 = 0, z2 = 0, k = 0;
};

ChiralState vs_add(const ChiralState& x, const ChiralState& y);
ChiralState vs_scale(double s, const ChiralState& x);

ChiralState chiral_initial(int n, double ell, double k, double z1, double z2);
ChiralState chiral_rhs(const ChiralState& st);

// 1+1 Gaudin flavor: n coupled fields, t_a flow.
struct MultiState {
  std::vector<Grid> f;
  std::vector<double> z;
  double alpha = 0, k = 0;
};

std::vector<Grid> vs_add(const std::vector<Grid>& a, const std::vector<Grid>& b);
std::vector<Grid> vs_scale(double s, const std::vector<Grid>& a);

std::vector<Grid> gaudin1p1_rhs(const MultiState& st, int a);

}  // namespace elv::field
