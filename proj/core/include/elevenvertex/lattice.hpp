#pragma once

#include "elevenvertex/matrix.hpp"
#include "elevenvertex/poisson.hpp"
#include "elevenvertex/poly.hpp"
#include "elevenvertex/rational.hpp"

#include <utility>
#include <vector>

namespace elv::lattice {

// ---------------- Gaudin model (symbolic spins) ----------------

struct GaudinSym {
  int n = 0;
  std::vector<Rat> z;  // pairwise distinct inhomogeneities
  Rat eps = Rat(1);
  VarTablePtr tab;  // 4 generators per site

  Mat2<Poly> spin(int a) const;
  poisson::BracketTable bracket_table() const;
};

GaudinSym make_gaudin(std::vector<Rat> z, Rat eps = Rat(1));

Mat2<Poly> gaudin_lax(const GaudinSym& g, const Rat& z);
Poly gaudin_pair_h(const GaudinSym& g, int a, int c);
Poly gaudin_h(const GaudinSym& g, int a);
Poly gaudin_h0(const GaudinSym& g);

// (1/2) tr L(z)^2 minus its printed pole-plus-constant decomposition,
// evaluated at a numeric z away from the poles. Zero when the printed
// decomposition is complete (any leftover tail shows up verbatim).
Poly gaudin_spectral_residual(const GaudinSym& g, const Rat& z);

// Right sides of the printed flows: d = 0 is the t0 flow, d = 1..n the
// pole flows. One 2x2 matrix of polynomials per site.
std::vector<Mat2<Poly>> gaudin_printed_flow(const GaudinSym& g, int d);

// M-operators for the Lax form of the same flows.
Mat2<Poly> gaudin_m(const GaudinSym& g, int d, const Rat& z);

// ---------------- Gaudin model (numeric, for integration) ----------------

struct GaudinNum {
  std::vector<double> z;
  std::vector<Mat2<double>> spins;
};

std::vector<Mat2<double>> gaudin_t0_rhs(const GaudinNum& g);
double gaudin_h0_num(const GaudinNum& g);
Mat2<double> gaudin_lax_num(const GaudinNum& g, double z);
Mat2<double> gaudin_m0_num(const GaudinNum& g, double z);

// ---------------- canonical variables ----------------

struct CanonGaudin {
  int n = 0;
  std::vector<Rat> z;
  VarTablePtr tab;  // p_a, q_a, q_inv_a, nu_a per site

  Poly p(int a) const;
  Poly q(int a) const;
  Poly qi(int a) const;
  Poly nu(int a) const;
  Mat2<Poly> spin(int a) const;  // the 2-body non-relativistic image
};

CanonGaudin make_canonical_gaudin(std::vector<Rat> z);

Poly canonical_pair_trace(const CanonGaudin& cg, int a, int b);
Poly canonical_h(const CanonGaudin& cg, int a);
Poly canonical_h0(const CanonGaudin& cg);
// Literal reading with the 1/2 prefactor applied to the last term as well;
// kept for the verify report.
Poly canonical_h0_flat(const CanonGaudin& cg);

// Images of the Gaudin generators under the site-wise canonical map, for
// composing Gaudin-side polynomials into the canonical ring.
std::vector<Poly> canonical_images(const CanonGaudin& cg, const GaudinSym& g);

// tr(A^a A^b) for two relativistic sites in canonical variables, and the
// closed product form it must equal.
struct RsPair {
  VarTablePtr tab;  // u,ui,q,qi per site
  std::vector<Rat> eta;
  Rat c;
  Mat2<Poly> spin(int a) const;
};
RsPair make_rs_pair(Rat eta1, Rat eta2, Rat c);
Poly rs_pair_trace(const RsPair& r);          // tr(A^1 A^2), direct
Poly rs_pair_trace_closed(const RsPair& r);   // the printed product form

// ---------------- spin chains ----------------

struct ChainSym {
  enum class Kind { Eta, Tilde };
  Kind kind = Kind::Tilde;
  int n = 0;                // bulk sites
  bool boundaries = false;  // Tilde only: two extra boundary sites
  std::vector<Rat> z;
  std::vector<Rat> eta;  // per bulk site (Eta only)
  VarTablePtr tab;

  int sites() const { return n + (boundaries ? 2 : 0); }
  Mat2<Poly> site_sl2(int a) const;  // 4 matrix generators of site a
  Poly site_s0(int a) const;         // Tilde only
  poisson::BracketTable bracket_table() const;
};

ChainSym make_eta_chain(std::vector<Rat> z, std::vector<Rat> eta);
ChainSym make_tilde_chain(std::vector<Rat> z, bool boundaries = false);

Mat2<Poly> transfer(const ChainSym& c, const Rat& z);
Mat2<Poly> double_row(const ChainSym& c, const Rat& z);

// Multi-space trace form of the transfer matrix (quantum matrices on a
// common auxiliary leg), n <= 2; equals the ordered product exactly.
Mat2<Poly> transfer_multispace(const ChainSym& c, const Rat& z);

// det L^eta(z0) = 0 point for a homogeneous chain.
struct LocalPoint {
  bool has_real = false;
  bool exact = false;
  Rat z0;            // valid when exact
  double z0_lo = 0;  // real roots (or real part when complex)
  double z0_hi = 0;
  double imag = 0;  // nonzero when the roots are complex
};
LocalPoint local_point(const Rat& c1, const Rat& c2, const Rat& eta);

// Numeric homogeneous eta-chain evaluation at the local point.
struct EtaChainNum {
  std::vector<Rat> eta;
  std::vector<Mat2<Rat>> spins;
};
// Throws unless the per-site Casimirs agree across sites.
std::pair<LocalPoint, Mat2<Rat>> local_eval(const EtaChainNum& chain);

Mat2<Rat> transfer_num(const EtaChainNum& chain, const Rat& z);

}  // namespace elv::lattice
