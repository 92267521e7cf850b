#pragma once

#include "elevenvertex/matrix.hpp"
#include "elevenvertex/poly.hpp"

#include <string>
#include <vector>

namespace elv::poisson {

// Antisymmetric generator bracket table, extended to arbitrary polynomials
// by bilinearity and Leibniz. Parameters (eta, chain couplings) are baked
// into the coefficients; an optional global scale carries the 1/c factor of
// the canonical-variable parametrizations.
class BracketTable {
 public:
  BracketTable(VarTablePtr gens, Rat scale = Rat(1));

  void set(int i, int j, Poly v);  // {g_i, g_j} = v  (i != j)
  void set(std::string_view gi, std::string_view gj, Poly v);

  const VarTablePtr& gens() const { return gens_; }
  int size() const { return n_; }
  Rat scale() const { return scale_; }
  void set_scale(const Rat& s) { scale_ = s; }

  // Signed generator bracket including the global scale.
  Poly gen_bracket(int i, int j) const;

  // Leibniz extension; throws if f or g uses generators outside the table.
  Poly bracket(const Poly& f, const Poly& g) const;

 private:
  VarTablePtr gens_;
  int n_;
  Rat scale_;
  std::vector<Poly> upper_;  // {g_i,g_j} for i<j
  const Poly& upper(int i, int j) const;
};

// The printed tables.
BracketTable poisson_lie();                         // gens S11 S12 S21 S22
BracketTable poisson_lie_sites(int n);              // direct sum, suffix _a
BracketTable relativistic(const Rat& eta);          // gens A11 A12 A21 A22
BracketTable relativistic_sites(const std::vector<Rat>& etas);
BracketTable sklyanin();                            // gens T0 T11 T12 T21 T22
BracketTable sklyanin_sites(int n);

struct TripleReport {
  bool ok = true;
  int a = -1, b = -1, c = -1;
  Poly residual;  // the worst (first nonzero) cyclic sum
};
TripleReport jacobi_residual(const BracketTable& t);

struct CentralityReport {
  bool ok = true;
  int gen = -1;
  Poly residual;
};
CentralityReport is_casimir(const Poly& C, const BracketTable& t);

// One polynomial per generator: g_dot = {H, g}.
std::vector<Poly> hamiltonian_flow(const Poly& H, const BracketTable& t);

// sum_{ijkl} E_ij (x) E_kl {A_ij, B_kl}.
TensorMat<Poly> bracket_matrix(const Mat2<Poly>& A, const Mat2<Poly>& B,
                               const BracketTable& t);

TensorMat<Poly> lift(const TensorMat<Rat>& m);
Mat2<Poly> lift(const Mat2<Rat>& m);

// {L1(z), L2(w)} - [L1 + L2, r]            (linear structure)
TensorMat<Poly> linear_residual(const Mat2<Poly>& Lz, const Mat2<Poly>& Lw,
                                const TensorMat<Rat>& r, const BracketTable& t);
// {L1(z), L2(w)} - [L1 L2, r]              (quadratic structure)
TensorMat<Poly> quadratic_residual(const Mat2<Poly>& Lz, const Mat2<Poly>& Lw,
                                   const TensorMat<Rat>& r, const BracketTable& t);
// {L1(z), L2(w)} - (1/2)[L1 L2, r_minus] + (1/2) L1 r_plus L2 - (1/2) L2 r_plus L1
TensorMat<Poly> reflection_residual(const Mat2<Poly>& Lz, const Mat2<Poly>& Lw,
                                    const TensorMat<Rat>& r_minus,
                                    const TensorMat<Rat>& r_plus,
                                    const BracketTable& t);

}  // namespace elv::poisson
