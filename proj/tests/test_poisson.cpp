#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elevenvertex/poisson.hpp"
#include "elevenvertex/rmatrix.hpp"
#include "elevenvertex/sampling.hpp"
#include "elevenvertex/tops.hpp"

using namespace elv;
namespace ps = elv::poisson;

namespace {

Poly rand_poly(RatSampler& rng, const VarTablePtr& tab, int terms) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly mono(rng.value());
    for (int v = 0; v < tab->size(); ++v)
      mono *= Poly::var(tab, v, static_cast<int>(rng.raw() % 2));
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("linear table entries and antisymmetry") {
  auto t = ps::poisson_lie();
  auto tab = t.gens();
  Poly s12 = Poly::var(tab, "S12");
  CHECK(t.bracket(Poly::var(tab, "S11"), s12) == -s12);
  RatSampler rng(31);
  for (int i = 0; i < 6; ++i) {
    Poly f = rand_poly(rng, tab, 3), g = rand_poly(rng, tab, 3);
    CHECK(t.bracket(f, f).is_zero());
    CHECK((t.bracket(f, g) + t.bracket(g, f)).is_zero());
  }
}

TEST_CASE("quadratic table entry for the off-diagonal pair") {
  Rat eta(1);
  auto t = ps::relativistic(eta);
  auto tab = t.gens();
  Poly a11 = Poly::var(tab, "A11"), a12 = Poly::var(tab, "A12");
  Poly a21 = Poly::var(tab, "A21"), a22 = Poly::var(tab, "A22");
  Poly want = -((a11 + a22) * ((a11 - a22) * (Rat(1) / eta) + eta * a12));
  CHECK(t.bracket(a12, a21) == want);
}

TEST_CASE("Jacobi identity for every printed table") {
  CHECK(ps::jacobi_residual(ps::poisson_lie()).ok);
  for (Rat eta : {rat(1), rat(1, 2), rat(-3)})
    CHECK(ps::jacobi_residual(ps::relativistic(eta)).ok);
  CHECK(ps::jacobi_residual(ps::sklyanin()).ok);
  CHECK(ps::jacobi_residual(ps::poisson_lie_sites(3)).ok);
  CHECK(ps::jacobi_residual(ps::sklyanin_sites(2)).ok);
  CHECK(ps::jacobi_residual(ps::relativistic_sites({rat(1), rat(1, 2)})).ok);
}

TEST_CASE("Casimir functions of the linear table") {
  auto t = ps::poisson_lie();
  auto S = tops::spin_symbols(t.gens(), 0);
  CHECK(ps::is_casimir(tops::casimir_c1(S), t).ok);
  CHECK(ps::is_casimir(tops::casimir_c2(S), t).ok);
  // The parenthetical variant with 1/2 on the off-diagonal product is not
  // central; kept as a recorded residual.
  CHECK_FALSE(ps::is_casimir(tops::casimir_c2_printed(S), t).ok);
  // The Hamiltonian generates the flow, so it is not central.
  auto rep = ps::is_casimir(tops::ham_top(S), t);
  CHECK_FALSE(rep.ok);
  Poly s12 = Poly::var(t.gens(), "S12");
  CHECK(t.bracket(tops::ham_top(S), s12) == Poly(2) * s12 * s12);
}

TEST_CASE("Casimir functions of the quadratic table") {
  for (Rat eta : {rat(1), rat(2, 3), rat(-2)}) {
    auto t = ps::relativistic(eta);
    auto A = tops::spin_symbols(t.gens(), 0);
    CHECK(ps::is_casimir(tops::casimir_eta_c2(A), t).ok);
    CHECK(ps::is_casimir(tops::casimir_eta_c1(A, eta), t).ok);
  }
}

TEST_CASE("Casimir functions of the Sklyanin table") {
  auto t = ps::sklyanin();
  auto tab = t.gens();
  Poly t0 = Poly::var(tab, "T0");
  auto S = tops::spin_symbols(tab, 1);
  CHECK(ps::is_casimir(tops::casimir_tilde_c2(S), t).ok);
  CHECK(ps::is_casimir(tops::casimir_tilde_c0(t0, S), t).ok);
  CHECK_FALSE(ps::is_casimir(tops::casimir_tilde_c0_printed(t0, S), t).ok);
  // c0 = T0^2 - 2 H(S) by construction.
  CHECK(tops::casimir_tilde_c0(t0, S) == t0 * t0 - Poly(2) * tops::ham_top(S));
  // tr of the sl2 block is central; the scalar generator itself is not.
  CHECK(ps::is_casimir(S.trace(), t).ok);
  CHECK_FALSE(ps::is_casimir(t0, t).ok);
}

TEST_CASE("flows generated by the printed Hamiltonians") {
  auto t = ps::poisson_lie();
  auto S = tops::spin_symbols(t.gens(), 0);
  auto flow = ps::hamiltonian_flow(tops::ham_top(S), t);
  auto want = tops::printed_flow_nonrel(S);
  CHECK(flow[0] == want(0, 0));
  CHECK(flow[1] == want(0, 1));
  CHECK(flow[2] == want(1, 0));
  CHECK(flow[3] == want(1, 1));
  // Euler form [S, J(S)] gives the same right sides.
  auto euler = comm(S, tops::inertia_j(S));
  CHECK(flow[0] == euler(0, 0));
  CHECK(flow[1] == euler(0, 1));
  CHECK(flow[2] == euler(1, 0));
  CHECK(flow[3] == euler(1, 1));
  // Casimirs generate no flow.
  for (const Poly& f : ps::hamiltonian_flow(tops::casimir_c2(S), t))
    CHECK(f.is_zero());
}

TEST_CASE("trace Hamiltonian generates the relativistic flow") {
  for (Rat eta : {rat(1), rat(1, 3)}) {
    auto t = ps::relativistic(eta);
    auto A = tops::spin_symbols(t.gens(), 0);
    auto flow = ps::hamiltonian_flow(A.trace(), t);
    auto want = tops::printed_flow_eta(A, eta);
    CHECK(flow[0] == want(0, 0));
    CHECK(flow[1] == want(0, 1));
    CHECK(flow[2] == want(1, 0));
    CHECK(flow[3] == want(1, 1));
    auto euler = tops::eta_top_rhs(A, Poly(eta), Poly(Rat(1) / eta));
    CHECK(flow[0] == euler(0, 0));
    CHECK(flow[1] == euler(0, 1));
    CHECK(flow[2] == euler(1, 0));
    CHECK(flow[3] == euler(1, 1));
  }
}

TEST_CASE("matrix bracket residue identity") {
  auto t = ps::poisson_lie();
  auto S = tops::spin_symbols(t.gens(), 0);
  auto lhs = ps::bracket_matrix(S, S, t);
  auto rhs = comm(kron(Mat2<Poly>::identity(), S), ps::lift(rmatrix::perm()));
  CHECK(lhs == rhs);
  // Constant matrices bracket to zero.
  auto C = ps::lift(Mat2<Rat>(rat(1), rat(2), rat(3), rat(4)));
  CHECK(all_zero(ps::bracket_matrix(C, C, t)));
}

TEST_CASE("linear r-matrix structure of the Lax matrix") {
  auto t = ps::poisson_lie();
  auto S = tops::spin_symbols(t.gens(), 0);
  RatSampler rng(32);
  for (int i = 0; i < 10; ++i) {
    auto [z, w] = rng.spectral_pair();
    auto Lz = tops::lax_nonrel(z, S);
    auto Lw = tops::lax_nonrel(w, S);
    CHECK(all_zero(ps::linear_residual(Lz, Lw, rmatrix::classical_r(z - w), t)));
  }
  // Isotropic limit: L = S/z with the permutation kernel.
  auto [z, w] = rng.spectral_pair();
  auto Lz = tops::lax_nonrel_eps(z, S, Rat(0));
  auto Lw = tops::lax_nonrel_eps(w, S, Rat(0));
  CHECK(all_zero(ps::linear_residual(Lz, Lw, rmatrix::classical_r(z - w, Rat(0)), t)));
}

TEST_CASE("quadratic r-matrix structure, eta-dependent description") {
  for (Rat eta : {rat(1), rat(1, 2)}) {
    auto t = ps::relativistic(eta);
    auto A = tops::spin_symbols(t.gens(), 0);
    RatSampler rng(33);
    for (int i = 0; i < 6; ++i) {
      auto [z, w] = rng.spectral_pair();
      auto Lz = tops::lax_eta(z, A, Poly(eta), Poly(Rat(1) / eta));
      auto Lw = tops::lax_eta(w, A, Poly(eta), Poly(Rat(1) / eta));
      CHECK(all_zero(ps::quadratic_residual(Lz, Lw, rmatrix::classical_r(z - w), t)));
    }
  }
}

TEST_CASE("quadratic r-matrix structure, eta-independent description") {
  auto t = ps::sklyanin();
  auto tab = t.gens();
  Poly t0 = Poly::var(tab, "T0");
  auto S = tops::spin_symbols(tab, 1);
  RatSampler rng(34);
  for (int i = 0; i < 6; ++i) {
    auto [z, w] = rng.spectral_pair();
    auto Lz = tops::lax_tilde(z, t0, S);
    auto Lw = tops::lax_tilde(w, t0, S);
    CHECK(all_zero(ps::quadratic_residual(Lz, Lw, rmatrix::classical_r(z - w), t)));
  }
}

TEST_CASE("reflection algebra, eta-independent description") {
  auto t = ps::sklyanin();
  auto tab = t.gens();
  Poly t0 = Poly::var(tab, "T0");
  auto S = tops::spin_symbols(tab, 1);
  RatSampler rng(35);
  for (int i = 0; i < 6; ++i) {
    auto [z, w] = rng.spectral_pair();
    auto Lz = tops::lax_tilde(z, t0, S);
    auto Lw = tops::lax_tilde(w, t0, S);
    CHECK(all_zero(ps::reflection_residual(Lz, Lw, rmatrix::classical_r(z - w),
                                           rmatrix::classical_r(z + w), t)));
  }
}

TEST_CASE("reflection algebra, eta-dependent description with shifted kernel") {
  for (Rat eta : {rat(1), rat(-1, 2)}) {
    auto t = ps::relativistic(eta);
    auto A = tops::spin_symbols(t.gens(), 0);
    RatSampler rng(36);
    for (int i = 0; i < 6; ++i) {
      auto [z, w] = rng.spectral_pair(eta);
      auto Lz = tops::lax_eta(z, A, Poly(eta), Poly(Rat(1) / eta));
      auto Lw = tops::lax_eta(w, A, Poly(eta), Poly(Rat(1) / eta));
      CHECK(all_zero(ps::reflection_residual(Lz, Lw, rmatrix::classical_r(z - w),
                                             rmatrix::classical_r(z + w + eta), t)));
    }
  }
}

TEST_CASE("corrupted table is detected") {
  Rat eta(1);
  auto t = ps::relativistic(eta);
  auto tab = t.gens();
  t.set("A11", "A12", Poly::var(tab, "A12"));
  CHECK_FALSE(ps::jacobi_residual(t).ok);
  auto A = tops::spin_symbols(tab, 0);
  RatSampler rng(37);
  auto [z, w] = rng.spectral_pair();
  auto Lz = tops::lax_eta(z, A, Poly(eta), Poly(Rat(1) / eta));
  auto Lw = tops::lax_eta(w, A, Poly(eta), Poly(Rat(1) / eta));
  CHECK_FALSE(all_zero(ps::quadratic_residual(Lz, Lw, rmatrix::classical_r(z - w), t)));
}

TEST_CASE("degenerate spectral points are rejected") {
  CHECK_THROWS(rmatrix::classical_r(Rat(0)));
  CHECK_THROWS(rmatrix::quantum_R(Rat(0), Rat(1)));
}
