#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elevenvertex/laurent.hpp"
#include "elevenvertex/matrix.hpp"
#include "elevenvertex/poly.hpp"
#include "elevenvertex/sampling.hpp"

using namespace elv;

namespace {

Mat2<Rat> elem(int i, int j) {
  Mat2<Rat> m;
  m(i, j) = Rat(1);
  return m;
}

Poly rand_poly(RatSampler& rng, const VarTablePtr& tab, int terms) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Poly mono(rng.value());
    for (int v = 0; v < tab->size(); ++v)
      mono *= Poly::var(tab, v, static_cast<int>(rng.raw() % 3));
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("rationals are exact and canonical") {
  Rat a = rat(2, 4);
  CHECK(a == rat(1, 2));
  CHECK(numerator(a) == 1);
  CHECK(denominator(a) == 2);
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat(-3, -6) == rat(1, 2));  // denominator normalized positive
}

TEST_CASE("tensor product basics") {
  auto I2 = Mat2<Rat>::identity();
  CHECK(kron(I2, I2) == TensorMat<Rat>::identity(4));

  // E12 (x) E21 has its single 1 at two-site row (1,2), column (2,1).
  auto t = kron(elem(0, 1), elem(1, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(t.at(i, j) == ((i == 1 && j == 2) ? Rat(1) : Rat(0)));

  // sum_ij E_ij (x) E_ji is the permutation operator, P^2 = 1.
  TensorMat<Rat> p(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p = p + kron(elem(i, j), elem(j, i));
  CHECK(p == perm12<Rat>());
  CHECK(p * p == TensorMat<Rat>::identity(4));
}

TEST_CASE("partial trace over the second leg") {
  RatSampler rng(11);
  auto S = rng.mat2();
  auto p = perm12<Rat>();
  CHECK(partial_trace_2(p * kron(Mat2<Rat>::identity(), S)) == S);

  Mat2<Rat> two_i2(Rat(2), Rat(0), Rat(0), Rat(2));
  CHECK(partial_trace_2(TensorMat<Rat>::identity(4)) == two_i2);

  auto A = rng.mat2(), B = rng.mat2();
  CHECK(partial_trace_2(kron(A, B)) == B.trace() * A);
  CHECK(kron(A, B).trace() == A.trace() * B.trace());
}

TEST_CASE("permutation conjugation swaps factors") {
  RatSampler rng(12);
  auto p = perm12<Rat>();
  for (int trial = 0; trial < 10; ++trial) {
    auto A = rng.mat2(), B = rng.mat2();
    CHECK(p * kron(A, B) * p == kron(B, A));
  }
}

TEST_CASE("three-site embeddings") {
  // embed(P12, legs 12) sends e2 (x) e1 (x) e1 to e1 (x) e2 (x) e1.
  auto e = embed(perm12<Rat>(), Legs::L12);
  int src = 4 * 1 + 2 * 0 + 0;  // e2 e1 e1
  int dst = 4 * 0 + 2 * 1 + 0;  // e1 e2 e1
  for (int i = 0; i < 8; ++i) CHECK(e.at(i, src) == (i == dst ? Rat(1) : Rat(0)));

  CHECK(embed(TensorMat<Rat>::identity(4), Legs::L13) == TensorMat<Rat>::identity(8));

  RatSampler rng(13);
  auto A = rng.mat2(), B = rng.mat2();
  auto direct = leg_op(A, 0) * leg_op(B, 2);  // A (x) 1 (x) B
  CHECK(embed(kron(A, B), Legs::L13) == direct);
}

TEST_CASE("leg operators and trace over legs 2,3") {
  RatSampler rng(14);
  auto A = rng.mat2(), B = rng.mat2(), C = rng.mat2();
  auto op = leg_op(A, 0) * leg_op(B, 1) * leg_op(C, 2);
  CHECK(trace_out_23(op) == (B.trace() * C.trace()) * A);
}

TEST_CASE("sparse polynomial evaluation") {
  auto tab = VarTable::make({"S11", "S12", "S21", "S22"});
  Poly s12 = Poly::var(tab, 1), s21 = Poly::var(tab, 2);
  Rat point[] = {Rat(0), Rat(2), Rat(3), Rat(0)};
  CHECK((s12 * s21).eval(point) == Rat(6));
  CHECK(Poly().eval(point) == Rat(0));

  // (1/2) tr S^2 at [[1,2],[3,4]] = (1/2)(1+16) + 6 = 29/2.
  Poly s11 = Poly::var(tab, 0), s22 = Poly::var(tab, 3);
  Poly c2 = rat(1, 2) * (s11 * s11 + s22 * s22) + s12 * s21;
  Rat pt[] = {Rat(1), Rat(2), Rat(3), Rat(4)};
  CHECK(c2.eval(pt) == rat(29, 2));
}

TEST_CASE("polynomial ring axioms on random elements") {
  auto tab = VarTable::make({"x", "y", "z"});
  RatSampler rng(15);
  for (int trial = 0; trial < 12; ++trial) {
    Poly a = rand_poly(rng, tab, 3), b = rand_poly(rng, tab, 3), c = rand_poly(rng, tab, 3);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("mixed constant and tabled arithmetic stays canonical") {
  auto tab = VarTable::make({"x"});
  Poly x = Poly::var(tab, 0);
  Poly p = Poly(rat(1));
  p += x;
  p += Poly(rat(2));
  CHECK(p == x + Poly(rat(3)));
  CHECK(p.term_count() == 2);
  CHECK(Poly(rat(5)) == Poly(rat(5)) + Poly() * x);
}

TEST_CASE("inverse pairs behave like exact Laurent variables") {
  auto tab = VarTable::make({"u", "u_inv", "q", "q_inv"}, {{0, 1}, {2, 3}});
  Poly u = Poly::var(tab, 0), ui = Poly::var(tab, 1);
  Poly q = Poly::var(tab, 2), qi = Poly::var(tab, 3);
  CHECK(u * ui == Poly(1));
  CHECK(q * q * qi == q);
  CHECK((u * q - q * u).is_zero());
  Poly f = (u - ui) * (u + ui);
  CHECK(f == u * u - ui * ui);
  CHECK(f.coeff_net(0, 1, 2) == Poly(1));
  CHECK(f.coeff_net(0, 1, -2) == Poly(-1));
  CHECK(f.coeff_net(0, 1, 0).is_zero());
  CHECK(f.net_min(0, 1) == -2);
  CHECK(f.net_max(0, 1) == 2);
}

TEST_CASE("derivative and homomorphic evaluation") {
  auto tab = VarTable::make({"x", "y"});
  Poly x = Poly::var(tab, 0), y = Poly::var(tab, 1);
  Poly f = x * x * y + Poly(3) * y;
  CHECK(f.derivative(0) == Poly(2) * x * y);
  CHECK(f.derivative(1) == x * x + Poly(3));

  auto tab2 = VarTable::make({"t"});
  Poly t = Poly::var(tab2, 0);
  Poly images[] = {t, t * t};
  CHECK(f.eval_hom(images) == t * t * t * t + Poly(3) * (t * t));
}

TEST_CASE("laurent ring and coefficient extraction") {
  RatSampler rng(16);
  auto randl = [&]() {
    Laurent2 l;
    for (int t = 0; t < 4; ++t)
      l += Laurent2::term(rng.value(), static_cast<int>(rng.raw() % 5) - 2,
                          static_cast<int>(rng.raw() % 5) - 2);
    return l;
  };
  for (int trial = 0; trial < 10; ++trial) {
    Laurent2 a = randl(), b = randl(), c = randl();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * (b * c) == (a * b) * c);
  }
  Laurent2 f = Laurent2::term(rat(3), -1, 2) + Laurent2::term(rat(5), 0, 0);
  CHECK(f.coeff(-1, 2) == rat(3));
  CHECK(f.coeff_first(-1) == Laurent2::term(rat(3), 0, 2));
  CHECK(f.eval(rat(1, 2), rat(2)) == rat(6) * rat(4) + rat(5));
}
