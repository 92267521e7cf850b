#include "elevenvertex/poisson.hpp"

#include <stdexcept>

namespace elv::poisson {

BracketTable::BracketTable(VarTablePtr gens, Rat scale)
    : gens_(std::move(gens)), n_(gens_->size()), scale_(std::move(scale)) {
  upper_.resize(static_cast<size_t>(n_ * n_));
}

const Poly& BracketTable::upper(int i, int j) const {
  return upper_[static_cast<size_t>(i * n_ + j)];
}

void BracketTable::set(int i, int j, Poly v) {
  if (i == j) throw std::invalid_argument("BracketTable::set: i == j");
  if (i > j) {
    set(j, i, -std::move(v));
    return;
  }
  upper_[static_cast<size_t>(i * n_ + j)] = std::move(v);
}

void BracketTable::set(std::string_view gi, std::string_view gj, Poly v) {
  set(gens_->require(gi), gens_->require(gj), std::move(v));
}

Poly BracketTable::gen_bracket(int i, int j) const {
  if (i == j) return Poly();
  Poly v = i < j ? upper(i, j) : -upper(j, i);
  return v * scale_;
}

Poly BracketTable::bracket(const Poly& f, const Poly& g) const {
  if ((f.table() && !f.table()->same_shape(*gens_)) ||
      (g.table() && !g.table()->same_shape(*gens_)))
    throw std::invalid_argument("BracketTable::bracket: unknown generator set");
  Poly acc;
  for (int i = 0; i < n_; ++i) {
    Poly fi = f.derivative(i);
    if (fi.is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      const Poly& tij = i < j ? upper(i, j) : upper(j, i);
      if (tij.is_zero()) continue;
      Poly gj = g.derivative(j);
      if (gj.is_zero()) continue;
      Poly term = fi * gj * tij;
      acc += (i < j) ? term : -term;
    }
  }
  return acc * scale_;
}

namespace {

// delta_il S_kj - delta_kj S_il  evaluated on a 2x2 block of generator images.
Poly lie_entry(const Mat2<Poly>& S, int i, int j, int k, int l) {
  Poly v;
  if (i == l) v += S(k - 1, j - 1);
  if (k == j) v -= S(i - 1, l - 1);
  return v;
}

struct GenIdx {
  int i, j;  // 1-based matrix slot
};
constexpr GenIdx kSlots[4] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};

void fill_lie_block(BracketTable& t, const Mat2<Poly>& S, const int idx[4],
                    const Poly& factor) {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      auto [i, j] = kSlots[a];
      auto [k, l] = kSlots[b];
      Poly v = lie_entry(S, i, j, k, l);
      if (!v.is_zero()) t.set(idx[a], idx[b], factor * v);
    }
}

}  // namespace

BracketTable poisson_lie() { return poisson_lie_sites(1); }

BracketTable poisson_lie_sites(int n) {
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a)
    for (const char* base : {"S11", "S12", "S21", "S22"})
      names.push_back(n == 1 ? std::string(base)
                             : std::string(base) + "_" + std::to_string(a));
  auto tab = VarTable::make(names);
  BracketTable t(tab);
  for (int a = 0; a < n; ++a) {
    int idx[4] = {4 * a, 4 * a + 1, 4 * a + 2, 4 * a + 3};
    Mat2<Poly> S(Poly::var(tab, idx[0]), Poly::var(tab, idx[1]),
                 Poly::var(tab, idx[2]), Poly::var(tab, idx[3]));
    fill_lie_block(t, S, idx, Poly(1));
  }
  return t;
}

BracketTable relativistic(const Rat& eta) { return relativistic_sites({eta}); }

BracketTable relativistic_sites(const std::vector<Rat>& etas) {
  int n = static_cast<int>(etas.size());
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a)
    for (const char* base : {"A11", "A12", "A21", "A22"})
      names.push_back(n == 1 ? std::string(base)
                             : std::string(base) + "_" + std::to_string(a));
  auto tab = VarTable::make(names);
  BracketTable t(tab);
  for (int a = 0; a < n; ++a) {
    const Rat& eta = etas[static_cast<size_t>(a)];
    if (eta == 0) throw std::domain_error("relativistic table needs eta != 0");
    Rat ei = Rat(1) / eta;
    Rat e3 = eta * eta * eta;
    int o = 4 * a;
    Poly A11 = Poly::var(tab, o), A12 = Poly::var(tab, o + 1);
    Poly A21 = Poly::var(tab, o + 2), A22 = Poly::var(tab, o + 3);
    Poly tr = A11 + A22;
    Poly d = A11 - A22;
    t.set(o, o + 1, -(tr * A12) * ei + (A12 * A12) * eta);
    t.set(o, o + 2,
          (A21 * tr) * ei + (A11 * A11 - A11 * A22 - A12 * A21) * eta +
              (A11 * A12) * e3);
    t.set(o, o + 3, (A12 * d) * eta + (A12 * A12) * (eta * eta * eta));
    t.set(o + 1, o + 2, -(tr * (d * ei + A12 * eta)));
    t.set(o + 1, o + 3, -((tr * A12) * ei + (A12 * A12) * eta));
    t.set(o + 2, o + 3,
          (A21 * tr) * ei - (A22 * A22 - A11 * A22 - A12 * A21) * eta +
              (A12 * A22) * e3);
  }
  return t;
}

BracketTable sklyanin() { return sklyanin_sites(1); }

BracketTable sklyanin_sites(int n) {
  std::vector<std::string> names;
  for (int a = 1; a <= n; ++a)
    for (const char* base : {"T0", "T11", "T12", "T21", "T22"})
      names.push_back(n == 1 ? std::string(base)
                             : std::string(base) + "_" + std::to_string(a));
  auto tab = VarTable::make(names);
  BracketTable t(tab);
  for (int a = 0; a < n; ++a) {
    int o = 5 * a;
    Poly T0 = Poly::var(tab, o);
    Poly T11 = Poly::var(tab, o + 1), T12 = Poly::var(tab, o + 2);
    Poly T21 = Poly::var(tab, o + 3), T22 = Poly::var(tab, o + 4);
    Poly d = T11 - T22;
    // {T0, .} rows: the top flow of the sl2 part.
    t.set(o, o + 1, -(T12 * d));
    t.set(o, o + 2, (T12 * T12) * Rat(2));
    t.set(o, o + 3, d * d - (T12 * T21) * Rat(2));
    t.set(o, o + 4, T12 * d);
    // sl2 block: Poisson-Lie scaled by T0; {T11,T22} = 0.
    int idx[4] = {o + 1, o + 2, o + 3, o + 4};
    Mat2<Poly> S(T11, T12, T21, T22);
    fill_lie_block(t, S, idx, T0);
  }
  return t;
}

TripleReport jacobi_residual(const BracketTable& t) {
  int n = t.size();
  auto tab = t.gens();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Poly ga = Poly::var(tab, a), gb = Poly::var(tab, b), gc = Poly::var(tab, c);
        Poly r = t.bracket(ga, t.bracket(gb, gc)) +
                 t.bracket(gb, t.bracket(gc, ga)) +
                 t.bracket(gc, t.bracket(ga, gb));
        if (!r.is_zero()) return {false, a, b, c, r};
      }
  return {};
}

CentralityReport is_casimir(const Poly& C, const BracketTable& t) {
  for (int g = 0; g < t.size(); ++g) {
    Poly r = t.bracket(C, Poly::var(t.gens(), g));
    if (!r.is_zero()) return {false, g, r};
  }
  return {};
}

std::vector<Poly> hamiltonian_flow(const Poly& H, const BracketTable& t) {
  std::vector<Poly> flow;
  flow.reserve(static_cast<size_t>(t.size()));
  for (int g = 0; g < t.size(); ++g)
    flow.push_back(t.bracket(H, Poly::var(t.gens(), g)));
  return flow;
}

TensorMat<Poly> bracket_matrix(const Mat2<Poly>& A, const Mat2<Poly>& B,
                               const BracketTable& t) {
  TensorMat<Poly> r(4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l)
          r.at(2 * i + k, 2 * j + l) = t.bracket(A(i, j), B(k, l));
  return r;
}

TensorMat<Poly> lift(const TensorMat<Rat>& m) {
  TensorMat<Poly> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = Poly(m.at(i, j));
  return r;
}

Mat2<Poly> lift(const Mat2<Rat>& m) {
  return Mat2<Poly>(Poly(m(0, 0)), Poly(m(0, 1)), Poly(m(1, 0)), Poly(m(1, 1)));
}

namespace {
std::pair<TensorMat<Poly>, TensorMat<Poly>> two_leg(const Mat2<Poly>& Lz,
                                                    const Mat2<Poly>& Lw) {
  auto I = Mat2<Poly>::identity();
  return {kron(Lz, I), kron(I, Lw)};
}
}  // namespace

TensorMat<Poly> linear_residual(const Mat2<Poly>& Lz, const Mat2<Poly>& Lw,
                                const TensorMat<Rat>& r, const BracketTable& t) {
  auto [L1, L2] = two_leg(Lz, Lw);
  return bracket_matrix(Lz, Lw, t) - comm(L1 + L2, lift(r));
}

TensorMat<Poly> quadratic_residual(const Mat2<Poly>& Lz, const Mat2<Poly>& Lw,
                                   const TensorMat<Rat>& r, const BracketTable& t) {
  auto [L1, L2] = two_leg(Lz, Lw);
  return bracket_matrix(Lz, Lw, t) - comm(L1 * L2, lift(r));
}

TensorMat<Poly> reflection_residual(const Mat2<Poly>& Lz, const Mat2<Poly>& Lw,
                                    const TensorMat<Rat>& r_minus,
                                    const TensorMat<Rat>& r_plus,
                                    const BracketTable& t) {
  auto [L1, L2] = two_leg(Lz, Lw);
  Poly half(rat(1, 2));
  auto rm = lift(r_minus), rp = lift(r_plus);
  auto rhs = half * comm(L1 * L2, rm) - half * (L1 * rp * L2) + half * (L2 * rp * L1);
  return bracket_matrix(Lz, Lw, t) - rhs;
}

}  // namespace elv::poisson
