#include "elevenvertex/lattice.hpp"

#include "elevenvertex/rmatrix.hpp"
#include "elevenvertex/tops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elv::lattice {

using tops::spin_symbols;

// ---------------- Gaudin (symbolic) ----------------

GaudinSym make_gaudin(std::vector<Rat> z, Rat eps) {
  GaudinSym g;
  g.n = static_cast<int>(z.size());
  for (size_t a = 0; a < z.size(); ++a)
    for (size_t b = a + 1; b < z.size(); ++b)
      if (z[a] == z[b]) throw std::invalid_argument("make_gaudin: coincident poles");
  g.z = std::move(z);
  g.eps = std::move(eps);
  g.tab = poisson::poisson_lie_sites(g.n).gens();
  return g;
}

Mat2<Poly> GaudinSym::spin(int a) const { return spin_symbols(tab, 4 * a); }

poisson::BracketTable GaudinSym::bracket_table() const {
  return poisson::poisson_lie_sites(n);
}

Mat2<Poly> gaudin_lax(const GaudinSym& g, const Rat& z) {
  Mat2<Poly> acc;
  for (int a = 0; a < g.n; ++a) {
    if (z == g.z[static_cast<size_t>(a)])
      throw std::domain_error("gaudin_lax: evaluation at a pole");
    acc = acc + tops::lax_nonrel_eps(z - g.z[static_cast<size_t>(a)], g.spin(a), g.eps);
  }
  return acc;
}

Poly gaudin_pair_h(const GaudinSym& g, int a, int c) {
  Rat d = g.z[static_cast<size_t>(a)] - g.z[static_cast<size_t>(c)];
  Mat2<Poly> l = tops::lax_nonrel_eps(d, g.spin(c), g.eps);
  return -((g.spin(a) * l).trace());
}

Poly gaudin_h(const GaudinSym& g, int a) {
  Poly acc;
  for (int c = 0; c < g.n; ++c)
    if (c != a) acc += gaudin_pair_h(g, a, c);
  return acc;
}

Poly gaudin_h0(const GaudinSym& g) {
  Poly acc;
  for (int b = 0; b < g.n; ++b)
    for (int c = 0; c < g.n; ++c) {
      Rat d = g.z[static_cast<size_t>(b)] - g.z[static_cast<size_t>(c)];
      acc += (g.spin(b) * tops::m_cal_eps(d, g.spin(c), g.eps)).trace();
    }
  return acc * rat(1, 2);
}

Poly gaudin_spectral_residual(const GaudinSym& g, const Rat& z) {
  Mat2<Poly> l = gaudin_lax(g, z);
  Poly lhs = (l * l).trace() * rat(1, 2);
  Poly rhs;
  for (int a = 0; a < g.n; ++a) {
    Rat d = z - g.z[static_cast<size_t>(a)];
    rhs += tops::casimir_c2(g.spin(a)) * (Rat(1) / (d * d));
    rhs -= gaudin_h(g, a) * (Rat(1) / d);
  }
  rhs += Poly(2) * gaudin_h0(g);
  return lhs - rhs;
}

std::vector<Mat2<Poly>> gaudin_printed_flow(const GaudinSym& g, int d) {
  std::vector<Mat2<Poly>> out(static_cast<size_t>(g.n));
  if (d == 0) {
    for (int a = 0; a < g.n; ++a) {
      Mat2<Poly> rhs = comm(g.spin(a), tops::m_cal_eps(Rat(0), g.spin(a), g.eps));
      for (int c = 0; c < g.n; ++c) {
        if (c == a) continue;
        Rat dz = g.z[static_cast<size_t>(a)] - g.z[static_cast<size_t>(c)];
        rhs = rhs + comm(g.spin(a), tops::m_cal_eps(dz, g.spin(c), g.eps));
      }
      out[static_cast<size_t>(a)] = rhs;
    }
    return out;
  }
  int a = d - 1;
  for (int b = 0; b < g.n; ++b) {
    if (b != a) {
      Rat dz = g.z[static_cast<size_t>(a)] - g.z[static_cast<size_t>(b)];
      out[static_cast<size_t>(b)] =
          -comm(g.spin(b), tops::lax_nonrel_eps(dz, g.spin(a), g.eps));
    } else {
      Mat2<Poly> rhs;
      for (int c = 0; c < g.n; ++c) {
        if (c == a) continue;
        Rat dz = g.z[static_cast<size_t>(c)] - g.z[static_cast<size_t>(a)];
        rhs = rhs + comm(g.spin(a), tops::lax_nonrel_eps(dz, g.spin(c), g.eps));
      }
      out[static_cast<size_t>(a)] = rhs;
    }
  }
  return out;
}

Mat2<Poly> gaudin_m(const GaudinSym& g, int d, const Rat& z) {
  if (d == 0) {
    Mat2<Poly> acc;
    for (int c = 0; c < g.n; ++c)
      acc = acc + tops::m_cal_eps(z - g.z[static_cast<size_t>(c)], g.spin(c), g.eps);
    return acc;
  }
  int a = d - 1;
  return -tops::lax_nonrel_eps(z - g.z[static_cast<size_t>(a)], g.spin(a), g.eps);
}

// ---------------- Gaudin (numeric) ----------------

std::vector<Mat2<double>> gaudin_t0_rhs(const GaudinNum& g) {
  size_t n = g.spins.size();
  std::vector<Mat2<double>> out(n);
  for (size_t a = 0; a < n; ++a) {
    Mat2<double> rhs = comm(g.spins[a], tops::inertia_j(g.spins[a]));
    for (size_t c = 0; c < n; ++c) {
      if (c == a) continue;
      rhs = rhs + comm(g.spins[a], tops::m_cal(g.z[a] - g.z[c], g.spins[c]));
    }
    out[a] = rhs;
  }
  return out;
}

double gaudin_h0_num(const GaudinNum& g) {
  double acc = 0;
  size_t n = g.spins.size();
  for (size_t b = 0; b < n; ++b)
    for (size_t c = 0; c < n; ++c)
      acc += (g.spins[b] * tops::m_cal(g.z[b] - g.z[c], g.spins[c])).trace();
  return acc / 2;
}

Mat2<double> gaudin_lax_num(const GaudinNum& g, double z) {
  Mat2<double> acc;
  for (size_t a = 0; a < g.spins.size(); ++a)
    acc = acc + tops::lax_nonrel(z - g.z[a], g.spins[a]);
  return acc;
}

Mat2<double> gaudin_m0_num(const GaudinNum& g, double z) {
  Mat2<double> acc;
  for (size_t c = 0; c < g.spins.size(); ++c)
    acc = acc + tops::m_cal(z - g.z[c], g.spins[c]);
  return acc;
}

// ---------------- canonical variables ----------------

CanonGaudin make_canonical_gaudin(std::vector<Rat> z) {
  CanonGaudin cg;
  cg.n = static_cast<int>(z.size());
  cg.z = std::move(z);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> inv;
  for (int a = 1; a <= cg.n; ++a) {
    std::string s = "_" + std::to_string(a);
    names.push_back("p" + s);
    names.push_back("q" + s);
    names.push_back("q_inv" + s);
    names.push_back("nu" + s);
    inv.emplace_back(4 * (a - 1) + 1, 4 * (a - 1) + 2);
  }
  cg.tab = VarTable::make(names, inv);
  return cg;
}

Poly CanonGaudin::p(int a) const { return Poly::var(tab, 4 * a); }
Poly CanonGaudin::q(int a) const { return Poly::var(tab, 4 * a + 1); }
Poly CanonGaudin::qi(int a) const { return Poly::var(tab, 4 * a + 2); }
Poly CanonGaudin::nu(int a) const { return Poly::var(tab, 4 * a + 3); }

Mat2<Poly> CanonGaudin::spin(int a) const {
  Poly P = p(a), Q = q(a), Qi = qi(a), Nu = nu(a);
  Rat half(1, 2);
  return Mat2<Poly>(half * (P * Q), -half * (P * Qi),
                    half * (P * Q * Q * Q) - Nu * Q * Q, -half * (P * Q) + Nu);
}

Poly canonical_pair_trace(const CanonGaudin& cg, int a, int b) {
  Rat half(1, 2);
  Poly fa = half * (cg.p(a) * cg.qi(a)) * (cg.q(b) * cg.q(b) - cg.q(a) * cg.q(a)) +
            cg.nu(a);
  Poly fb = half * (cg.p(b) * cg.qi(b)) * (cg.q(a) * cg.q(a) - cg.q(b) * cg.q(b)) +
            cg.nu(b);
  return fa * fb;
}

namespace {
Poly momentum_term(const CanonGaudin& cg, int a, int c) {
  // p_a/q_a (p_c q_c - nu_c) + p_c/q_c (p_a q_a - nu_a)
  return cg.p(a) * cg.qi(a) * (cg.p(c) * cg.q(c) - cg.nu(c)) +
         cg.p(c) * cg.qi(c) * (cg.p(a) * cg.q(a) - cg.nu(a));
}
}  // namespace

Poly canonical_h(const CanonGaudin& cg, int a) {
  Poly acc;
  for (int c = 0; c < cg.n; ++c) {
    if (c == a) continue;
    Rat d = cg.z[static_cast<size_t>(a)] - cg.z[static_cast<size_t>(c)];
    Poly inner = canonical_pair_trace(cg, a, c) * (Rat(1) / d);
    inner += momentum_term(cg, a, c) * (d / 2);
    inner -= cg.p(a) * cg.p(c) * cg.qi(a) * cg.qi(c) * (d * d * d / 4);
    acc -= inner;
  }
  return acc;
}

Poly canonical_h0(const CanonGaudin& cg) {
  Poly acc;
  Rat half(1, 2);
  for (int a = 0; a < cg.n; ++a)
    acc += half * (cg.p(a) * cg.qi(a)) * (cg.p(a) * cg.q(a) - cg.nu(a));
  for (int b = 0; b < cg.n; ++b)
    for (int c = 0; c < b; ++c) {
      Rat d = cg.z[static_cast<size_t>(b)] - cg.z[static_cast<size_t>(c)];
      acc += half * momentum_term(cg, b, c);
      acc -= cg.p(b) * cg.p(c) * cg.qi(b) * cg.qi(c) * (d * d / 2);
    }
  return acc;
}

Poly canonical_h0_flat(const CanonGaudin& cg) {
  Poly acc;
  Rat half(1, 2);
  for (int a = 0; a < cg.n; ++a)
    acc += half * (cg.p(a) * cg.qi(a)) * (cg.p(a) * cg.q(a) - cg.nu(a));
  for (int b = 0; b < cg.n; ++b)
    for (int c = 0; c < b; ++c) {
      Rat d = cg.z[static_cast<size_t>(b)] - cg.z[static_cast<size_t>(c)];
      acc += half * momentum_term(cg, b, c);
      acc -= cg.p(b) * cg.p(c) * cg.qi(b) * cg.qi(c) * (d * d / 4);
    }
  return acc;
}

std::vector<Poly> canonical_images(const CanonGaudin& cg, const GaudinSym& g) {
  if (cg.n != g.n) throw std::invalid_argument("canonical_images: size mismatch");
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(4 * g.n));
  for (int a = 0; a < g.n; ++a) {
    Mat2<Poly> s = cg.spin(a);
    images.push_back(s(0, 0));
    images.push_back(s(0, 1));
    images.push_back(s(1, 0));
    images.push_back(s(1, 1));
  }
  return images;
}

RsPair make_rs_pair(Rat eta1, Rat eta2, Rat c) {
  RsPair r;
  r.eta = {std::move(eta1), std::move(eta2)};
  r.c = std::move(c);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> inv;
  for (int a = 1; a <= 2; ++a) {
    std::string s = "_" + std::to_string(a);
    names.push_back("u" + s);
    names.push_back("u_inv" + s);
    names.push_back("q" + s);
    names.push_back("q_inv" + s);
    inv.emplace_back(4 * (a - 1), 4 * (a - 1) + 1);
    inv.emplace_back(4 * (a - 1) + 2, 4 * (a - 1) + 3);
  }
  r.tab = VarTable::make(names, inv);
  return r;
}

Mat2<Poly> RsPair::spin(int a) const {
  Poly u = Poly::var(tab, 4 * a), ui = Poly::var(tab, 4 * a + 1);
  Poly q = Poly::var(tab, 4 * a + 2), qi = Poly::var(tab, 4 * a + 3);
  const Rat& e = eta[static_cast<size_t>(a)];
  Poly av = u - ui;
  Poly qm = q - Poly(e), qp = q + Poly(e);
  Poly bv = u * qm * qm - ui * qp * qp;
  Rat half(1, 2);
  return Mat2<Poly>(-half * (q * av), half * (qi * av), -half * (q * bv),
                    half * (qi * bv));
}

Poly rs_pair_trace(const RsPair& r) { return (r.spin(0) * r.spin(1)).trace(); }

Poly rs_pair_trace_closed(const RsPair& r) {
  Rat half(1, 2);
  auto bracket = [&](int qa, int other) {
    Poly q_a = Poly::var(r.tab, 4 * qa + 2), qi_a = Poly::var(r.tab, 4 * qa + 3);
    Poly u_b = Poly::var(r.tab, 4 * other), ui_b = Poly::var(r.tab, 4 * other + 1);
    Poly q_b = Poly::var(r.tab, 4 * other + 2);
    const Rat& e_b = r.eta[static_cast<size_t>(other)];
    Poly qm = q_b - Poly(e_b), qp = q_b + Poly(e_b);
    Poly bv = u_b * qm * qm - ui_b * qp * qp;
    return half * (q_a * (u_b - ui_b)) - half * (qi_a * bv);
  };
  return bracket(0, 1) * bracket(1, 0);
}

// ---------------- spin chains ----------------

ChainSym make_eta_chain(std::vector<Rat> z, std::vector<Rat> eta) {
  if (z.size() != eta.size())
    throw std::invalid_argument("make_eta_chain: z/eta size mismatch");
  ChainSym c;
  c.kind = ChainSym::Kind::Eta;
  c.n = static_cast<int>(z.size());
  c.z = std::move(z);
  c.eta = std::move(eta);
  c.tab = poisson::relativistic_sites(c.eta).gens();
  return c;
}

ChainSym make_tilde_chain(std::vector<Rat> z, bool boundaries) {
  ChainSym c;
  c.kind = ChainSym::Kind::Tilde;
  c.n = static_cast<int>(z.size());
  c.z = std::move(z);
  c.boundaries = boundaries;
  c.tab = poisson::sklyanin_sites(c.sites()).gens();
  return c;
}

Mat2<Poly> ChainSym::site_sl2(int a) const {
  if (kind == Kind::Eta) return spin_symbols(tab, 4 * a);
  return spin_symbols(tab, 5 * a + 1);
}

Poly ChainSym::site_s0(int a) const {
  if (kind != Kind::Tilde) throw std::logic_error("site_s0: tilde chains only");
  return Poly::var(tab, 5 * a);
}

poisson::BracketTable ChainSym::bracket_table() const {
  if (kind == Kind::Eta) return poisson::relativistic_sites(eta);
  return poisson::sklyanin_sites(sites());
}

namespace {
Mat2<Poly> site_lax(const ChainSym& c, int a, const Rat& arg) {
  if (c.kind == ChainSym::Kind::Eta) {
    const Rat& e = c.eta[static_cast<size_t>(a)];
    return tops::lax_eta(arg, c.site_sl2(a), Poly(e), Poly(Rat(1) / e));
  }
  return tops::lax_tilde(arg, c.site_s0(a), c.site_sl2(a));
}
}  // namespace

Mat2<Poly> transfer(const ChainSym& c, const Rat& z) {
  Mat2<Poly> t = Mat2<Poly>::identity();
  for (int a = 0; a < c.n; ++a) {
    Rat arg = z - c.z[static_cast<size_t>(a)];
    if (arg == 0) throw std::domain_error("transfer: evaluation at a site pole");
    t = t * site_lax(c, a, arg);
  }
  return t;
}

Mat2<Poly> double_row(const ChainSym& c, const Rat& z) {
  if (c.kind != ChainSym::Kind::Tilde || !c.boundaries)
    throw std::logic_error("double_row: tilde chain with boundaries required");
  Mat2<Poly> t = site_lax(c, c.n, z);  // '+' boundary
  for (int a = 0; a < c.n; ++a) t = t * site_lax(c, a, z - c.z[static_cast<size_t>(a)]);
  t = t * site_lax(c, c.n + 1, z);  // '-' boundary
  for (int a = c.n - 1; a >= 0; --a)
    t = t * site_lax(c, a, z - c.z[static_cast<size_t>(a)]);
  return t;
}

Mat2<Poly> transfer_multispace(const ChainSym& c, const Rat& z) {
  if (c.kind != ChainSym::Kind::Eta)
    throw std::logic_error("transfer_multispace: eta chains only");
  if (c.n == 1) {
    auto R = rmatrix::quantum_R(c.eta[0], z - c.z[0]);
    auto op = poisson::lift(R) * kron(Mat2<Poly>::identity(), c.site_sl2(0));
    return partial_trace_2(op);
  }
  if (c.n == 2) {
    auto R1 = embed(rmatrix::quantum_R(c.eta[0], z - c.z[0]), Legs::L12);
    auto R2 = embed(rmatrix::quantum_R(c.eta[1], z - c.z[1]), Legs::L13);
    auto op = poisson::lift(R1) * poisson::lift(R2) * leg_op(c.site_sl2(0), 1) *
              leg_op(c.site_sl2(1), 2);
    return trace_out_23(op);
  }
  throw std::invalid_argument("transfer_multispace: n <= 2 only");
}

LocalPoint local_point(const Rat& c1, const Rat& c2, const Rat& eta) {
  if (eta == 0) throw std::domain_error("local_point: eta = 0");
  if (c1 == 0) throw std::domain_error("local_point: degenerate (C1 = 0)");
  // C1 z^2 + C1 eta z + C2 eta^2 = 0.
  Rat disc = c1 * (c1 - 4 * c2);  // times eta^2 under the root
  LocalPoint lp;
  double e = to_double(eta), a = to_double(c1);
  double dd = to_double(disc);
  if (disc < 0) {
    lp.has_real = false;
    lp.z0_lo = lp.z0_hi = -e / 2;
    lp.imag = std::abs(e * std::sqrt(-dd) / (2 * a));
    return lp;
  }
  lp.has_real = true;
  BigInt num = numerator(disc), den = denominator(disc);
  BigInt sn = sqrt(num), sd = sqrt(den);
  if (sn * sn == num && sd * sd == den) {
    lp.exact = true;
    Rat s(sn, sd);  // sqrt(disc) >= 0
    Rat abs_eta = eta < 0 ? Rat(-eta) : eta;
    lp.z0 = (-c1 * eta + abs_eta * s) / (2 * c1);
    Rat other = (-c1 * eta - abs_eta * s) / (2 * c1);
    lp.z0_lo = to_double(other);
    lp.z0_hi = to_double(lp.z0);
  } else {
    double s = std::abs(e * std::sqrt(dd) / (2 * a));
    lp.z0_lo = -e / 2 - s;
    lp.z0_hi = -e / 2 + s;
  }
  return lp;
}

Mat2<Rat> transfer_num(const EtaChainNum& chain, const Rat& z) {
  Mat2<Rat> t = Mat2<Rat>::identity();
  for (size_t a = 0; a < chain.spins.size(); ++a) {
    const Rat& e = chain.eta[a];
    t = t * tops::lax_eta(z, chain.spins[a], e, Rat(1) / e);
  }
  return t;
}

std::pair<LocalPoint, Mat2<Rat>> local_eval(const EtaChainNum& chain) {
  if (chain.spins.empty()) throw std::invalid_argument("local_eval: empty chain");
  Rat c1 = tops::casimir_eta_c1(chain.spins[0], chain.eta[0]);
  Rat c2 = tops::casimir_eta_c2(chain.spins[0]);
  for (size_t a = 1; a < chain.spins.size(); ++a) {
    if (chain.eta[a] != chain.eta[0])
      throw std::domain_error("local_eval: sites must share eta");
    if (tops::casimir_eta_c1(chain.spins[a], chain.eta[a]) != c1 ||
        tops::casimir_eta_c2(chain.spins[a]) != c2)
      throw std::domain_error("local_eval: Casimir values differ across sites");
  }
  LocalPoint lp = local_point(c1, c2, chain.eta[0]);
  if (!lp.has_real)
    throw std::domain_error("local_eval: no real root, complex pair " +
                            std::to_string(lp.z0_lo) + " +- i*" +
                            std::to_string(lp.imag));
  if (!lp.exact)
    throw std::domain_error("local_eval: root is irrational; use the numeric path");
  return {lp, transfer_num(chain, lp.z0)};
}

}  // namespace elv::lattice
