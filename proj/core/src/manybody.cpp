#include "elevenvertex/manybody.hpp"

#include <cmath>
#include <stdexcept>

namespace elv::manybody {

namespace {
void need_q(double q) {
  if (q == 0) throw std::domain_error("manybody: q = 0");
}
}  // namespace

Mat2<double> rs_map(double p, double q, double eta, double c) {
  need_q(q);
  double ep = std::exp(p / c), em = std::exp(-p / c);
  double a = ep - em;
  double b = ep * (q - eta) * (q - eta) - em * (q + eta) * (q + eta);
  return Mat2<double>(-q / 2 * a, a / (2 * q), -q / 2 * b, b / (2 * q));
}

double rs_ham(double p, double q, double eta, double c) {
  need_q(q);
  double ep = std::exp(p / c), em = std::exp(-p / c);
  return (2 * q - eta) / (2 * q) * ep + (2 * q + eta) / (2 * q) * em;
}

double rs_ham_dp(double p, double q, double eta, double c) {
  need_q(q);
  double ep = std::exp(p / c), em = std::exp(-p / c);
  return ((2 * q - eta) / (2 * q) * ep - (2 * q + eta) / (2 * q) * em) / c;
}

double rs_ham_dq(double p, double q, double eta, double c) {
  need_q(q);
  double ep = std::exp(p / c), em = std::exp(-p / c);
  return eta / (2 * q * q) * (ep - em);
}

std::pair<double, Mat2<double>> tilde_map(double p, double q, double eta, double c) {
  need_q(q);
  double ep = std::exp(p / c), em = std::exp(-p / c);
  double s0 = eta * (eta - 2 * q) / (2 * q) * ep - eta * (eta + 2 * q) / (2 * q) * em;
  double d = -eta / (4 * q) *
             (ep * (2 * q - eta) * (2 * q - eta) - em * (2 * q + eta) * (2 * q + eta));
  double t12 = eta / (2 * q) * (ep - em);
  auto pow4 = [](double x) { return x * x * x * x; };
  double t21 = -eta / (32 * q) * (ep * pow4(2 * q - eta) - em * pow4(2 * q + eta));
  return {s0, Mat2<double>(d / 2, t12, t21, -d / 2)};
}

Mat2<double> cm_map(double p, double q, double nu) {
  need_q(q);
  return Mat2<double>(p * q / 2, -p / (2 * q), (p * q * q * q - 2 * nu * q * q) / 2,
                      -p * q / 2 + nu);
}

double cm_ham(double p, double q, double nu) {
  need_q(q);
  return p * p / 2 - nu * p / (2 * q);
}

double cm_ham_dp(double p, double q, double nu) {
  need_q(q);
  return p - nu / (2 * q);
}

double cm_ham_dq(double p, double q, double nu) {
  need_q(q);
  (void)p;
  return nu * p / (2 * q * q);
}

double rs_ham_remainder(double p, double q, double nu, double c) {
  need_q(q);
  double x = p / c;
  double b1 = std::expm1(x) + std::expm1(-x) - x * x;
  double b2 = std::expm1(x) - std::expm1(-x) - 2 * x;
  return b1 - nu / (2 * q * c) * b2;
}

RsRing make_rs_ring(const Rat& eta, const Rat& c) {
  if (eta == 0 || c == 0) throw std::domain_error("make_rs_ring: eta, c nonzero");
  auto tab = VarTable::make({"u", "u_inv", "q", "q_inv"}, {{0, 1}, {2, 3}});
  return RsRing{tab, 0, 1, 2, 3, eta, c};
}

Mat2<Poly> rs_spin(const RsRing& r) {
  Poly u = Poly::var(r.tab, r.u), ui = Poly::var(r.tab, r.ui);
  Poly q = Poly::var(r.tab, r.q), qi = Poly::var(r.tab, r.qi);
  Poly a = u - ui;
  Poly qm = q - Poly(r.eta), qp = q + Poly(r.eta);
  Poly b = u * qm * qm - ui * qp * qp;
  Rat half(1, 2);
  return Mat2<Poly>(-half * (q * a), half * (qi * a), -half * (q * b), half * (qi * b));
}

Poly rs_trace(const RsRing& r) {
  auto s = rs_spin(r);
  return s.trace();
}

Poly rs_ham_sym(const RsRing& r) { return rs_trace(r) * (Rat(-1) / r.eta); }

std::pair<Poly, Mat2<Poly>> tilde_spin(const RsRing& r) {
  Poly u = Poly::var(r.tab, r.u), ui = Poly::var(r.tab, r.ui);
  Poly q = Poly::var(r.tab, r.q), qi = Poly::var(r.tab, r.qi);
  const Rat& eta = r.eta;
  Poly twoqm = Poly(2) * q - Poly(eta), twoqp = Poly(2) * q + Poly(eta);
  // s0 = eta(eta-2q)/(2q) u - eta(eta+2q)/(2q) u_inv.
  Poly s0 = (u * twoqm + ui * twoqp) * (qi * (-eta / 2));
  Poly d = (u * twoqm * twoqm - ui * twoqp * twoqp) * (qi * (-eta / 4));
  Poly t12 = (u - ui) * (qi * (eta / 2));
  Poly m4 = twoqm * twoqm, p4 = twoqp * twoqp;
  Poly t21 = (u * m4 * m4 - ui * p4 * p4) * (qi * (-eta / 32));
  Rat half(1, 2);
  return {s0, Mat2<Poly>(half * d, t12, t21, -(half * d))};
}

Poly canonical_bracket(const RsRing& r, const Poly& f, const Poly& g) {
  Poly u = Poly::var(r.tab, r.u), ui = Poly::var(r.tab, r.ui);
  Poly qi = Poly::var(r.tab, r.qi);
  Rat cinv = Rat(1) / r.c;
  auto dp = [&](const Poly& x) {
    return (u * x.derivative(r.u) - ui * x.derivative(r.ui)) * cinv;
  };
  auto dq = [&](const Poly& x) {
    return x.derivative(r.q) - qi * qi * x.derivative(r.qi);
  };
  return dp(f) * dq(g) - dq(f) * dp(g);
}

CmRing make_cm_ring() {
  auto tab = VarTable::make({"p", "q", "q_inv", "nu"}, {{1, 2}});
  return CmRing{tab, 0, 1, 2, 3};
}

Mat2<Poly> cm_spin(const CmRing& r) {
  Poly p = Poly::var(r.tab, r.p), q = Poly::var(r.tab, r.q);
  Poly qi = Poly::var(r.tab, r.qi), nu = Poly::var(r.tab, r.nu);
  Rat half(1, 2);
  return Mat2<Poly>(half * (p * q), -half * (p * qi),
                    half * (p * q * q * q) - nu * q * q,
                    -half * (p * q) + nu);
}

Poly cm_ham_sym(const CmRing& r) {
  Poly p = Poly::var(r.tab, r.p), qi = Poly::var(r.tab, r.qi);
  Poly nu = Poly::var(r.tab, r.nu);
  return Rat(1, 2) * (p * p) - Rat(1, 2) * (nu * p * qi);
}

Poly canonical_bracket(const CmRing& r, const Poly& f, const Poly& g) {
  Poly qi = Poly::var(r.tab, r.qi);
  auto dp = [&](const Poly& x) { return x.derivative(r.p); };
  auto dq = [&](const Poly& x) {
    return x.derivative(r.q) - qi * qi * x.derivative(r.qi);
  };
  return dp(f) * dq(g) - dq(f) * dp(g);
}

}  // namespace elv::manybody
