#include "elevenvertex/field.hpp"

#include <cmath>
#include <stdexcept>

namespace elv::field {

using tops::inertia_j;
using tops::lax_nonrel;
using tops::m_cal;

// ---------------- exact jets ----------------

Jet random_jet(RatSampler& rng) {
  Jet j;
  for (;;) {
    Rat s11 = rng.value(), s12 = rng.value(), s21 = rng.value();
    j.lam2 = s11 * s11 + s12 * s21;
    if (j.lam2 == 0) continue;
    j.S = Mat2<Rat>(s11, s12, s21, -s11);
    break;
  }
  const Rat &s11 = j.S(0, 0), &s12 = j.S(0, 1), &s21 = j.S(1, 0);
  {
    Rat x11 = rng.value(), x12 = rng.value();
    Rat x21 = -(2 * s11 * x11 + s21 * x12) / s12;
    j.Sx = Mat2<Rat>(x11, x12, x21, -x11);
  }
  {
    Rat y11 = rng.value(), y12 = rng.value();
    Rat trsx2 = 2 * (j.Sx(0, 0) * j.Sx(0, 0) + j.Sx(0, 1) * j.Sx(1, 0));
    Rat y21 = (-trsx2 - 2 * s11 * y11 - s21 * y12) / s12;
    j.Sxx = Mat2<Rat>(y11, y12, y21, -y11);
  }
  j.k = rng.value();
  return j;
}

bool jet_constraints_ok(const Jet& j) {
  if (!(j.S.trace() == Rat(0)) || !(j.Sx.trace() == Rat(0))) return false;
  Mat2<Rat> s2 = j.S * j.S;
  if (!(s2 == scaled_identity(j.lam2))) return false;
  if (!all_zero(j.S * j.Sx + j.Sx * j.S)) return false;
  // d/dx of tr(S S_x) = 0:
  Rat t = (j.S * j.Sxx).trace() + (j.Sx * j.Sx).trace();
  return t == 0;
}

Mat2<Rat> ll_h(const Jet& j) {
  if (j.lam2 == 0) throw std::domain_error("ll_h: lambda = 0");
  Rat f = -j.k / (4 * j.lam2);
  return f * comm(j.S, j.Sx);
}

Mat2<Rat> ll_time_rhs(const Jet& j) {
  Rat alpha = j.k * j.k / (8 * j.lam2);
  return alpha * comm(j.S, j.Sxx) + comm(j.S, inertia_j(j.S));
}

Mat2<Rat> zs_split1_residual(const Rat& z, const Jet& j) {
  Mat2<Rat> h = ll_h(j);
  return -j.k * v1_ll(z, j.Sx) - comm(lax_nonrel(z, j.S), lax_nonrel(z, h));
}

Mat2<Rat> zs_split2_residual(const Rat& z, const Jet& j) {
  Rat f = -j.k / (4 * j.lam2);
  Mat2<Rat> dxh = f * comm(j.S, j.Sxx);  // [S_x,S_x] drops
  Mat2<Rat> lhs =
      lax_nonrel(z, ll_time_rhs(j)) + (j.k / 2) * lax_nonrel(z, dxh);
  return lhs - comm(lax_nonrel(z, j.S), m_cal(z, j.S));
}

Mat2<Rat> zs_full_residual(const Rat& z, const Jet& j) {
  Mat2<Rat> h = ll_h(j);
  Rat f = -j.k / (4 * j.lam2);
  Mat2<Rat> dxh = f * comm(j.S, j.Sxx);
  Rat half(1, 2);
  Mat2<Rat> U = lax_nonrel(z, j.S);
  Mat2<Rat> V = -half * (v1_ll(z, j.S) + lax_nonrel(z, h));
  Mat2<Rat> dtU = lax_nonrel(z, ll_time_rhs(j));
  Mat2<Rat> dxV = -half * (v1_ll(z, j.Sx) + lax_nonrel(z, dxh));
  return dtU - j.k * dxV - comm(U, V);
}

// ---------------- exact structure checks ----------------

Mat2<Poly> chiral_closure_residual(const Rat& z, const Rat& z1, const Rat& z2,
                                   const Mat2<Poly>& S1, const Mat2<Poly>& S2) {
  if (z == z1 || z == z2 || z1 == z2)
    throw std::domain_error("chiral_closure_residual: pole collision");
  Mat2<Poly> rhs1 = Poly(-2) * comm(S1, lax_nonrel(z1 - z2, S2));
  Mat2<Poly> rhs2 = Poly(-2) * comm(lax_nonrel(z2 - z1, S1), S2);
  Mat2<Poly> l1 = lax_nonrel(z - z1, S1), l2 = lax_nonrel(z - z2, S2);
  return lax_nonrel(z - z1, rhs1) + lax_nonrel(z - z2, rhs2) + Poly(2) * comm(l1, l2);
}

LightconeResiduals lightcone_residuals(const Rat& delta, const Mat2<Poly>& S1) {
  if (delta == 0) throw std::domain_error("lightcone_residuals: z1 = z2");
  Poly mhalf(rat(-1, 2));
  Mat2<Poly> s2red = mhalf * lax_nonrel(delta, S1);
  Mat2<Poly> l = lax_nonrel(delta, s2red);
  Rat di2 = Rat(1) / (delta * delta);
  LightconeResiduals r;
  r.lax = l + Poly(rat(1, 2)) * (Poly(di2) * S1 + Poly(2) * inertia_j(S1));
  r.flow = comm(S1, l) + comm(S1, inertia_j(S1));
  return r;
}

// ---------------- grids ----------------

Mat2<double> grid_dx(const Grid& g, int i) {
  int n = g.n();
  const Mat2<double>& p = g.s[static_cast<size_t>((i + 1) % n)];
  const Mat2<double>& m = g.s[static_cast<size_t>((i - 1 + n) % n)];
  return (1.0 / (2 * g.dx())) * (p - m);
}

Mat2<double> grid_dxx(const Grid& g, int i) {
  int n = g.n();
  const Mat2<double>& p = g.s[static_cast<size_t>((i + 1) % n)];
  const Mat2<double>& m = g.s[static_cast<size_t>((i - 1 + n) % n)];
  const Mat2<double>& c = g.s[static_cast<size_t>(i)];
  return (1.0 / (g.dx() * g.dx())) * (p - 2.0 * c + m);
}

Grid vs_add(const Grid& a, const Grid& b) {
  Grid r = a;
  for (int i = 0; i < a.n(); ++i) r.s[static_cast<size_t>(i)] =
      a.s[static_cast<size_t>(i)] + b.s[static_cast<size_t>(i)];
  return r;
}

Grid vs_scale(double s, const Grid& a) {
  Grid r = a;
  for (auto& m : r.s) m = s * m;
  return r;
}

Grid ll_initial(int n, double ell, double lam) {
  Grid g;
  g.ell = ell;
  g.s.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = ell * i / n;
    double th = M_PI / 2 + 0.4 * std::sin(2 * M_PI * x / ell);
    double ps = 0.3 * std::cos(4 * M_PI * x / ell);
    double a = lam * std::cos(th);
    double b = -lam * std::sin(th) * std::exp(ps);
    double c = -lam * std::sin(th) * std::exp(-ps);
    g.s[static_cast<size_t>(i)] = Mat2<double>(a, b, c, -a);
  }
  return g;
}

namespace {
Mat2<double> ll_point_rhs(const Mat2<double>& s, const Mat2<double>& sxx, double alpha) {
  return alpha * comm(s, sxx) + comm(s, tops::inertia_j(s));
}
}  // namespace

Grid ll_rhs(const Grid& g, double alpha) {
  Grid r = g;
  for (int i = 0; i < g.n(); ++i)
    r.s[static_cast<size_t>(i)] = ll_point_rhs(g.s[static_cast<size_t>(i)],
                                               grid_dxx(g, i), alpha);
  return r;
}

double ll_energy(const Grid& g) {
  double acc = 0;
  for (int i = 0; i < g.n(); ++i) {
    Mat2<double> sx = grid_dx(g, i);
    const Mat2<double>& s = g.s[static_cast<size_t>(i)];
    acc += (sx * sx).trace() + (s * tops::inertia_j(s)).trace();
  }
  return acc * g.dx() / 2;
}

double max_casimir_defect(const Grid& g, double lam) {
  double worst = 0;
  for (const auto& s : g.s)
    worst = std::max(worst, std::abs((s * s).trace() - 2 * lam * lam));
  return worst;
}

double loop_trace_sq(const Grid& g) {
  double acc = 0;
  for (const auto& s : g.s) acc += (s * s).trace();
  return acc * g.dx();
}

double zs_residual_ll(const Grid& before, const Grid& after, double dt, double z,
                      double k, double lam) {
  if (before.n() != after.n())
    throw std::invalid_argument("zs_residual_ll: grid size mismatch");
  int n = before.n();
  double lam2 = lam * lam;
  auto vmat = [&](const Grid& g, int i) {
    Mat2<double> h = (-k / (4 * lam2)) * comm(g.s[static_cast<size_t>(i)], grid_dx(g, i));
    return -0.5 * (v1_ll(z, g.s[static_cast<size_t>(i)]) + lax_nonrel(z, h));
  };
  std::vector<Mat2<double>> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = vmat(before, i);
  double worst = 0;
  double dx = before.ell / n;
  for (int i = 0; i < n; ++i) {
    Mat2<double> dtU =
        (1.0 / dt) * (lax_nonrel(z, after.s[static_cast<size_t>(i)]) -
                      lax_nonrel(z, before.s[static_cast<size_t>(i)]));
    Mat2<double> dxV = (1.0 / (2 * dx)) * (v[static_cast<size_t>((i + 1) % n)] -
                                           v[static_cast<size_t>((i - 1 + n) % n)]);
    Mat2<double> U = lax_nonrel(z, before.s[static_cast<size_t>(i)]);
    Mat2<double> res = dtU - k * dxV - comm(U, v[static_cast<size_t>(i)]);
    worst = std::max(worst, norm_inf(res));
  }
  return worst;
}

ChiralState vs_add(const ChiralState& x, const ChiralState& y) {
  ChiralState r = x;
  r.a = vs_add(x.a, y.a);
  r.b = vs_add(x.b, y.b);
  return r;
}

ChiralState vs_scale(double s, const ChiralState& x) {
  ChiralState r = x;
  r.a = vs_scale(s, x.a);
  r.b = vs_scale(s, x.b);
  return r;
}

ChiralState chiral_initial(int n, double ell, double k, double z1, double z2) {
  ChiralState st;
  st.k = k;
  st.z1 = z1;
  st.z2 = z2;
  st.a = ll_initial(n, ell, 1.0);
  st.b.ell = ell;
  st.b.s.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = ell * i / n;
    double a = 0.5 * std::cos(2 * M_PI * x / ell);
    double b = 0.7 + 0.2 * std::sin(4 * M_PI * x / ell);
    double c = -0.6 + 0.1 * std::cos(2 * M_PI * x / ell);
    st.b.s[static_cast<size_t>(i)] = Mat2<double>(a, b, c, -a);
  }
  return st;
}

ChiralState chiral_rhs(const ChiralState& st) {
  if (st.z1 == st.z2) throw std::domain_error("chiral_rhs: z1 = z2");
  ChiralState r = st;
  int n = st.a.n();
  for (int i = 0; i < n; ++i) {
    const Mat2<double>& s1 = st.a.s[static_cast<size_t>(i)];
    const Mat2<double>& s2 = st.b.s[static_cast<size_t>(i)];
    // dt S1 = k dx S1 - 2 [S1, L(z1-z2, S2)]
    r.a.s[static_cast<size_t>(i)] =
        st.k * grid_dx(st.a, i) - 2.0 * comm(s1, lax_nonrel(st.z1 - st.z2, s2));
    // dt S2 = -k dx S2 - 2 [L(z2-z1, S1), S2]
    r.b.s[static_cast<size_t>(i)] =
        -st.k * grid_dx(st.b, i) - 2.0 * comm(lax_nonrel(st.z2 - st.z1, s1), s2);
  }
  return r;
}

std::vector<Grid> vs_add(const std::vector<Grid>& a, const std::vector<Grid>& b) {
  std::vector<Grid> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = vs_add(a[i], b[i]);
  return r;
}

std::vector<Grid> vs_scale(double s, const std::vector<Grid>& a) {
  std::vector<Grid> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = vs_scale(s, a[i]);
  return r;
}

std::vector<Grid> gaudin1p1_rhs(const MultiState& st, int a) {
  size_t n = st.f.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (st.z[i] == st.z[j]) throw std::domain_error("gaudin1p1_rhs: pole collision");
  std::vector<Grid> out(n);
  const Grid& ga = st.f[static_cast<size_t>(a)];
  int npts = ga.n();
  for (size_t b = 0; b < n; ++b) {
    out[b] = st.f[b];
  }
  for (int i = 0; i < npts; ++i) {
    const Mat2<double>& sa = ga.s[static_cast<size_t>(i)];
    // h^a at the point, and its x-derivative in semi-discrete form.
    Mat2<double> ha = st.alpha * comm(sa, grid_dx(ga, i));
    Mat2<double> dx_ha = st.alpha * comm(sa, grid_dxx(ga, i));
    for (size_t c = 0; c < n; ++c) {
      if (static_cast<int>(c) == a) continue;
      double dz = st.z[static_cast<size_t>(a)] - st.z[c];
      ha = ha + lax_nonrel(dz, st.f[c].s[static_cast<size_t>(i)]);
      dx_ha = dx_ha + lax_nonrel(dz, grid_dx(st.f[c], i));
    }
    // own-field flow
    Mat2<double> rhs = dx_ha + comm(sa, tops::inertia_j(sa));
    for (size_t c = 0; c < n; ++c) {
      if (static_cast<int>(c) == a) continue;
      double dz = st.z[c] - st.z[static_cast<size_t>(a)];
      const Mat2<double>& sc = st.f[c].s[static_cast<size_t>(i)];
      rhs = rhs + comm(ha, lax_nonrel(dz, sc)) - comm(v1_ll(dz, sc), sa);
    }
    out[static_cast<size_t>(a)].s[static_cast<size_t>(i)] = rhs;
    // partner flows
    for (size_t b = 0; b < n; ++b) {
      if (b == static_cast<size_t>(a)) continue;
      double dzb = st.z[b] - st.z[static_cast<size_t>(a)];
      const Mat2<double>& sb = st.f[b].s[static_cast<size_t>(i)];
      out[b].s[static_cast<size_t>(i)] =
          comm(sb, v1_ll(dzb, sa) - lax_nonrel(st.z[static_cast<size_t>(a)] - st.z[b], ha));
    }
  }
  return out;
}

}  // namespace elv::field
