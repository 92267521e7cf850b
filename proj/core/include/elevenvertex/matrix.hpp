#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace elv {

// 2x2 matrix over any exact or floating scalar ring.
template <class T>
struct Mat2 {
  std::array<T, 4> e{};  // row-major

  Mat2() = default;
  Mat2(T a11, T a12, T a21, T a22) : e{a11, a12, a21, a22} {}

  static Mat2 identity() { return Mat2(T(1), T(0), T(0), T(1)); }

  T& operator()(int i, int j) { return e[static_cast<size_t>(2 * i + j)]; }
  const T& operator()(int i, int j) const {
    return e[static_cast<size_t>(2 * i + j)];
  }

  Mat2 operator-() const { return Mat2(-e[0], -e[1], -e[2], -e[3]); }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return Mat2(a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]);
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2(a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]);
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2(a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]);
  }
  friend Mat2 operator*(const T& s, const Mat2& a) {
    return Mat2(s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]);
  }

  T trace() const { return e[0] + e[3]; }
  T det() const { return e[0] * e[3] - e[1] * e[2]; }

  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
};

template <class T>
Mat2<T> comm(const Mat2<T>& a, const Mat2<T>& b) {
  return a * b - b * a;
}

template <class T>
Mat2<T> scaled_identity(const T& s) {
  return Mat2<T>(s, T(0), T(0), s);
}

// Two-site (4x4) or three-site (8x8) operator on tensor powers of C^2.
template <class T>
class TensorMat {
 public:
  explicit TensorMat(int dim) : n_(dim), e_(static_cast<size_t>(dim * dim)) {
    if (dim != 4 && dim != 8) throw std::invalid_argument("TensorMat: dim must be 4 or 8");
  }
  static TensorMat identity(int dim) {
    TensorMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = T(1);
    return m;
  }

  int dim() const { return n_; }
  T& at(int i, int j) { return e_[static_cast<size_t>(i * n_ + j)]; }
  const T& at(int i, int j) const { return e_[static_cast<size_t>(i * n_ + j)]; }

  TensorMat operator-() const {
    TensorMat r(n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }
  friend TensorMat operator+(const TensorMat& a, const TensorMat& b) {
    a.check(b);
    TensorMat r(a.n_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend TensorMat operator-(const TensorMat& a, const TensorMat& b) {
    a.check(b);
    TensorMat r(a.n_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend TensorMat operator*(const TensorMat& a, const TensorMat& b) {
    a.check(b);
    TensorMat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const T& aik = a.at(i, k);
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  friend TensorMat operator*(const T& s, const TensorMat& a) {
    TensorMat r(a.n_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
    return r;
  }

  T trace() const {
    T s{};
    for (int i = 0; i < n_; ++i) s += at(i, i);
    return s;
  }

  friend bool operator==(const TensorMat& a, const TensorMat& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  int n_;
  std::vector<T> e_;
  void check(const TensorMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("TensorMat: dimension mismatch");
  }
};

template <class T>
TensorMat<T> comm(const TensorMat<T>& a, const TensorMat<T>& b) {
  return a * b - b * a;
}

// Tensor product; leg order (1,2) with row-major two-site indexing.
template <class T>
TensorMat<T> kron(const Mat2<T>& a, const Mat2<T>& b) {
  TensorMat<T> r(4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) r.at(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

// Trace over the second leg of a two-site operator.
template <class T>
Mat2<T> partial_trace_2(const TensorMat<T>& t) {
  if (t.dim() != 4) throw std::invalid_argument("partial_trace_2: need a two-site operator");
  Mat2<T> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = t.at(2 * i + 0, 2 * j + 0) + t.at(2 * i + 1, 2 * j + 1);
  return r;
}

enum class Legs { L12, L13, L23 };

// Inserts the identity on the omitted leg of a three-site space.
template <class T>
TensorMat<T> embed(const TensorMat<T>& t, Legs legs) {
  if (t.dim() != 4) throw std::invalid_argument("embed: need a two-site operator");
  TensorMat<T> r(8);
  auto idx = [](int a, int b, int c) { return 4 * a + 2 * b + c; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int ap = 0; ap < 2; ++ap)
          for (int bp = 0; bp < 2; ++bp)
            for (int cp = 0; cp < 2; ++cp) {
              switch (legs) {
                case Legs::L12:
                  if (c == cp) r.at(idx(a, b, c), idx(ap, bp, cp)) = t.at(2 * a + b, 2 * ap + bp);
                  break;
                case Legs::L13:
                  if (b == bp) r.at(idx(a, b, c), idx(ap, bp, cp)) = t.at(2 * a + c, 2 * ap + cp);
                  break;
                case Legs::L23:
                  if (a == ap) r.at(idx(a, b, c), idx(ap, bp, cp)) = t.at(2 * b + c, 2 * bp + cp);
                  break;
              }
            }
  return r;
}

// 2x2 operator acting on a single leg (0-based) of the three-site space.
template <class T>
TensorMat<T> leg_op(const Mat2<T>& m, int leg) {
  if (leg < 0 || leg > 2) throw std::invalid_argument("leg_op: leg out of range");
  TensorMat<T> r(8);
  auto idx = [](int a, int b, int c) { return 4 * a + 2 * b + c; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int ap = 0; ap < 2; ++ap)
          for (int bp = 0; bp < 2; ++bp)
            for (int cp = 0; cp < 2; ++cp) {
              int u[3] = {a, b, c}, v[3] = {ap, bp, cp};
              bool match = true;
              for (int g = 0; g < 3; ++g)
                if (g != leg && u[g] != v[g]) match = false;
              if (match) r.at(idx(a, b, c), idx(ap, bp, cp)) = m(u[leg], v[leg]);
            }
  return r;
}

// Trace over legs 2 and 3, leaving a 2x2 operator on leg 1.
template <class T>
Mat2<T> trace_out_23(const TensorMat<T>& t) {
  if (t.dim() != 8) throw std::invalid_argument("trace_out_23: need a three-site operator");
  Mat2<T> r;
  auto idx = [](int a, int b, int c) { return 4 * a + 2 * b + c; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) r(i, j) += t.at(idx(i, b, c), idx(j, b, c));
  return r;
}

template <class T>
TensorMat<T> perm12() {
  // P12 = sum_ij E_ij (x) E_ji: swaps the two legs, P12^2 = 1.
  TensorMat<T> p(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p.at(2 * i + j, 2 * j + i) = T(1);
  return p;
}

template <class T>
bool all_zero(const Mat2<T>& m) {
  for (const auto& x : m.e)
    if (!(x == T(0))) return false;
  return true;
}

template <class T>
bool all_zero(const TensorMat<T>& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!(m.at(i, j) == T(0))) return false;
  return true;
}

inline double norm_inf(const Mat2<double>& m) {
  double r = 0;
  for (double x : m.e) r = std::max(r, std::abs(x));
  return r;
}

}  // namespace elv
