#pragma once

#include "elevenvertex/rational.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elv {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

// Ordered registry of polynomial generators. A generator may be declared as
// the formal inverse of another (e.g. u and u_inv standing for e^{p/c} and
// e^{-p/c}); the relation u*u_inv = 1 is substituted eagerly on every
// monomial so the pair behaves like a single Laurent variable.
class VarTable {
 public:
  static VarTablePtr make(std::vector<std::string> names,
                          std::vector<std::pair<int, int>> inverse_pairs = {});

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  int index(std::string_view n) const;    // -1 when absent
  int require(std::string_view n) const;  // throws when absent
  int inverse_of(int i) const { return inv_[static_cast<size_t>(i)]; }

  bool same_shape(const VarTable& o) const {
    return names_ == o.names_ && inv_ == o.inv_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> inv_;
};

// Sparse multivariate polynomial over exact rationals. Terms are keyed by
// exponent vectors in a canonical (lexicographic) order, zero coefficients
// are never stored, so equality is structural.
class Poly {
 public:
  using Key = std::vector<int32_t>;

  Poly() = default;  // zero
  Poly(const Rat& c);
  Poly(long long c);
  static Poly var(VarTablePtr tab, int idx, int power = 1);
  static Poly var(VarTablePtr tab, std::string_view name, int power = 1);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // throws unless constant (or zero)

  int degree() const;  // total degree; 0 for the zero polynomial
  int degree_in(int var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(Poly a, const Rat& s);
  friend Poly operator*(const Rat& s, Poly a) { return std::move(a) * s; }

  Poly derivative(int var) const;  // formal partial derivative

  // Full-assignment evaluation; the point must assign every registered
  // generator (inverse generators included, caller keeps them consistent).
  Rat eval(std::span<const Rat> point) const;
  double eval_d(std::span<const double> point) const;

  // Ring homomorphism sending generator i to images[i].
  Poly eval_hom(std::span<const Poly> images) const;

  // For a (var, inv) pair: the part with net exponent k, with those two
  // exponents stripped. Used to read Laurent coefficients in one variable.
  Poly coeff_net(int var, int inv, int net) const;
  int net_min(int var, int inv) const;
  int net_max(int var, int inv) const;

  const VarTablePtr& table() const { return tab_; }
  size_t term_count() const { return t_.size(); }
  std::string str() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  VarTablePtr tab_;
  std::map<Key, Rat> t_;

  static VarTablePtr unify(const VarTablePtr& a, const VarTablePtr& b);
  Key widened(const Key& k) const;  // pad constant-sized keys to table size
  void add_term(const Key& k, const Rat& c);
  void set_table(VarTablePtr t);
  void reduce_inverses();
  friend class BracketTable;
};

}  // namespace elv
