#include "elevenvertex/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace elv {

VarTablePtr VarTable::make(std::vector<std::string> names,
                           std::vector<std::pair<int, int>> inverse_pairs) {
  auto t = std::make_shared<VarTable>();
  t->inv_.assign(names.size(), -1);
  t->names_ = std::move(names);
  for (auto [a, b] : inverse_pairs) {
    if (a < 0 || b < 0 || a >= t->size() || b >= t->size() || a == b)
      throw std::invalid_argument("VarTable: bad inverse pair");
    t->inv_[static_cast<size_t>(a)] = b;
    t->inv_[static_cast<size_t>(b)] = a;
  }
  return t;
}

int VarTable::index(std::string_view n) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<size_t>(i)] == n) return i;
  return -1;
}

int VarTable::require(std::string_view n) const {
  int i = index(n);
  if (i < 0) throw std::invalid_argument("unknown generator: " + std::string(n));
  return i;
}

namespace {
// Trailing zeros never decide a lexicographic comparison between monomials,
// so the trimmed key is the table-independent canonical form.
std::span<const int32_t> trimmed(const Poly::Key& k) {
  size_t n = k.size();
  while (n > 0 && k[n - 1] == 0) --n;
  return {k.data(), n};
}
}  // namespace

Poly::Poly(const Rat& c) {
  if (c != 0) t_.emplace(Key{}, c);
}

Poly::Poly(long long c) : Poly(Rat(c)) {}

Poly Poly::var(VarTablePtr tab, int idx, int power) {
  if (!tab || idx < 0 || idx >= tab->size())
    throw std::invalid_argument("Poly::var: index out of range");
  if (power < 0) throw std::invalid_argument("Poly::var: negative power");
  Poly p;
  p.tab_ = std::move(tab);
  Key k(static_cast<size_t>(p.tab_->size()), 0);
  k[static_cast<size_t>(idx)] = power;
  p.t_.emplace(std::move(k), Rat(1));
  return p;
}

Poly Poly::var(VarTablePtr tab, std::string_view name, int power) {
  int idx = tab->require(name);
  return var(std::move(tab), idx, power);
}

bool Poly::is_constant() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && trimmed(t_.begin()->first).empty();
}

Rat Poly::constant_value() const {
  if (t_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("Poly: not a constant");
  return t_.begin()->second;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [k, c] : t_) {
    int s = 0;
    for (int32_t e : k) s += e;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [k, c] : t_)
    if (static_cast<size_t>(var) < k.size())
      d = std::max(d, static_cast<int>(k[static_cast<size_t>(var)]));
  return d;
}

VarTablePtr Poly::unify(const VarTablePtr& a, const VarTablePtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->same_shape(*b)) return a;
  throw std::invalid_argument("Poly: mixing distinct variable tables");
}

Poly::Key Poly::widened(const Key& k) const {
  if (!tab_ || k.size() == static_cast<size_t>(tab_->size())) return k;
  Key w(static_cast<size_t>(tab_->size()), 0);
  std::copy(k.begin(), k.end(), w.begin());
  return w;
}

void Poly::add_term(const Key& k, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

// Keeps every stored key at exactly table-size length.
void Poly::set_table(VarTablePtr t) {
  if (t == tab_) return;
  tab_ = std::move(t);
  if (!tab_) return;
  size_t n = static_cast<size_t>(tab_->size());
  std::map<Key, Rat> out;
  for (auto& [k, c] : t_) {
    if (k.size() == n) {
      out.emplace(k, c);
    } else {
      Key w(n, 0);
      std::copy(k.begin(), k.end(), w.begin());
      out.emplace(std::move(w), c);
    }
  }
  t_ = std::move(out);
}

void Poly::reduce_inverses() {
  if (!tab_) return;
  bool any_pair = false;
  for (int i = 0; i < tab_->size(); ++i)
    if (tab_->inverse_of(i) > i) any_pair = true;
  if (!any_pair) return;

  std::map<Key, Rat> out;
  for (auto& [k0, c] : t_) {
    Key k = widened(k0);
    for (int i = 0; i < tab_->size(); ++i) {
      int j = tab_->inverse_of(i);
      if (j > i) {
        int32_t m = std::min(k[static_cast<size_t>(i)], k[static_cast<size_t>(j)]);
        k[static_cast<size_t>(i)] -= m;
        k[static_cast<size_t>(j)] -= m;
      }
    }
    auto [it, fresh] = out.emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  t_ = std::move(out);
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  set_table(unify(tab_, o.tab_));
  for (const auto& [k, c] : o.t_) add_term(widened(k), c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  set_table(unify(tab_, o.tab_));
  for (const auto& [k, c] : o.t_) add_term(widened(k), -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.tab_ = Poly::unify(a.tab_, b.tab_);
  size_t n = r.tab_ ? static_cast<size_t>(r.tab_->size()) : 0;
  for (const auto& [ka, ca] : a.t_) {
    for (const auto& [kb, cb] : b.t_) {
      Poly::Key k(n, 0);
      for (size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
      for (size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
      r.add_term(k, ca * cb);
    }
  }
  r.reduce_inverses();
  return r;
}

Poly operator*(Poly a, const Rat& s) {
  if (s == 0) return Poly();
  for (auto& [k, c] : a.t_) c *= s;
  return a;
}

Poly Poly::derivative(int var) const {
  Poly r;
  r.tab_ = tab_;
  for (const auto& [k0, c] : t_) {
    Key k = widened(k0);
    if (static_cast<size_t>(var) >= k.size()) continue;
    int32_t e = k[static_cast<size_t>(var)];
    if (e == 0) continue;
    k[static_cast<size_t>(var)] = e - 1;
    r.add_term(k, c * e);
  }
  return r;
}

Rat Poly::eval(std::span<const Rat> point) const {
  if (tab_ && point.size() < static_cast<size_t>(tab_->size()))
    throw std::invalid_argument("Poly::eval: point too short");
  Rat acc(0);
  for (const auto& [k, c] : t_) {
    Rat m = c;
    for (size_t i = 0; i < k.size(); ++i)
      for (int32_t e = 0; e < k[i]; ++e) m *= point[i];
    acc += m;
  }
  return acc;
}

double Poly::eval_d(std::span<const double> point) const {
  double acc = 0;
  for (const auto& [k, c] : t_) {
    double m = to_double(c);
    for (size_t i = 0; i < k.size(); ++i)
      for (int32_t e = 0; e < k[i]; ++e) m *= point[i];
    acc += m;
  }
  return acc;
}

Poly Poly::eval_hom(std::span<const Poly> images) const {
  if (tab_ && images.size() < static_cast<size_t>(tab_->size()))
    throw std::invalid_argument("Poly::eval_hom: image list too short");
  Poly acc;
  for (const auto& [k, c] : t_) {
    Poly m(c);
    for (size_t i = 0; i < k.size(); ++i)
      for (int32_t e = 0; e < k[i]; ++e) m *= images[i];
    acc += m;
  }
  return acc;
}

Poly Poly::coeff_net(int var, int inv, int net) const {
  Poly r;
  r.tab_ = tab_;
  for (const auto& [k0, c] : t_) {
    Key k = widened(k0);
    int n = k[static_cast<size_t>(var)] - k[static_cast<size_t>(inv)];
    if (n != net) continue;
    k[static_cast<size_t>(var)] = 0;
    k[static_cast<size_t>(inv)] = 0;
    r.add_term(k, c);
  }
  return r;
}

int Poly::net_min(int var, int inv) const {
  int m = 0;
  bool first = true;
  for (const auto& [k0, c] : t_) {
    Key k = widened(k0);
    int n = k[static_cast<size_t>(var)] - k[static_cast<size_t>(inv)];
    m = first ? n : std::min(m, n);
    first = false;
  }
  return m;
}

int Poly::net_max(int var, int inv) const {
  int m = 0;
  bool first = true;
  for (const auto& [k0, c] : t_) {
    Key k = widened(k0);
    int n = k[static_cast<size_t>(var)] - k[static_cast<size_t>(inv)];
    m = first ? n : std::max(m, n);
    first = false;
  }
  return m;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  for (; ia != a.t_.end(); ++ia, ++ib) {
    if (ia->second != ib->second) return false;
    auto ta = trimmed(ia->first);
    auto tb = trimmed(ib->first);
    if (!std::equal(ta.begin(), ta.end(), tb.begin(), tb.end())) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    Rat a = abs(c);
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    bool printed = false;
    if (a != 1) {
      os << a.str();
      printed = true;
    }
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (printed) os << "*";
      os << tab_->name(static_cast<int>(i));
      if (k[i] > 1) os << "^" << k[i];
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

}  // namespace elv
