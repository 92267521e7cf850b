#include "elevenvertex/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace elv {

void Laurent2::add(int e1, int e2, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(std::pair{e1, e2}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Laurent2 Laurent2::operator-() const {
  Laurent2 r(*this);
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
  return *this;
}

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
  Laurent2 r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

Laurent2 operator*(Laurent2 a, const Rat& s) {
  if (s == 0) return Laurent2();
  for (auto& [k, c] : a.t_) c *= s;
  return a;
}

Rat Laurent2::coeff(int e1, int e2) const {
  auto it = t_.find({e1, e2});
  return it == t_.end() ? Rat(0) : it->second;
}

Laurent2 Laurent2::coeff_first(int e1) const {
  Laurent2 r;
  for (const auto& [k, c] : t_)
    if (k.first == e1) r.add(0, k.second, c);
  return r;
}

Laurent2 Laurent2::coeff_second(int e2) const {
  Laurent2 r;
  for (const auto& [k, c] : t_)
    if (k.second == e2) r.add(k.first, 0, c);
  return r;
}

int Laurent2::min1() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : t_) {
    m = first ? k.first : std::min(m, k.first);
    first = false;
  }
  return m;
}

int Laurent2::max1() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : t_) {
    m = first ? k.first : std::max(m, k.first);
    first = false;
  }
  return m;
}

int Laurent2::min2() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : t_) {
    m = first ? k.second : std::min(m, k.second);
    first = false;
  }
  return m;
}

int Laurent2::max2() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : t_) {
    m = first ? k.second : std::max(m, k.second);
    first = false;
  }
  return m;
}

Rat Laurent2::eval(const Rat& x, const Rat& y) const {
  auto powr = [](const Rat& b, int e) {
    if (e < 0 && b == 0) throw std::domain_error("Laurent2::eval at a pole");
    Rat r(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    return e < 0 ? Rat(1) / r : r;
  };
  Rat acc(0);
  for (const auto& [k, c] : t_) acc += c * powr(x, k.first) * powr(y, k.second);
  return acc;
}

std::string Laurent2::str(const char* n1, const char* n2) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    os << a.str();
    if (k.first != 0) os << "*" << n1 << "^" << k.first;
    if (k.second != 0) os << "*" << n2 << "^" << k.second;
  }
  return os.str();
}

}  // namespace elv
