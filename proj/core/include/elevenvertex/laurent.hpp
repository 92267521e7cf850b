#pragma once

#include "elevenvertex/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace elv {

// Exact Laurent polynomial in two formal variables. Which variables the two
// exponent slots stand for is decided at the call site (z and hbar for the
// vertex matrices, z and the coupling for the scaled family).
class Laurent2 {
 public:
  Laurent2() = default;  // zero
  Laurent2(const Rat& c) {
    if (c != 0) t_.emplace(std::pair{0, 0}, c);
  }
  Laurent2(long long c) : Laurent2(Rat(c)) {}
  static Laurent2 term(const Rat& c, int e1, int e2) {
    Laurent2 l;
    if (c != 0) l.t_.emplace(std::pair{e1, e2}, c);
    return l;
  }

  bool is_zero() const { return t_.empty(); }

  Laurent2 operator-() const;
  Laurent2& operator+=(const Laurent2& o);
  Laurent2& operator-=(const Laurent2& o);
  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
  friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b);
  Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }
  friend Laurent2 operator*(Laurent2 a, const Rat& s);

  Rat coeff(int e1, int e2) const;
  Laurent2 coeff_first(int e1) const;   // slice at first exponent = e1
  Laurent2 coeff_second(int e2) const;  // slice at second exponent = e2
  int min1() const;
  int max1() const;
  int min2() const;
  int max2() const;

  // Exact evaluation; arguments must be nonzero when negative exponents occur.
  Rat eval(const Rat& x, const Rat& y) const;

  friend bool operator==(const Laurent2& a, const Laurent2& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const Laurent2& a, const Laurent2& b) {
    return !(a == b);
  }

  std::string str(const char* n1, const char* n2) const;

 private:
  std::map<std::pair<int, int>, Rat> t_;
  void add(int e1, int e2, const Rat& c);
};

}  // namespace elv
