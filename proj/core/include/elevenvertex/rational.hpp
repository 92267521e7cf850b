#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace elv {

// Exact rational scalar. All algebraic identity checks run on this type;
// doubles appear only in the integrators. Expression templates are off so
// arithmetic yields plain values (keeps template deduction simple).
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(BigInt(num), BigInt(den));
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace elv
