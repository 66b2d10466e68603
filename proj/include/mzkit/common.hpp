/* Copyright 2026 The mzkit Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef MZKIT_COMMON_HPP
#define MZKIT_COMMON_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mzkit {

// Exact integers and rationals: all algebraic computations run over these.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Working floating type for numerics.  60 decimal digits: 50 significant
// digits of deliverable precision plus guard digits for accumulation.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

// Thrown when an input is outside an operation's mathematical domain
// (divergent word, argument outside (0,1), malformed syntax, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numeric routine cannot certify the requested tolerance.
class tolerance_error : public std::runtime_error {
 public:
  explicit tolerance_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int factorial(int n) {
  if (n < 0) throw domain_error("factorial of negative integer");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - (k - i));
    r /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return r;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Real to_real(const Rat& q) {
  return Real(boost::multiprecision::numerator(q)) /
         Real(boost::multiprecision::denominator(q));
}

inline std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Decimal rendering with a fixed number of significant digits, used for all
// JSON output so that results are deterministic strings, never bare floats.
inline std::string real_str(const Real& x, int digits = 50) {
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace mzkit

#endif  // MZKIT_COMMON_HPP
