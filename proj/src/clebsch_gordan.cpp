// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>

#include <boost/multiprecision/cpp_int.hpp>

#include "spinhol/errors.hpp"
#include "spinhol/spin_core.hpp"

namespace spinhol {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_projection(int twice_j, int twice_m, const char* label) {
  if (std::abs(twice_m) > twice_j || (twice_j + twice_m) % 2 != 0) {
    throw DomainError(std::string("inconsistent projection for ") + label);
  }
}

}  // namespace

double clebsch_gordan(SpinQuantum j1, SpinQuantum j2, SpinQuantum j, int twice_m1, int twice_m2,
                      int twice_m) {
  const int tj1 = j1.twice_s, tj2 = j2.twice_s, tj = j.twice_s;
  check_projection(tj1, twice_m1, "j1");
  check_projection(tj2, twice_m2, "j2");
  check_projection(tj, twice_m, "j");
  if (twice_m1 + twice_m2 != twice_m) throw DomainError("m1 + m2 must equal m");
  if (tj < std::abs(tj1 - tj2) || tj > tj1 + tj2 || (tj1 + tj2 + tj) % 2 != 0) {
    throw DomainError("j1, j2, j violate the triangle rule");
  }

  // All of these are integers once the parity checks above pass.
  const int a = (tj1 + tj2 - tj) / 2;
  const int b = (tj1 - tj2 + tj) / 2;
  const int c = (-tj1 + tj2 + tj) / 2;
  const int d = (tj1 + tj2 + tj) / 2 + 1;
  const int j1_minus = (tj1 - twice_m1) / 2, j1_plus = (tj1 + twice_m1) / 2;
  const int j2_minus = (tj2 - twice_m2) / 2, j2_plus = (tj2 + twice_m2) / 2;
  const int j_minus = (tj - twice_m) / 2, j_plus = (tj + twice_m) / 2;
  const int shift1 = (tj - tj2 + twice_m1) / 2;  // j − j2 + m1
  const int shift2 = (tj - tj1 - twice_m2) / 2;  // j − j1 − m2

  cpp_rational sum = 0;
  for (int k = 0; k <= a; ++k) {
    const int f2 = j1_minus - k, f3 = j2_plus - k, f4 = shift1 + k, f5 = shift2 + k;
    if (f2 < 0 || f3 < 0 || f4 < 0 || f5 < 0) continue;
    const cpp_int denom =
        factorial(k) * factorial(a - k) * factorial(f2) * factorial(f3) * factorial(f4) * factorial(f5);
    const cpp_rational term(cpp_int(1), denom);
    sum += (k % 2 == 0) ? term : cpp_rational(-term);
  }
  if (sum == 0) return 0.0;

  const cpp_rational prefactor(
      cpp_int(tj + 1) * factorial(a) * factorial(b) * factorial(c) * factorial(j1_plus) *
          factorial(j1_minus) * factorial(j2_plus) * factorial(j2_minus) * factorial(j_plus) *
          factorial(j_minus),
      factorial(d));
  const cpp_rational squared = prefactor * sum * sum;
  const double magnitude = std::sqrt(squared.convert_to<double>());
  return sum > 0 ? magnitude : -magnitude;
}

}  // namespace spinhol
