#pragma once

#include <gmpxx.h>

#include "spinwit/spin.hpp"

namespace spinwit {

// Ballot-style count C(n, k) = binom(n + k, k) * (n - k + 1) / (n + 1):
// monotone lattice paths from (0,0) to (n, k) that never cross the diagonal.
mpz_class catalan_triangle(long n, long k);

// Spin-1/2 eigenspace dimension in closed form, even n and integer j only:
// d = (2j+1)^2 / (n/2 + j + 1) * binom(n, n/2 + j).
mpz_class d_half_closed(long n, TwiceSpin j);

// Spin-1 ground-sector dimension d_1(n, 0) as a single binomial sum
// (Riordan-number form); defined for n >= 2.
mpz_class riordan_d1(long n);

// m_s(n, j) recovered from magnetization-level counts: K(j) - K(j + 1),
// where K counts product states with total z-projection j. Exponential in
// memory across the projection axis, so intended as an independent check
// at small n.
mpz_class mult_via_magnetization(TwiceSpin s, long n, TwiceSpin j);

}  // namespace spinwit
