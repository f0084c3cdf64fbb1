#pragma once

#include <vector>

#include "illposed/domain.hpp"
#include "illposed/function_rep.hpp"
#include "illposed/random.hpp"

namespace illposed {

// Seeded random function families used by the property suites.

// sine series on ab, 1..8 terms, c_k ~ N(0,1)/k
std::vector<FunctionRep> random_sine_series(Rng& rng, int count, const Interval& ab);

// Legendre series on ab, degree 0..max_degree, c_k ~ N(0,1)/(k+1)
std::vector<FunctionRep> random_legendre_series(Rng& rng, int count, const Interval& ab,
                                                int max_degree);

// mean-zero Legendre series on ab (so every draw changes sign), degree 1..max_degree
std::vector<FunctionRep> random_mean_zero_series(Rng& rng, int count, const Interval& ab,
                                                 int max_degree);

// p(x) exp(-sigma x) on [0, s_max], deg p <= 6, sigma in [1,3]
std::vector<FunctionRep> random_poly_exp(Rng& rng, int count, const HalfLineDomain& half);

// Legendre series of degree 1..8 on random intervals inside [-3,3]
std::vector<FunctionRep> random_interval_series(Rng& rng, int count);

// g^2 + delta with g a random Legendre series, sampled exactly on Chebyshev points
std::vector<FunctionRep> random_nonnegative(Rng& rng, int count);

}  // namespace illposed
