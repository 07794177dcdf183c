#pragma once

#include <cstddef>
#include <vector>

namespace asymp {

// n points from lo to hi inclusive, uniformly spaced.
std::vector<double> linspace(double lo, double hi, std::size_t n);

// n points from lo to hi inclusive, uniform in log scale.  Requires 0 < lo < hi.
std::vector<double> logspace(double lo, double hi, std::size_t n);

// Geometric ladder r0, r0*q, r0*q^2, ... (n points, strictly decreasing for q < 1).
std::vector<double> geometric_radii(double r0, double q, std::size_t n);

}  // namespace asymp
