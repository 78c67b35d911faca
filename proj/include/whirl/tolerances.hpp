#pragma once

namespace whirl::tol {

// Single source of truth for the verification tolerances.  Each value is
// dimensionless: length residuals are divided by L, squared-length residuals
// by L^2, and ratio/slope residuals by the expected magnitude before being
// compared against these.

inline constexpr double center_equivalence = 1e-11;  // closed vs recursive centers
inline constexpr double pole_methods_agree = 1e-11;  // closed vs iterative pole
inline constexpr double pole_forms_agree = 1e-14;    // the two closed-form expressions
inline constexpr double circumcircle = 1e-10;        // |dist^2 * 2 m^(2i) / L^2 - 1|
inline constexpr double pole_circle = 1e-12;         // |dist(pole, center0)^2 - L^2/2| / L^2
inline constexpr double pole_slope = 1e-12;          // slope of pole from lower-right vs m
inline constexpr double pole_limits = 1e-5;          // pole-to-vertex distance in the limits
inline constexpr double diag_orthogonality = 1e-12;  // normalized |d1.d2|
inline constexpr double diag_interception = 1e-12;   // diagonal crossing vs pole
inline constexpr double diag_length_ratio = 1e-12;   // |d1|/|d2| vs m
inline constexpr double diag_slopes = 1e-12;         // diagonal slopes vs (-1/m, m)

}  // namespace whirl::tol
