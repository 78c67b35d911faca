#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "whirl/spiral.hpp"

namespace whirl {

// Points sampled along a spiral, in traversal order (outermost first).
// noise_sigma and seed record how synthetic sets were produced; sets read
// from files carry zeros there.
struct SampleSet {
  std::vector<Point> points;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr int kMinFitPoints = 8;
inline constexpr int kSynthArcs = 4;  // quarter turns covered by synth_samples

// n_points samples spread uniformly in turning angle over the first
// kSynthArcs arcs, plus isotropic Gaussian noise of standard deviation
// noise_sigma*L per coordinate.  Same seed, same output.  Requires
// n_points >= kMinFitPoints (Error(too_few_points)).
SampleSet synth_samples(const SpiralSpec& spec, int n_points, double noise_sigma,
                        std::uint64_t seed);

struct FitResult {
  double m_hat = 0.0;
  Point pole_hat;
  double r0_hat = 0.0;         // radius at unwrapped angle zero
  double residual_norm = 0.0;  // rms of log-radius residuals
  int iterations = 0;
  bool converged = false;
};

// Least-squares fit of pole and ratio.  The model is
//   log r(theta) = log r0 + (theta / (pi/2)) * log m
// with theta the angle about the pole, unwrapped along sample order.  For a
// fixed pole the best (r0, m) is a closed-form linear regression, so only the
// pole is searched, with a Nelder-Mead simplex started from four points
// around the sample centroid (or from init_pole when given).  init_m is
// accepted for interface completeness; the inner regression supersedes any
// starting ratio, so it does not influence the result.
//
// Errors: too_few_points below kMinFitPoints, input_not_ordered when the
// points do not wind consistently around the data's median point,
// insufficient_coverage when they span less than one quarter turn.  A fit
// that stalls returns its best iterate with converged = false instead of
// throwing.
FitResult fit_spiral(const SampleSet& samples, std::optional<Point> init_pole = {},
                     std::optional<double> init_m = {});

// Median ratio r(theta) / r(theta - pi/2) over the samples, with radii taken
// about the given pole and the shifted radius linearly interpolated in
// (theta, log r).  A direct, fit-free estimate of m.  Requires at least two
// quarter turns of angular coverage (Error(insufficient_coverage)).
double quarter_turn_ratio(const SampleSet& samples, Point pole);

// Two numeric columns x,y; an optional header line is skipped.  Throws
// Error(parse_error) on malformed rows.
std::vector<Point> read_xy_csv(std::istream& in);

}  // namespace whirl
