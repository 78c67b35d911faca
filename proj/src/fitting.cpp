#include "whirl/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace whirl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = kPi / 2.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Fraction of angular backtracking (relative to total advance) above which
// the input is treated as shuffled rather than merely noisy.
constexpr double kBacktrackRatioLimit = 0.6;

class GaussianDraw {
 public:
  explicit GaussianDraw(std::uint64_t seed) : rng_(seed) {}

  // One pair of independent standard normals (Box-Muller).  Hand-rolled so
  // the stream depends only on the seed, not on the standard library.
  std::pair<double, double> pair() {
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;          // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  std::mt19937_64 rng_;
};

// Angles of the points about `ref`, unwrapped along sample order.  Points
// exactly on `ref` are carried with the previous angle.
std::vector<double> unwrapped_angles(const std::vector<Point>& pts, Point ref) {
  std::vector<double> th(pts.size(), 0.0);
  double prev_raw = 0.0;
  bool have_prev = false;
  double acc = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec2 d = pts[i] - ref;
    if (d.x == 0.0 && d.y == 0.0) {
      th[i] = acc;
      continue;
    }
    const double raw = std::atan2(d.y, d.x);
    if (!have_prev) {
      acc = raw;
      have_prev = true;
    } else {
      double step = raw - prev_raw;
      while (step > kPi) step -= 2.0 * kPi;
      while (step < -kPi) step += 2.0 * kPi;
      acc += step;
    }
    prev_raw = raw;
    th[i] = acc;
  }
  return th;
}

Point component_median(const std::vector<Point>& pts) {
  std::vector<double> xs(pts.size()), ys(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    xs[i] = pts[i].x;
    ys[i] = pts[i].y;
  }
  const size_t mid = pts.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  std::nth_element(ys.begin(), ys.begin() + mid, ys.end());
  return {xs[mid], ys[mid]};
}

// Traversal sanity check, run once on the raw input.  Ordered samples wind
// consistently around the middle of the cloud; shuffled ones advance and
// backtrack in nearly equal measure.
void check_ordering(const std::vector<Point>& pts) {
  const std::vector<double> th = unwrapped_angles(pts, component_median(pts));
  double advance = 0.0;
  double backtrack = 0.0;
  for (size_t i = 1; i < th.size(); ++i) {
    const double step = th[i] - th[i - 1];
    (step >= 0.0 ? advance : backtrack) += std::abs(step);
  }
  const double net = std::abs(advance - backtrack);
  if (net < kQuarter - 1e-9)
    throw Error(errc::insufficient_coverage,
                "samples span less than a quarter turn around the data median");
  if (std::min(advance, backtrack) > kBacktrackRatioLimit * std::max(advance, backtrack))
    throw Error(errc::input_not_ordered, "samples do not wind consistently; are they ordered?");
}

struct LogFit {
  double slope = 0.0;      // log m
  double intercept = 0.0;  // log r0
  double sse = kInf;
};

// Best (r0, m) for a fixed pole: plain linear regression of log r against
// theta/(pi/2).
LogFit radial_regression(const std::vector<Point>& pts, Point pole) {
  const size_t n = pts.size();
  std::vector<double> x(n), y(n);
  std::vector<double> th = unwrapped_angles(pts, pole);
  for (size_t i = 0; i < n; ++i) {
    const Vec2 d = pts[i] - pole;
    const double r2 = d.x * d.x + d.y * d.y;
    if (!(r2 > 0.0)) return LogFit{};
    x[i] = th[i] / kQuarter;
    y[i] = 0.5 * std::log(r2);
  }
  double xm = 0.0, ym = 0.0;
  for (size_t i = 0; i < n; ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= static_cast<double>(n);
  ym /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  if (!(sxx > 0.0)) return LogFit{};
  LogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  double sse = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += r * r;
  }
  fit.sse = sse;
  return fit;
}

struct SimplexOutcome {
  Point best;
  double f = kInf;
  int iterations = 0;
  bool converged = false;
};

// Standard Nelder-Mead on the pole coordinates.  `scale` sets the size below
// which the simplex counts as collapsed.
template <typename F>
SimplexOutcome simplex_minimize(F&& objective, Point start, double edge, double scale) {
  struct Vertex {
    Point p;
    double f;
  };
  std::array<Vertex, 3> v{Vertex{start, objective(start)},
                          Vertex{{start.x + edge, start.y}, 0.0},
                          Vertex{{start.x, start.y + edge}, 0.0}};
  v[1].f = objective(v[1].p);
  v[2].f = objective(v[2].p);

  const int max_iter = 800;
  SimplexOutcome out;
  auto order = [&] { std::sort(v.begin(), v.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; }); };
  order();
  for (int it = 0; it < max_iter; ++it) {
    const Point c{0.5 * (v[0].p.x + v[1].p.x), 0.5 * (v[0].p.y + v[1].p.y)};
    const Point xr{c.x + (c.x - v[2].p.x), c.y + (c.y - v[2].p.y)};
    const double fr = objective(xr);
    if (fr < v[0].f) {
      const Point xe{c.x + 2.0 * (c.x - v[2].p.x), c.y + 2.0 * (c.y - v[2].p.y)};
      const double fe = objective(xe);
      v[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < v[1].f) {
      v[2] = Vertex{xr, fr};
    } else {
      const bool outside = fr < v[2].f;
      const Point base = outside ? xr : v[2].p;
      const Point xc{c.x + 0.5 * (base.x - c.x), c.y + 0.5 * (base.y - c.y)};
      const double fc = objective(xc);
      if (fc < (outside ? fr : v[2].f)) {
        v[2] = Vertex{xc, fc};
      } else {
        for (int k = 1; k < 3; ++k) {
          v[k].p = Point{0.5 * (v[0].p.x + v[k].p.x), 0.5 * (v[0].p.y + v[k].p.y)};
          v[k].f = objective(v[k].p);
        }
      }
    }
    order();
    out.iterations = it + 1;
    const double spread = v[2].f - v[0].f;
    const double diam = std::max({distance(v[0].p, v[1].p), distance(v[0].p, v[2].p),
                                  distance(v[1].p, v[2].p)});
    if (spread <= 1e-12 * (std::abs(v[0].f) + 1e-30) && diam <= 3e-10 * scale) {
      out.converged = true;
      break;
    }
  }
  out.best = v[0].p;
  out.f = v[0].f;
  return out;
}

}  // namespace

SampleSet synth_samples(const SpiralSpec& spec, int n_points, double noise_sigma,
                        std::uint64_t seed) {
  if (n_points < kMinFitPoints)
    throw Error(errc::too_few_points, "need at least " + std::to_string(kMinFitPoints) +
                                          " points, got " + std::to_string(n_points));
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
    throw std::invalid_argument("noise_sigma must be finite and >= 0");

  const std::vector<QuarterArc> arcs = spiral_arcs(spec, kSynthArcs);
  SampleSet set;
  set.noise_sigma = noise_sigma;
  set.seed = seed;
  set.points.reserve(n_points);
  const double total = kSynthArcs * kQuarter;
  for (int k = 0; k < n_points; ++k) {
    const double t = total * static_cast<double>(k) / (n_points - 1);
    int a = static_cast<int>(t / kQuarter);
    if (a >= kSynthArcs) a = kSynthArcs - 1;
    const QuarterArc& arc = arcs[a];
    const double th = arc.start_angle - (t - a * kQuarter);
    set.points.push_back(arc.center + arc.radius * Vec2{std::cos(th), std::sin(th)});
  }
  if (noise_sigma > 0.0) {
    GaussianDraw gauss(seed);
    const double s = noise_sigma * spec.L;
    for (Point& p : set.points) {
      const auto [gx, gy] = gauss.pair();
      p.x += s * gx;
      p.y += s * gy;
    }
  }
  return set;
}

FitResult fit_spiral(const SampleSet& samples, std::optional<Point> init_pole,
                     std::optional<double> init_m) {
  (void)init_m;  // the inner regression picks the ratio; see the header
  const std::vector<Point>& pts = samples.points;
  if (static_cast<int>(pts.size()) < kMinFitPoints)
    throw Error(errc::too_few_points, "need at least " + std::to_string(kMinFitPoints) +
                                          " points, got " + std::to_string(pts.size()));
  check_ordering(pts);

  Point centroid{0.0, 0.0};
  for (const Point& p : pts) {
    centroid.x += p.x;
    centroid.y += p.y;
  }
  centroid.x /= static_cast<double>(pts.size());
  centroid.y /= static_cast<double>(pts.size());
  std::vector<double> radii(pts.size());
  double r_max = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    radii[i] = distance(pts[i], centroid);
    r_max = std::max(r_max, radii[i]);
  }
  const size_t mid = radii.size() / 2;
  std::nth_element(radii.begin(), radii.begin() + mid, radii.end());
  double d = radii[mid];
  if (!(d > 0.0)) d = 1.0;

  std::vector<Point> starts;
  if (init_pole) {
    starts.push_back(*init_pole);
  } else {
    starts = {Point{centroid.x + d, centroid.y}, Point{centroid.x - d, centroid.y},
              Point{centroid.x, centroid.y + d}, Point{centroid.x, centroid.y - d}};
  }

  // Far from the data every log-radius looks the same, so the raw objective
  // drops to zero again as the candidate pole recedes to infinity.  A spiral's
  // pole is surrounded by its samples; wall the search off well outside them.
  const double wall = 4.0 * std::max(r_max, d);
  auto objective = [&](Point pole) {
    if (distance(pole, centroid) > wall) return kInf;
    return radial_regression(pts, pole).sse;
  };

  SimplexOutcome winner;
  for (const Point& s : starts) {
    const SimplexOutcome got = simplex_minimize(objective, s, 0.5 * d, d);
    if (got.f < winner.f) winner = got;
  }

  const LogFit fit = radial_regression(pts, winner.best);
  FitResult result;
  result.pole_hat = winner.best;
  result.m_hat = std::exp(fit.slope);
  result.r0_hat = std::exp(fit.intercept);
  result.residual_norm = std::sqrt(fit.sse / static_cast<double>(pts.size()));
  result.iterations = winner.iterations;
  result.converged = winner.converged && std::isfinite(fit.sse) && result.m_hat > 1.0;
  return result;
}

double quarter_turn_ratio(const SampleSet& samples, Point pole) {
  const std::vector<Point>& pts = samples.points;
  if (pts.size() < 2)
    throw Error(errc::insufficient_coverage, "need at least two samples");
  std::vector<double> th = unwrapped_angles(pts, pole);
  std::vector<std::pair<double, double>> table(pts.size());  // (theta, log r)
  for (size_t i = 0; i < pts.size(); ++i) {
    const double r = distance(pts[i], pole);
    if (!(r > 0.0))
      throw Error(errc::insufficient_coverage, "sample coincides with the pole");
    table[i] = {th[i], std::log(r)};
  }
  std::sort(table.begin(), table.end());
  const double span = table.back().first - table.front().first;
  if (span < kPi - 1e-12)
    throw Error(errc::insufficient_coverage,
                "need two quarter turns of coverage, have " + std::to_string(span / kQuarter));

  auto interp = [&](double t) {
    auto it = std::lower_bound(table.begin(), table.end(), std::make_pair(t, -kInf));
    if (it == table.begin()) return table.front().second;
    if (it == table.end()) return table.back().second;
    const auto& [t1, y1] = *(it - 1);
    const auto& [t2, y2] = *it;
    if (t2 == t1) return y1;
    return y1 + (y2 - y1) * (t - t1) / (t2 - t1);
  };

  std::vector<double> est;
  est.reserve(table.size());
  for (const auto& [t, logr] : table) {
    const double back = t - kQuarter;
    if (back < table.front().first) continue;
    est.push_back(std::exp(logr - interp(back)));
  }
  if (est.empty())
    throw Error(errc::insufficient_coverage, "no sample has a quarter-turn predecessor");
  std::sort(est.begin(), est.end());
  const size_t n = est.size();
  return n % 2 == 1 ? est[n / 2] : 0.5 * (est[n / 2 - 1] + est[n / 2]);
}

std::vector<Point> read_xy_csv(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  bool first_content = true;
  size_t lineno = 0;
  auto parse_field = [](const std::string& s, double& out) {
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) return false;
    while (*end == ' ' || *end == '\t') ++end;
    return *end == '\0';
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos) continue;
    const size_t comma = line.find(',');
    bool ok = comma != std::string::npos && line.find(',', comma + 1) == std::string::npos;
    double x = 0.0, y = 0.0;
    if (ok) {
      ok = parse_field(line.substr(0, comma), x) && parse_field(line.substr(comma + 1), y);
    }
    if (!ok) {
      if (first_content) {  // header row
        first_content = false;
        continue;
      }
      throw Error(errc::parse_error, "bad csv row at line " + std::to_string(lineno));
    }
    first_content = false;
    pts.push_back({x, y});
  }
  return pts;
}

}  // namespace whirl
