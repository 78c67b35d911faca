// Command-line front end for the whirling-square spiral kernel: pole and
// center queries, section-ratio tables, the identity-check suite, spiral
// fitting, sample synthesis, and SVG figures.
//
// Exit codes: 0 success (and all checks passing, for `verify`), 1 computation
// or input-data failure, 2 usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "whirl/diagonals.hpp"
#include "whirl/fitting.hpp"
#include "whirl/numfmt.hpp"
#include "whirl/render.hpp"
#include "whirl/sections.hpp"
#include "whirl/spiral.hpp"
#include "whirl/verify.hpp"

#include <nlohmann/json.hpp>

namespace {

constexpr double kGolden = 1.618033988749895;

struct GlobalArgs {
  double m = kGolden;
  double L = 1.0;
  std::string origin = "0,0";
  double tol = whirl::kDefaultTol;
  std::string out;
  std::uint64_t seed = 0;
};

whirl::Point parse_point(const std::string& text) {
  std::stringstream ss(text);
  double x = 0.0, y = 0.0;
  char comma = 0;
  if (!(ss >> x >> comma >> y) || comma != ',' || !(ss >> std::ws).eof())
    throw CLI::ValidationError("expected a point as x,y, got '" + text + "'");
  return {x, y};
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out);
  f << text;
}

std::string point_str(whirl::Point p) {
  return "(" + whirl::fmt_g15(p.x) + "," + whirl::fmt_g15(p.y) + ")";
}

whirl::SpiralSpec spec_from(const GlobalArgs& g) {
  return whirl::make_spec(g.m, g.L, parse_point(g.origin));
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      grid.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError("bad grid entry '" + tok + "'");
    }
  }
  if (grid.empty()) throw CLI::ValidationError("grid must not be empty");
  return grid;
}

whirl::Layer layer_from_name(const std::string& name) {
  if (name == "squares") return whirl::Layer::squares;
  if (name == "arcs") return whirl::Layer::arcs;
  if (name == "diagonals") return whirl::Layer::diagonals;
  if (name == "circumcircles") return whirl::Layer::circumcircles;
  if (name == "pole") return whirl::Layer::pole;
  if (name == "pole_circle") return whirl::Layer::pole_circle;
  throw CLI::ValidationError("unknown layer '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"whirling-square spiral toolkit"};
  app.require_subcommand(1);

  GlobalArgs g;
  app.add_option("--m", g.m, "shrink ratio per square (> 1)")->capture_default_str();
  app.add_option("--L", g.L, "side of the first square")->capture_default_str();
  app.add_option("--origin", g.origin, "center of the first square as x,y")->capture_default_str();
  app.add_option("--tol", g.tol, "tolerance for iterative computations")->capture_default_str();
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--seed", g.seed, "seed for sample synthesis")->capture_default_str();

  auto* pole_cmd = app.add_subcommand("pole", "pole of the spiral, closed form and iterated");
  auto* centers_cmd = app.add_subcommand("centers", "square centers as CSV");
  int centers_max_i = 30;
  centers_cmd->add_option("--max-i", centers_max_i, "last square index")->capture_default_str();
  auto* pfib_cmd = app.add_subcommand("pfib", "section-ratio table as CSV");
  int p_max = 5;
  pfib_cmd->add_option("--p-max", p_max, "last section order")->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "run the identity-check suite, JSON report");
  std::string grid_text;
  int verify_max_i = 30;
  verify_cmd->add_option("--grid", grid_text, "comma-separated ratios (default: built-in grid)");
  verify_cmd->add_option("--max-i", verify_max_i, "per-square check depth")->capture_default_str();
  auto* fit_cmd = app.add_subcommand("fit", "fit pole and ratio to x,y samples, JSON result");
  std::string fit_in;
  std::string fit_init_pole;
  double fit_init_m = 0.0;
  fit_cmd->add_option("--in", fit_in, "CSV file with x,y rows ('-' for stdin)")->required();
  fit_cmd->add_option("--init-pole", fit_init_pole, "starting pole as x,y");
  fit_cmd->add_option("--init-m", fit_init_m, "starting ratio (informational)");
  auto* synth_cmd = app.add_subcommand("synth", "synthesize spiral samples as CSV");
  int synth_n = 100;
  double synth_noise = 0.0;
  synth_cmd->add_option("--n-points", synth_n, "number of samples")->capture_default_str();
  synth_cmd->add_option("--noise", synth_noise, "noise sigma in units of L")->capture_default_str();
  auto* render_cmd = app.add_subcommand("render", "SVG figure");
  int render_n = 8;
  std::string layers_text = "squares,arcs,pole";
  whirl::RenderOptions ropts;
  bool polyline = false;
  render_cmd->add_option("--n", render_n, "number of squares")->capture_default_str();
  render_cmd->add_option("--layers", layers_text, "comma-separated layer list")
      ->capture_default_str();
  render_cmd->add_option("--width", ropts.width_px, "viewport width in px")->capture_default_str();
  render_cmd->add_option("--height", ropts.height_px, "viewport height in px")
      ->capture_default_str();
  render_cmd->add_option("--margin", ropts.margin_fraction, "padding around square 0, fraction of L")
      ->capture_default_str();
  render_cmd->add_flag("--polyline", polyline, "draw arcs as sampled polylines (debug)");
  render_cmd->add_option("--samples-per-arc", ropts.samples_per_arc, "polyline density")
      ->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (pole_cmd->parsed()) {
      const whirl::SpiralSpec spec = spec_from(g);
      const whirl::Pole closed = whirl::pole_closed(spec);
      const whirl::Pole stepped = whirl::pole_iterative(spec, g.tol);
      std::string text = "closed: " + point_str(closed.point) + "\n";
      text += "iterative: " + point_str(stepped.point) +
              " iterations=" + std::to_string(stepped.iterations) +
              " residual=" + whirl::fmt_shortest(stepped.residual) + "\n";
      write_output(g.out, text);
    } else if (centers_cmd->parsed()) {
      write_output(g.out, whirl::emit_centers_csv(spec_from(g), centers_max_i));
    } else if (pfib_cmd->parsed()) {
      std::string csv = "p,alpha,residual,iterations\n";
      for (const whirl::PFibResult& row : whirl::p_fibonacci_table(p_max)) {
        csv += std::to_string(row.p) + "," + whirl::fmt_g17(row.alpha) + "," +
               whirl::fmt_g17(row.residual) + "," + std::to_string(row.iterations) + "\n";
      }
      write_output(g.out, csv);
    } else if (verify_cmd->parsed()) {
      const std::vector<double> grid =
          grid_text.empty() ? whirl::default_grid() : parse_grid(grid_text);
      const whirl::VerificationReport report = whirl::run_suite(grid, g.L, verify_max_i);
      write_output(g.out, whirl::report_to_json(report).dump(2) + "\n");
      return report.all_passed() ? 0 : 1;
    } else if (fit_cmd->parsed()) {
      std::vector<whirl::Point> pts;
      if (fit_in == "-") {
        pts = whirl::read_xy_csv(std::cin);
      } else {
        std::ifstream f(fit_in);
        if (!f) throw std::runtime_error("cannot open " + fit_in);
        pts = whirl::read_xy_csv(f);
      }
      whirl::SampleSet samples;
      samples.points = std::move(pts);
      std::optional<whirl::Point> init_pole;
      if (!fit_init_pole.empty()) init_pole = parse_point(fit_init_pole);
      std::optional<double> init_m;
      if (fit_cmd->count("--init-m") > 0) init_m = fit_init_m;
      const whirl::FitResult fit = whirl::fit_spiral(samples, init_pole, init_m);
      nlohmann::ordered_json j;
      j["m_hat"] = fit.m_hat;
      j["pole_hat"] = {{"x", fit.pole_hat.x}, {"y", fit.pole_hat.y}};
      j["r0_hat"] = fit.r0_hat;
      j["residual_norm"] = fit.residual_norm;
      j["iterations"] = fit.iterations;
      j["converged"] = fit.converged;
      write_output(g.out, j.dump(2) + "\n");
    } else if (synth_cmd->parsed()) {
      const whirl::SampleSet set =
          whirl::synth_samples(spec_from(g), synth_n, synth_noise, g.seed);
      std::string csv = "x,y\n";
      for (const whirl::Point& p : set.points)
        csv += whirl::fmt_g17(p.x) + "," + whirl::fmt_g17(p.y) + "\n";
      write_output(g.out, csv);
    } else if (render_cmd->parsed()) {
      ropts.arcs_as_polyline = polyline;
      ropts.layers.clear();
      std::stringstream ss(layers_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) ropts.layers.push_back(layer_from_name(tok));
      write_output(g.out, whirl::render_svg(spec_from(g), render_n, ropts));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
