// Command line front end for the aflux experiment drivers.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aflux/aflux.hpp"

namespace {

aflux::Method parse_method(const std::string& s) { return s == "a" ? aflux::Method::kA : aflux::Method::kB; }

aflux::Flux parse_flux(const std::string& s, double speed) {
  return s == "burgers" ? aflux::Flux::burgers() : aflux::Flux::advection(speed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid point-value / moment solver for 1D scalar conservation laws"};
  app.require_subcommand(1);

  const std::map<std::string, std::string> methods{{"a", "a"}, {"b", "b"}};
  const std::map<std::string, bool> on_off{{"on", true}, {"off", false}};

  // run
  aflux::RunConfig cfg;
  std::string method = "b", flux = "advection";
  double speed = 1.0;
  bool limiter = false;
  double cfl = -1.0;
  auto* run = app.add_subcommand("run", "advance the smooth pulse (or Burgers data) and write a CSV");
  run->add_option("--degree", cfg.degree, "polynomial degree N")->check(CLI::Range(2, 8));
  run->add_option("--method", method, "a (upwind FD + RK3) or b (characteristics)")->transform(CLI::CheckedTransformer(methods));
  run->add_option("--flux", flux, "advection or burgers")->check(CLI::IsMember({"advection", "burgers"}));
  run->add_option("--speed", speed, "advection speed");
  run->add_option("--cells", cfg.cells, "number of cells")->check(CLI::Range(3, 1 << 24));
  run->add_option("--cfl", cfl, "CFL number (default 0.5 for b, 1e-4 for a)");
  run->add_option("--t-end", cfg.t_end, "final time");
  run->add_option("--limiter", limiter, "on or off")->transform(CLI::CheckedTransformer(on_off));
  run->add_option("--out", cfg.output, "output CSV path (default: stdout)");

  // converge
  int conv_degree = 2;
  std::string conv_method = "b";
  std::vector<int> grids{20, 40, 80, 160, 320};
  double conv_cfl = 0.0;
  auto* converge = app.add_subcommand("converge", "convergence study for advection of the smooth pulse");
  converge->add_option("--degree", conv_degree)->check(CLI::Range(2, 8));
  converge->add_option("--method", conv_method)->transform(CLI::CheckedTransformer(methods));
  converge->add_option("--cells", grids, "ascending grid sizes")->delimiter(',');
  converge->add_option("--cfl", conv_cfl, "CFL number (default 0.5 for b, 1e-4 for a)");

  // cflmax
  int cfl_degree = 2;
  std::string cfl_method = "a";
  auto* cflmax = app.add_subcommand("cflmax", "largest von Neumann stable CFL number");
  cflmax->add_option("--degree", cfl_degree)->check(CLI::Range(2, 8));
  cflmax->add_option("--method", cfl_method)->transform(CLI::CheckedTransformer(methods));

  auto* table = app.add_subcommand("cfl-table", "cflmax for N = 2..6 and both methods");

  // burgers-demo
  aflux::BurgersDemoOptions demo;
  auto* burgers = app.add_subcommand("burgers-demo", "shock formation with N = 6 method b, plus a Roe reference");
  burgers->add_option("--degree", demo.degree)->check(CLI::Range(2, 8));
  burgers->add_option("--cells", demo.grids, "grid sizes")->delimiter(',');
  burgers->add_option("--cfl", demo.cfl);
  burgers->add_option("--t-end", demo.t_end);
  burgers->add_option("--offset", demo.offset, "constant added to the Gaussian");
  burgers->add_option("--out", demo.output_dir, "directory for the CSV files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cfg.method = parse_method(method);
      cfg.flux = parse_flux(flux, speed);
      cfg.limiter = limiter;
      cfg.cfl = cfl > 0.0 ? cfl : (cfg.method == aflux::Method::kA ? 1e-4 : 0.5);
      const bool to_stdout = cfg.output.empty();
      const aflux::RunResult r = aflux::run(cfg);
      if (to_stdout) {
        const aflux::BasisSet basis = aflux::build_basis(cfg.degree);
        aflux::write_csv(std::cout, r.state, r.mesh, basis,
                         {cfg.degree, aflux::method_name(cfg.method), cfg.cfl, r.state.t, aflux::total_mass(r.state, r.mesh)});
      } else {
        std::fprintf(stderr, "%d steps, t = %.17g, mass %.17g -> %.17g\n", r.steps, r.state.t, r.initial_mass,
                     aflux::total_mass(r.state, r.mesh));
      }
    } else if (*converge) {
      const auto rows = aflux::convergence_study(conv_degree, parse_method(conv_method), grids, conv_cfl);
      std::printf("M,dx,l1_error,eoc\n");
      for (const auto& row : rows) {
        if (std::isnan(row.eoc)) std::printf("%d,%.6g,%.6e,\n", row.cells, row.dx, row.error);
        else std::printf("%d,%.6g,%.6e,%.3f\n", row.cells, row.dx, row.error, row.eoc);
      }
    } else if (*cflmax) {
      std::printf("N,method,cfl_max\n%d,%s,%.3f\n", cfl_degree, cfl_method.c_str(),
                  aflux::cfl_max(cfl_degree, parse_method(cfl_method)));
    } else if (*table) {
      aflux::write_cfl_csv(std::cout, aflux::cfl_table());
    } else if (*burgers) {
      const auto res = aflux::burgers_demo(demo);
      std::printf("grid,steps,shock_x,reference_shock_x,shift_over_dx,max_point,initial_max\n");
      for (const auto& g : res.grids) {
        double mx = g.state.pt.front();
        for (double v : g.state.pt) mx = std::max(mx, v);
        std::printf("%d,%d,%.6f,%.6f,%.3f,%.8f,%.8f\n", g.mesh.cells, g.steps, g.shock, res.reference_shock,
                    std::abs(g.shock - res.reference_shock) / g.mesh.dx(), mx, g.initial_max);
      }
    }
  } catch (const aflux::RunFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
