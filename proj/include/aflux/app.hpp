#ifndef AFLUX_APP_HPP_
#define AFLUX_APP_HPP_

// Experiment drivers: single runs with CSV output, the advection convergence
// study, the Burgers shock demo with its Roe reference, and the CFL table.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aflux/basis.hpp"
#include "aflux/flux.hpp"
#include "aflux/method_a.hpp"
#include "aflux/method_b.hpp"
#include "aflux/quadrature.hpp"
#include "aflux/scheme_core.hpp"
#include "aflux/stability.hpp"
#include "aflux/state.hpp"

namespace aflux {

/// Smooth pulse 0.8 + exp(-(x - 1/2)^2 / 0.05^2) of the convergence test.
inline double gaussian_pulse(double x, double offset = 0.8) {
  const double d = (x - 0.5) / 0.05;
  return offset + std::exp(-d * d);
}

struct RunConfig {
  int degree = 2;
  Method method = Method::kB;
  Flux flux = Flux::advection(1.0);
  int cells = 40;
  double cfl = 0.5;
  double t_end = 0.1;
  bool limiter = false;
  std::string output;  // empty: no file
  double x_left = 0.0;
  double x_right = 1.0;

  void validate() const {
    if (degree < 2 || degree > 8) throw std::invalid_argument("degree must lie in [2, 8]");
    if (cells < 3) throw std::invalid_argument("cells must be at least 3");
    if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be non-negative");
    if (method == Method::kB && cfl > 1.0) throw std::invalid_argument("method b needs cfl <= 1");
  }
};

/// Raised when a run produces non-finite values; carries the completed steps.
class RunFailure : public std::runtime_error {
 public:
  RunFailure(const std::string& what, int steps) : std::runtime_error(what), steps_(steps) {}
  int steps() const { return steps_; }

 private:
  int steps_;
};

struct RunResult {
  Mesh mesh;
  State state;
  int steps = 0;
  double initial_mass = 0.0;
};

struct CsvMeta {
  int degree = 2;
  std::string method;
  double cfl = 0.0;
  double t = 0.0;
  double mass = 0.0;
};

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// `# N=..,method=..,cfl=..,t=..,mass=..`, a column header, then `x,q` rows in
/// increasing x alternating cell centre (reconstruction value) and right
/// interface (point value).
inline void write_csv(std::ostream& os, const State& state, const Mesh& mesh, const BasisSet& basis,
                      const CsvMeta& meta) {
  os << "# N=" << meta.degree << ",method=" << meta.method << ",cfl=" << format_double(meta.cfl)
     << ",t=" << format_double(meta.t) << ",mass=" << format_double(meta.mass) << '\n';
  os << "x,q\n";
  char buf[96];
  for (int i = 0; i < state.cells; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", mesh.center(i), basis.evaluate(state.cell_dofs(i), 0.0));
    os << buf;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", mesh.interface(i), state.point(i));
    os << buf;
  }
}

struct CsvData {
  std::map<std::string, std::string> meta;
  std::vector<double> x;
  std::vector<double> q;
};

inline CsvData read_csv(std::istream& is) {
  CsvData data;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::stringstream ss(line.substr(1));
      std::string field;
      while (std::getline(ss, field, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        std::string key = field.substr(0, eq);
        key.erase(0, key.find_first_not_of(' '));
        data.meta[key] = field.substr(eq + 1);
      }
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed csv row: " + line);
    if (line.compare(0, comma, "x") == 0) continue;
    data.x.push_back(std::stod(line.substr(0, comma)));
    data.q.push_back(std::stod(line.substr(comma + 1)));
  }
  return data;
}

/// Interface rows (every second row) of a solver CSV.
inline std::vector<double> interface_values(const CsvData& data) {
  std::vector<double> out;
  for (std::size_t j = 1; j < data.q.size(); j += 2) out.push_back(data.q[j]);
  return out;
}

/// Steps `state` to t_end with the configured method.
inline State advance(const State& initial, const Scheme& scheme, const RunConfig& cfg, int* steps) {
  int done = 0;
  try {
    State out = cfg.method == Method::kA
                    ? method_a_run(initial, scheme, cfg.cfl, cfg.t_end, RunOptions{cfg.limiter}, &done)
                    : method_b_run(initial, scheme, cfg.cfl, cfg.t_end, MethodBOptions{cfg.limiter}, &done);
    if (steps) *steps = done;
    return out;
  } catch (const StepFailure& e) {
    throw RunFailure(std::string(e.what()) + " after " + std::to_string(done) + " steps", done);
  }
}

inline RunResult run(const RunConfig& cfg, const std::function<double(double)>& q0 = [](double x) {
  return gaussian_pulse(x);
}) {
  cfg.validate();
  RunResult res;
  res.mesh = Mesh(cfg.x_left, cfg.x_right, cfg.cells);
  const Scheme scheme(res.mesh, cfg.degree, cfg.flux);
  const State initial = project_initial(q0, res.mesh, scheme.basis());
  res.initial_mass = total_mass(initial, res.mesh);
  res.state = cfg.t_end > 0.0 ? advance(initial, scheme, cfg, &res.steps) : initial;
  if (!cfg.output.empty()) {
    std::ofstream os(cfg.output);
    if (!os) throw std::runtime_error("cannot open " + cfg.output);
    write_csv(os, res.state, res.mesh, scheme.basis(),
              {cfg.degree, method_name(cfg.method), cfg.cfl, res.state.t, total_mass(res.state, res.mesh)});
  }
  return res;
}

struct ConvergenceRow {
  int cells = 0;
  double dx = 0.0;
  double error = 0.0;
  double eoc = std::numeric_limits<double>::quiet_NaN();  // from the second row on
};

/// Advection with c = 1 on [0, 1] to t = 0.1 from the smooth pulse.
inline std::vector<ConvergenceRow> convergence_study(int degree, Method method, const std::vector<int>& grids,
                                                     double cfl = 0.0) {
  if (!std::is_sorted(grids.begin(), grids.end())) throw std::invalid_argument("grids must be ascending");
  const double t_end = 0.1;
  RunConfig cfg;
  cfg.degree = degree;
  cfg.method = method;
  cfg.cfl = cfl > 0.0 ? cfl : (method == Method::kA ? 1e-4 : 0.5);
  cfg.t_end = t_end;
  std::vector<ConvergenceRow> rows;
  for (int m : grids) {
    cfg.cells = m;
    const RunResult r = run(cfg);
    ConvergenceRow row{m, r.mesh.dx(), l1_error_points(r.state, r.mesh, [&](double x) { return gaussian_pulse(x - t_end); })};
    if (!rows.empty()) row.eoc = std::log(rows.back().error / row.error) / std::log(rows.back().dx / row.dx);
    rows.push_back(row);
  }
  return rows;
}

/// Roe flux for Burgers with the sonic fix f = 0 when f'(qL) < 0 < f'(qR).
inline double roe_burgers_flux(double ql, double qr) {
  const Flux f = Flux::burgers();
  if (ql < 0.0 && qr > 0.0) return 0.0;
  const double a = ql != qr ? (f(ql) - f(qr)) / (ql - qr) : f.derivative(ql);
  return a > 0.0 ? f(ql) : f(qr);
}

/// First-order Roe finite volume solution on a periodic grid, CFL 0.9.
/// Returns cell averages.
inline std::vector<double> roe_burgers_reference(const std::function<double(double)>& q0, int cells, double t_end,
                                                 double x_left = 0.0, double x_right = 1.0) {
  if (cells < 1) throw std::invalid_argument("roe_burgers_reference: need at least one cell");
  const double dx = (x_right - x_left) / cells;
  const QuadratureRule gl = gauss_legendre(8);
  std::vector<double> q(static_cast<std::size_t>(cells));
  for (int i = 0; i < cells; ++i) {
    const double xc = x_left + (i + 0.5) * dx;
    q[static_cast<std::size_t>(i)] = gl.integrate([&](double xi) { return q0(xc + xi * dx); });
  }
  std::vector<double> flux(static_cast<std::size_t>(cells));
  double t = 0.0;
  while (t < t_end) {
    double smax = 0.0;
    for (double v : q) smax = std::max(smax, std::abs(v));
    double dt = smax > 0.0 ? 0.9 * dx / smax : t_end - t;
    if (t + dt > t_end) dt = t_end - t;
    // flux[i] sits at the right edge of cell i
    for (int i = 0; i < cells; ++i)
      flux[static_cast<std::size_t>(i)] =
          roe_burgers_flux(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>((i + 1) % cells)]);
    for (int i = 0; i < cells; ++i)
      q[static_cast<std::size_t>(i)] -=
          dt / dx * (flux[static_cast<std::size_t>(i)] - flux[static_cast<std::size_t>((i + cells - 1) % cells)]);
    t += dt;
  }
  return q;
}

/// Midpoint between the two samples with the most negative jump (periodic).
inline double shock_location(const std::vector<double>& x, const std::vector<double>& q, double period = 1.0) {
  if (x.size() != q.size() || x.size() < 2) throw std::invalid_argument("shock_location: bad samples");
  std::size_t best = 0;
  double jump = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < q.size(); ++j) {
    const std::size_t k = (j + 1) % q.size();
    const double d = q[k] - q[j];
    if (d < jump) {
      jump = d;
      best = j;
    }
  }
  const std::size_t k = (best + 1) % q.size();
  const double xk = k == 0 ? x[k] + period : x[k];
  return 0.5 * (x[best] + xk);
}

struct BurgersDemoOptions {
  int degree = 6;
  std::vector<int> grids{15, 50};
  double cfl = 0.4;
  double t_end = 0.3;
  double offset = 0.8;
  int reference_cells = 4000;
  std::string output_dir;  // empty: no files
};

/// Maximum of q on [a, b] from 20001 equispaced samples.
inline double sampled_max(const std::function<double(double)>& q, double a, double b) {
  double mx = -std::numeric_limits<double>::infinity();
  for (int j = 0; j <= 20000; ++j) mx = std::max(mx, q(a + (b - a) * j / 20000.0));
  return mx;
}

struct BurgersGridResult {
  Mesh mesh;
  State state;
  int steps = 0;
  double initial_max = 0.0;  // of the initial data, not just its point values
  double shock = 0.0;
};

struct BurgersDemoResult {
  std::vector<BurgersGridResult> grids;
  std::vector<double> reference_x;
  std::vector<double> reference_q;
  double reference_shock = 0.0;
};

inline BurgersDemoResult burgers_demo(const BurgersDemoOptions& opts = {}) {
  const auto q0 = [&](double x) { return gaussian_pulse(x, opts.offset); };
  BurgersDemoResult out;
  if (!opts.output_dir.empty()) std::filesystem::create_directories(opts.output_dir);
  for (int m : opts.grids) {
    RunConfig cfg;
    cfg.degree = opts.degree;
    cfg.method = Method::kB;
    cfg.flux = Flux::burgers();
    cfg.cells = m;
    cfg.cfl = opts.cfl;
    cfg.t_end = opts.t_end;
    cfg.limiter = true;
    if (!opts.output_dir.empty()) cfg.output = opts.output_dir + "/burgers_N" + std::to_string(opts.degree) + "_M" + std::to_string(m) + ".csv";
    BurgersGridResult g;
    g.mesh = Mesh(cfg.x_left, cfg.x_right, m);
    g.initial_max = sampled_max(q0, cfg.x_left, cfg.x_right);
    const RunResult r = run(cfg, q0);
    g.state = r.state;
    g.steps = r.steps;
    std::vector<double> x(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) x[static_cast<std::size_t>(i)] = g.mesh.interface(i);
    g.shock = shock_location(x, g.state.pt);
    out.grids.push_back(std::move(g));
  }
  out.reference_q = roe_burgers_reference(q0, opts.reference_cells, opts.t_end);
  const double dx = 1.0 / opts.reference_cells;
  for (int i = 0; i < opts.reference_cells; ++i) out.reference_x.push_back((i + 0.5) * dx);
  out.reference_shock = shock_location(out.reference_x, out.reference_q);
  if (!opts.output_dir.empty()) {
    std::ofstream os(opts.output_dir + "/burgers_roe_M" + std::to_string(opts.reference_cells) + ".csv");
    if (!os) throw std::runtime_error("cannot write reference csv");
    os << "# roe,cells=" << opts.reference_cells << ",t=" << format_double(opts.t_end) << "\nx,q\n";
    char buf[96];
    for (std::size_t i = 0; i < out.reference_q.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", out.reference_x[i], out.reference_q[i]);
      os << buf;
    }
  }
  return out;
}

struct CflEntry {
  int degree;
  Method method;
  double cfl_max;
};

inline std::vector<CflEntry> cfl_table(int min_degree = 2, int max_degree = 6) {
  std::vector<CflEntry> rows;
  for (Method m : {Method::kA, Method::kB})
    for (int n = min_degree; n <= max_degree; ++n) rows.push_back({n, m, cfl_max(n, m)});
  return rows;
}

/// `N,method,cfl_max` rows.
inline void write_cfl_csv(std::ostream& os, const std::vector<CflEntry>& rows) {
  os << "N,method,cfl_max\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%s,%.3f\n", r.degree, method_name(r.method).c_str(), r.cfl_max);
    os << buf;
  }
}

}  // namespace aflux

#endif  // AFLUX_APP_HPP_
