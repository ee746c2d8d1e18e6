// Command-line front end: list the field catalog, evaluate a field and its
// operators at a point, run a sampled identity check, or export projected
// level-set points. Exit codes: 0 success (and check passed), 1 check
// failed, 2 usage or evaluation errors.
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minsurf/expr.hpp"
#include "minsurf/fieldspec.hpp"
#include "minsurf/holo.hpp"
#include "minsurf/operators.hpp"
#include "minsurf/verify.hpp"

namespace {

using nlohmann::json;

std::vector<double> parse_point(const std::string& s) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
    if (i >= s.size()) break;
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc()) {
      throw std::invalid_argument("bad coordinate in --point near '" + s.substr(i) + "'");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(p - s.data());
  }
  if (out.empty()) throw std::invalid_argument("--point needs at least one coordinate");
  return out;
}

json jet_json(const minsurf::Jet2& j) {
  json o;
  o["value"] = j.value();
  json g = json::array();
  for (int i = 0; i < j.dim(); ++i) g.push_back(j.grad(i));
  o["gradient"] = g;
  const minsurf::OperatorValues ops = minsurf::evaluate_operators(j);
  o["grad_norm_sq"] = ops.grad_norm_sq;
  o["laplacian"] = ops.laplacian;
  o["inf_laplacian"] = ops.inf_laplacian;
  o["one_laplacian"] = ops.one_laplacian;
  if (ops.mean_curvature) o["mean_curvature"] = *ops.mean_curvature;
  return o;
}

void print_jet_human(const minsurf::Jet2& j) {
  std::cout << "value: " << j.value() << "\n";
  std::cout << "gradient:";
  for (int i = 0; i < j.dim(); ++i) std::cout << ' ' << j.grad(i);
  std::cout << "\n";
  const minsurf::OperatorValues ops = minsurf::evaluate_operators(j);
  std::cout << "grad_norm_sq: " << ops.grad_norm_sq << "\n";
  std::cout << "laplacian: " << ops.laplacian << "\n";
  std::cout << "inf_laplacian: " << ops.inf_laplacian << "\n";
  std::cout << "one_laplacian: " << ops.one_laplacian << "\n";
  if (ops.mean_curvature) std::cout << "mean_curvature: " << *ops.mean_curvature << "\n";
}

int run_eval(const std::string& spec, const std::string& point_text, int dim,
             bool as_json) {
  const minsurf::ResolvedField field = minsurf::resolve_spec(spec, dim);
  const std::vector<double> x = parse_point(point_text);

  if (field.scalar) {
    const minsurf::ScalarField& f = *field.scalar;
    if (static_cast<int>(x.size()) != f.dim()) {
      throw std::invalid_argument("field '" + f.name() + "' needs " +
                                  std::to_string(f.dim()) + " coordinates, got " +
                                  std::to_string(x.size()));
    }
    const bool excluded = f.excluded(x);
    const minsurf::Jet2 j = f.eval(x);
    if (as_json) {
      json o = jet_json(j);
      o["field"] = f.name();
      o["dim"] = f.dim();
      o["excluded"] = excluded;
      std::cout << o.dump() << "\n";
    } else {
      std::cout << "field: " << f.name() << "\n";
      std::cout << "dim: " << f.dim() << "\n";
      if (excluded) std::cout << "excluded: true (point fails the domain guard)\n";
      print_jet_human(j);
    }
    return 0;
  }

  if (field.holo) {
    const minsurf::HoloField& h = *field.holo;
    if (static_cast<int>(x.size()) != h.real_dim()) {
      throw std::invalid_argument("field '" + h.name() + "' needs " +
                                  std::to_string(h.real_dim()) +
                                  " real coordinates (x then y), got " +
                                  std::to_string(x.size()));
    }
    const std::vector<minsurf::complexd> z = minsurf::pack_complex(x);
    const bool excluded = h.excluded(z);
    const minsurf::CJet2 cj = h.eval(z);
    const minsurf::TmResidual t = minsurf::tm_residual_from_jet(cj);
    std::optional<double> expected;
    if (h.expected_mu()) expected = h.expected_mu()(z);
    if (as_json) {
      json o;
      o["field"] = h.name();
      o["complex_dim"] = h.dim();
      o["dim"] = h.real_dim();
      o["excluded"] = excluded;
      o["value_re"] = cj.value().real();
      o["value_im"] = cj.value().imag();
      o["abs_value"] = std::abs(cj.value());
      o["residual_abs"] = std::abs(t.r);
      o["imag_defect"] = t.imag_defect;
      if (t.mu) o["mu"] = *t.mu;
      if (expected) o["expected_mu"] = *expected;
      std::cout << o.dump() << "\n";
    } else {
      std::cout << "field: " << h.name() << "\n";
      std::cout << "complex dim: " << h.dim() << " (point is x_1..x_m, y_1..y_m)\n";
      if (excluded) std::cout << "excluded: true (point fails the domain guard)\n";
      std::cout << "value: " << cj.value().real() << " + " << cj.value().imag()
                << "i\n";
      std::cout << "eigencone residual |r|: " << std::abs(t.r) << "\n";
      std::cout << "imag defect: " << t.imag_defect << "\n";
      if (t.mu) std::cout << "recovered mu: " << *t.mu << "\n";
      if (expected) std::cout << "expected mu: " << *expected << "\n";
    }
    return 0;
  }

  const auto& [u, v] = *field.twins;
  if (static_cast<int>(x.size()) != u.dim()) {
    throw std::invalid_argument("pair '" + u.name() + "', '" + v.name() + "' needs " +
                                std::to_string(u.dim()) + " coordinates, got " +
                                std::to_string(x.size()));
  }
  const minsurf::Jet2 ju = u.eval(x);
  const minsurf::Jet2 jv = v.eval(x);
  const minsurf::TwinResidual t = minsurf::twin_residual(ju, jv);
  if (as_json) {
    json o;
    o["pair"] = json::array({u.name(), v.name()});
    o["dim"] = u.dim();
    o["u"] = jet_json(ju);
    o["v"] = jet_json(jv);
    o["r_lap"] = t.r_lap;
    o["r_inf"] = t.r_inf;
    o["r_grad_norm"] = t.r_grad_norm;
    o["r_grad_dot"] = t.r_grad_dot;
    o["max_normalized"] = t.max_normalized();
    std::cout << o.dump() << "\n";
  } else {
    std::cout << "pair: " << u.name() << ", " << v.name() << "\n";
    std::cout << "dim: " << u.dim() << "\n";
    std::cout << "u value: " << ju.value() << "\n";
    std::cout << "v value: " << jv.value() << "\n";
    std::cout << "exchange laplacian residual: " << t.r_lap << "\n";
    std::cout << "exchange inf-laplacian residual: " << t.r_inf << "\n";
    std::cout << "gradient norm mismatch: " << t.r_grad_norm << "\n";
    std::cout << "gradient dot product: " << t.r_grad_dot << "\n";
    std::cout << "max normalized residual: " << t.max_normalized() << "\n";
  }
  return 0;
}

int run_verify(const std::string& check, const std::string& spec,
               const minsurf::SampleConfig& cfg, double tol, double level, int dim,
               bool as_json) {
  const minsurf::CheckKind kind = minsurf::parse_check_kind(check);
  minsurf::ResolvedField field = minsurf::resolve_spec(spec, dim);
  minsurf::CheckTarget target;
  target.spec = minsurf::normalize_spec(spec);
  target.scalar = std::move(field.scalar);
  target.holo = std::move(field.holo);
  target.twins = std::move(field.twins);

  const minsurf::VerificationReport report =
      minsurf::run_check(kind, target, cfg, tol, level);
  if (as_json) {
    std::cout << report.json_string() << "\n";
  } else {
    std::cout << "check: " << report.check << "\n";
    std::cout << "target: " << report.target << "\n";
    std::cout << "samples: " << report.n_samples << " accepted, " << report.n_rejected
              << " rejected";
    if (report.n_projection_failed > 0) {
      std::cout << ", " << report.n_projection_failed << " projections failed";
    }
    std::cout << "\n";
    std::cout << "max residual: " << report.max_residual << " (tol " << report.tol
              << ")\n";
    std::cout << "mean residual: " << report.mean_residual << "\n";
    if (report.pass) {
      std::cout << "PASS\n";
    } else {
      std::cout << "FAIL: " << report.reason << "\n";
    }
  }
  return report.pass ? 0 : 1;
}

int run_export(const std::string& spec, const minsurf::SampleConfig& cfg, double level,
               int dim, const std::string& out_path, std::string format) {
  const minsurf::ScalarField f = minsurf::resolve_scalar(spec, dim);
  const std::vector<std::vector<double>> pts =
      minsurf::sample_level_points(f, level, cfg);

  if (format.empty()) {
    format = "csv";
    const auto dot = out_path.rfind('.');
    if (dot != std::string::npos && out_path.substr(dot) == ".ply") format = "ply";
  }
  std::string payload;
  if (format == "csv") {
    payload = minsurf::points_to_csv(pts, f.dim());
  } else if (format == "ply") {
    payload = minsurf::points_to_ply(pts, f.dim());
  } else {
    throw std::invalid_argument("unknown format '" + format + "' (csv or ply)");
  }

  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << payload;
  if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
  std::cerr << pts.size() << " points -> " << out_path << " (" << format << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal-hypersurface field catalog and identity checks"};
  app.require_subcommand(1);

  CLI::App* list_cmd = app.add_subcommand("list", "print the field catalog");

  std::string eval_spec;
  std::string eval_point;
  int eval_dim = -1;
  bool eval_json = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a field at a point");
  eval_cmd->add_option("spec", eval_spec, "field spec, e.g. hsiang(d=1)")->required();
  eval_cmd->add_option("--point", eval_point, "comma-separated coordinates")
      ->required();
  eval_cmd->add_option("--dim", eval_dim, "ambient dimension for expr: specs");
  eval_cmd->add_flag("--json", eval_json, "single-line JSON output");

  std::string verify_check;
  std::string verify_spec;
  minsurf::SampleConfig verify_cfg;
  double verify_tol = 1e-8;
  double verify_level = 0.0;
  int verify_dim = -1;
  bool verify_json = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "sample an identity check over a box");
  verify_cmd
      ->add_option("check", verify_check, "one of ph, eigen, twin, tm, mincurv, graph")
      ->required();
  verify_cmd->add_option("spec", verify_spec, "field spec")->required();
  verify_cmd->add_option("--seed", verify_cfg.seed, "sampler seed (default 0)");
  verify_cmd->add_option("--samples", verify_cfg.count, "accepted sample count");
  verify_cmd->add_option("--box", verify_cfg.box_radius, "half-width of the box");
  verify_cmd->add_option("--grad-floor", verify_cfg.grad_floor,
                         "reject gradients below this");
  verify_cmd->add_option("--tol", verify_tol, "pass threshold on the max residual");
  verify_cmd->add_option("--level", verify_level, "level-set value (mincurv)");
  verify_cmd->add_option("--dim", verify_dim, "ambient dimension for expr: specs");
  verify_cmd->add_flag("--json", verify_json, "single-line JSON report");

  std::string export_spec;
  minsurf::SampleConfig export_cfg;
  double export_level = 0.0;
  int export_dim = -1;
  std::string export_out;
  std::string export_format;
  CLI::App* export_cmd =
      app.add_subcommand("export", "project box samples onto a level set");
  export_cmd->add_option("spec", export_spec, "scalar field spec")->required();
  export_cmd->add_option("--seed", export_cfg.seed, "sampler seed (default 0)");
  export_cmd->add_option("--samples", export_cfg.count, "projected point count");
  export_cmd->add_option("--box", export_cfg.box_radius, "half-width of the box");
  export_cmd->add_option("--level", export_level, "level-set value");
  export_cmd->add_option("--dim", export_dim, "ambient dimension for expr: specs");
  export_cmd->add_option("--out", export_out, "output path (stdout when absent)");
  export_cmd->add_option("--format", export_format, "csv or ply (default by extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list_cmd->parsed()) {
      std::cout << minsurf::catalog_listing();
      return 0;
    }
    if (eval_cmd->parsed()) {
      return run_eval(eval_spec, eval_point, eval_dim, eval_json);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_check, verify_spec, verify_cfg, verify_tol, verify_level,
                        verify_dim, verify_json);
    }
    if (export_cmd->parsed()) {
      return run_export(export_spec, export_cfg, export_level, export_dim, export_out,
                        export_format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
