#include "minsurf/verify.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "minsurf/operators.hpp"

namespace minsurf {

std::vector<double> BoxSampler::point(int dim, double radius) {
  std::vector<double> x(static_cast<std::size_t>(dim));
  for (double& v : x) v = (2.0 * unit() - 1.0) * radius;
  return x;
}

std::string check_kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::ph: return "ph";
    case CheckKind::eigen: return "eigen";
    case CheckKind::twin: return "twin";
    case CheckKind::tm: return "tm";
    case CheckKind::mincurv: return "mincurv";
    case CheckKind::graph: return "graph";
  }
  throw std::logic_error("unknown check kind");
}

CheckKind parse_check_kind(std::string_view name) {
  if (name == "ph") return CheckKind::ph;
  if (name == "eigen") return CheckKind::eigen;
  if (name == "twin") return CheckKind::twin;
  if (name == "tm") return CheckKind::tm;
  if (name == "mincurv") return CheckKind::mincurv;
  if (name == "graph") return CheckKind::graph;
  std::ostringstream os;
  os << "unknown check kind '" << name << "' (ph, eigen, twin, tm, mincurv, graph)";
  throw std::invalid_argument(os.str());
}

std::string VerificationReport::json_string() const {
  nlohmann::json j;
  j["check"] = check;
  j["target"] = target;
  j["dim"] = dim;
  j["seed"] = seed;
  j["requested"] = requested;
  j["box_radius"] = box_radius;
  j["tol"] = tol;
  j["grad_floor"] = grad_floor;
  j["level"] = level;
  j["n_samples"] = n_samples;
  j["n_rejected"] = n_rejected;
  j["n_projection_failed"] = n_projection_failed;
  j["max_residual"] = max_residual;
  j["mean_residual"] = mean_residual;
  j["worst_point"] = worst_point;
  j["pass"] = pass;
  j["reason"] = reason;
  j["runtime_ms"] = runtime_ms;
  return j.dump();
}

std::optional<std::vector<double>> newton_project(const ScalarField& u,
                                                  std::span<const double> x0,
                                                  double level, double tol,
                                                  int max_iter, double grad_floor) {
  std::vector<double> x(x0.begin(), x0.end());
  for (int it = 0; it < max_iter; ++it) {
    if (u.excluded(x)) return std::nullopt;
    try {
      const Jet2 j = u.eval(x);
      const double r = j.value() - level;
      const double g2 = grad_norm_sq(j);
      if (std::sqrt(g2) < grad_floor) return std::nullopt;
      if (std::abs(r) <= tol) return x;
      const double s = r / g2;
      for (int i = 0; i < j.dim(); ++i) {
        x[static_cast<std::size_t>(i)] -= s * j.grad(i);
        if (!std::isfinite(x[static_cast<std::size_t>(i)])) return std::nullopt;
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SampleOutcome {
  enum class Status { ok, rejected, projection_failed } status;
  double residual = 0.0;
  std::vector<double> point;
};

using Status = SampleOutcome::Status;

SampleOutcome rejected() { return {Status::rejected, 0.0, {}}; }

double guarded(double r) { return std::isfinite(r) ? r : kInf; }

SampleOutcome eval_ph(const ScalarField& f, std::vector<double> x, double grad_floor) {
  if (f.excluded(x)) return rejected();
  const Jet2 j = f.eval(x);
  const double g2 = grad_norm_sq(j);
  if (std::sqrt(g2) < grad_floor) return rejected();
  const auto [rl, ri] = ph_residual(j);
  const double hf = hess_frobenius_norm(j);
  const double r = std::max(rl / (1.0 + hf), ri / (1.0 + g2 * hf));
  return {Status::ok, guarded(r), std::move(x)};
}

SampleOutcome eval_eigen(const ScalarField& f, double lambda, std::vector<double> x,
                         double grad_floor) {
  if (f.excluded(x)) return rejected();
  const Jet2 j = f.eval(x);
  const double g2 = grad_norm_sq(j);
  if (std::sqrt(g2) < grad_floor) return rejected();
  double xx = 0.0;
  for (double v : x) xx += v * v;
  const double hf = hess_frobenius_norm(j);
  const double lhs = one_laplacian(j) - lambda * xx * j.value();
  const double r =
      std::abs(lhs) / (1.0 + g2 * hf + std::abs(lambda) * xx * std::abs(j.value()));
  return {Status::ok, guarded(r), std::move(x)};
}

SampleOutcome eval_twin(const ScalarField& u, const ScalarField& v, std::vector<double> x,
                        double grad_floor) {
  if (u.excluded(x) || v.excluded(x)) return rejected();
  const Jet2 ju = u.eval(x);
  const Jet2 jv = v.eval(x);
  if (std::sqrt(grad_norm_sq(ju)) < grad_floor) return rejected();
  if (std::sqrt(grad_norm_sq(jv)) < grad_floor) return rejected();
  const TwinResidual t = twin_residual(ju, jv);
  return {Status::ok, guarded(t.max_normalized()), std::move(x)};
}

SampleOutcome eval_tm(const HoloField& h, std::vector<double> x, double grad_floor) {
  const std::vector<complexd> z = pack_complex(x);
  if (h.excluded(z)) return rejected();
  const CJet2 cj = h.eval(z);
  double g2 = 0.0;
  for (int i = 0; i < cj.dim(); ++i) g2 += std::norm(cj.grad(i));
  if (std::sqrt(g2) < grad_floor) return rejected();
  const TmResidual t = tm_residual_from_jet(cj);
  double r = t.imag_defect;
  if (h.expected_mu()) {
    if (!t.mu) return rejected();
    const double mu_e = h.expected_mu()(z);
    r = std::max(r, std::abs(*t.mu - mu_e) / (1.0 + std::abs(mu_e)));
  }
  return {Status::ok, guarded(r), std::move(x)};
}

SampleOutcome eval_mincurv(const ScalarField& f, double level, std::vector<double> x,
                           double grad_floor) {
  if (f.excluded(x)) return rejected();
  auto proj = newton_project(f, x, level, 1e-12, 50, grad_floor);
  if (!proj) return {Status::projection_failed, 0.0, {}};
  const Jet2 j = f.eval(*proj);
  const double g2 = grad_norm_sq(j);
  if (std::sqrt(g2) < grad_floor) return rejected();
  const double h = one_laplacian(j) / std::pow(g2, 1.5);
  const double hf = hess_frobenius_norm(j);
  const double r = std::abs(h) / (1.0 + hf / std::sqrt(g2));
  return {Status::ok, guarded(r), std::move(*proj)};
}

SampleOutcome eval_graph(const ScalarField& f, std::vector<double> x, double grad_floor) {
  if (f.excluded(x)) return rejected();
  const Jet2 j = f.eval(x);
  const double g2 = grad_norm_sq(j);
  if (std::sqrt(g2) < grad_floor) return rejected();
  const double hf = hess_frobenius_norm(j);
  const double r = std::abs(graph_residual(j)) / (1.0 + (1.0 + g2) * hf);
  return {Status::ok, guarded(r), std::move(x)};
}

const ScalarField& target_scalar(const CheckTarget& t, CheckKind kind) {
  if (!t.scalar) {
    throw std::invalid_argument("check '" + check_kind_name(kind) +
                                "' needs a scalar field target");
  }
  return *t.scalar;
}

}  // namespace

VerificationReport run_check(CheckKind kind, const CheckTarget& target,
                             const SampleConfig& cfg, double tol, double level) {
  const auto t0 = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.check = check_kind_name(kind);
  rep.target = target.spec;
  rep.seed = cfg.seed;
  rep.requested = cfg.count;
  rep.box_radius = cfg.box_radius;
  rep.tol = tol;
  rep.grad_floor = cfg.grad_floor;
  rep.level = level;

  double lambda = 0.0;
  switch (kind) {
    case CheckKind::ph:
    case CheckKind::mincurv:
    case CheckKind::graph:
      rep.dim = target_scalar(target, kind).dim();
      break;
    case CheckKind::eigen: {
      const ScalarField& f = target_scalar(target, kind);
      rep.dim = f.dim();
      if (!f.weight() || f.weight()->kind == WeightSpec::Kind::generic) {
        throw std::invalid_argument("eigen check needs a field with a known weight");
      }
      lambda = f.weight()->kind == WeightSpec::Kind::radial ? f.weight()->lambda : 0.0;
      break;
    }
    case CheckKind::twin: {
      if (!target.twins) throw std::invalid_argument("twin check needs a pair target");
      if (target.twins->first.dim() != target.twins->second.dim()) {
        throw std::invalid_argument("twin fields live on different dimensions");
      }
      rep.dim = target.twins->first.dim();
      break;
    }
    case CheckKind::tm: {
      if (!target.holo) throw std::invalid_argument("tm check needs a holomorphic target");
      rep.dim = target.holo->real_dim();
      break;
    }
  }

  BoxSampler rng(cfg.seed);
  const long long budget =
      cfg.max_rejects < 0 ? 100LL * cfg.count + 1000 : cfg.max_rejects;

  double sum = 0.0;
  while (rep.n_samples < cfg.count &&
         rep.n_rejected + rep.n_projection_failed <= budget) {
    std::vector<double> x = rng.point(rep.dim, cfg.box_radius);
    SampleOutcome out{Status::rejected, 0.0, {}};
    try {
      switch (kind) {
        case CheckKind::ph:
          out = eval_ph(*target.scalar, std::move(x), cfg.grad_floor);
          break;
        case CheckKind::eigen:
          out = eval_eigen(*target.scalar, lambda, std::move(x), cfg.grad_floor);
          break;
        case CheckKind::twin:
          out = eval_twin(target.twins->first, target.twins->second, std::move(x),
                          cfg.grad_floor);
          break;
        case CheckKind::tm:
          out = eval_tm(*target.holo, std::move(x), cfg.grad_floor);
          break;
        case CheckKind::mincurv:
          out = eval_mincurv(*target.scalar, level, std::move(x), cfg.grad_floor);
          break;
        case CheckKind::graph:
          out = eval_graph(*target.scalar, std::move(x), cfg.grad_floor);
          break;
      }
    } catch (const std::exception&) {
      out = {Status::rejected, 0.0, {}};
    }
    switch (out.status) {
      case Status::rejected:
        ++rep.n_rejected;
        break;
      case Status::projection_failed:
        ++rep.n_projection_failed;
        break;
      case Status::ok:
        sum += out.residual;
        if (rep.n_samples == 0 || out.residual > rep.max_residual) {
          rep.max_residual = out.residual;
          rep.worst_point = out.point;
        }
        ++rep.n_samples;
        break;
    }
  }
  if (rep.n_samples > 0) rep.mean_residual = sum / rep.n_samples;

  if (rep.n_samples == 0) {
    rep.pass = false;
    rep.reason = "no admissible sample points found";
  } else if (kind == CheckKind::mincurv &&
             rep.n_projection_failed * 10 >
                 (rep.n_samples + rep.n_projection_failed)) {
    rep.pass = false;
    rep.reason = "projection failure rate above 10%";
  } else if (rep.max_residual <= tol) {
    rep.pass = true;
  } else {
    rep.pass = false;
    rep.reason = "max residual above tolerance";
  }

  const auto t1 = std::chrono::steady_clock::now();
  rep.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::vector<std::vector<double>> sample_level_points(const ScalarField& u, double level,
                                                     const SampleConfig& cfg) {
  BoxSampler rng(cfg.seed);
  const long long budget =
      cfg.max_rejects < 0 ? 100LL * cfg.count + 1000 : cfg.max_rejects;
  std::vector<std::vector<double>> pts;
  long long rejects = 0;
  long long attempts = 0;
  long long failures = 0;
  while (static_cast<int>(pts.size()) < cfg.count && rejects + failures <= budget) {
    std::vector<double> x = rng.point(u.dim(), cfg.box_radius);
    if (u.excluded(x)) {
      ++rejects;
      continue;
    }
    ++attempts;
    auto p = newton_project(u, x, level, 1e-12, 50, cfg.grad_floor);
    if (!p) {
      ++failures;
      continue;
    }
    pts.push_back(std::move(*p));
  }
  if (attempts > 0 && failures * 2 > attempts) {
    std::ostringstream os;
    os << "level-set projection failed on " << failures << " of " << attempts
       << " attempts";
    throw std::runtime_error(os.str());
  }
  return pts;
}

namespace {

std::string shortest(double v) {
  std::array<char, 32> buf;
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

std::string axis_name(int i) {
  if (i == 0) return "x";
  if (i == 1) return "y";
  if (i == 2) return "z";
  return "x" + std::to_string(i + 1);
}

}  // namespace

std::string points_to_csv(const std::vector<std::vector<double>>& pts, int dim) {
  std::string out;
  for (int i = 0; i < dim; ++i) {
    if (i) out += ',';
    out += 'x';
    out += std::to_string(i + 1);
  }
  out += '\n';
  for (const auto& p : pts) {
    for (int i = 0; i < dim; ++i) {
      if (i) out += ',';
      out += shortest(p[static_cast<std::size_t>(i)]);
    }
    out += '\n';
  }
  return out;
}

std::string points_to_ply(const std::vector<std::vector<double>>& pts, int dim) {
  std::string out = "ply\nformat ascii 1.0\n";
  out += "element vertex " + std::to_string(pts.size()) + "\n";
  for (int i = 0; i < dim; ++i) {
    out += "property double " + axis_name(i) + "\n";
  }
  out += "end_header\n";
  for (const auto& p : pts) {
    for (int i = 0; i < dim; ++i) {
      if (i) out += ' ';
      out += shortest(p[static_cast<std::size_t>(i)]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace minsurf
