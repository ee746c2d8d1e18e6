// Seeded random sampling of identity residuals over a box, Newton projection
// onto level sets, pass/fail reports with a stable JSON form, and CSV/PLY
// export of projected point clouds. All sampling is deterministic in the
// seed: one mt19937_64 stream, 53-bit uniform doubles, rejection by guard
// and gradient floor.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minsurf/field.hpp"
#include "minsurf/holo.hpp"

namespace minsurf {

class BoxSampler {
 public:
  explicit BoxSampler(std::uint64_t seed) : rng_(seed) {}

  // next uniform double in [0, 1), 53 bits
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::vector<double> point(int dim, double radius);

 private:
  std::mt19937_64 rng_;
};

struct SampleConfig {
  std::uint64_t seed = 0;
  int count = 100;
  double box_radius = 2.0;
  double grad_floor = 1e-8;
  long long max_rejects = -1;  // negative: 100 * count + 1000
};

enum class CheckKind { ph, eigen, twin, tm, mincurv, graph };

std::string check_kind_name(CheckKind kind);
CheckKind parse_check_kind(std::string_view name);  // throws on unknown names

// What a check runs against; exactly one member is set, `spec` names it in
// reports.
struct CheckTarget {
  std::string spec;
  std::optional<ScalarField> scalar;
  std::optional<HoloField> holo;
  std::optional<std::pair<ScalarField, ScalarField>> twins;
};

struct VerificationReport {
  std::string check;
  std::string target;
  int dim = 0;
  std::uint64_t seed = 0;
  int requested = 0;
  double box_radius = 0.0;
  double tol = 0.0;
  double grad_floor = 0.0;
  double level = 0.0;

  int n_samples = 0;
  int n_rejected = 0;
  int n_projection_failed = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::vector<double> worst_point;

  bool pass = false;
  std::string reason;  // empty when the check passes
  double runtime_ms = 0.0;

  // single-line JSON with sorted keys; identical runs serialize identically
  // except for runtime_ms
  std::string json_string() const;
};

// Samples the box, rejects guarded points and gradients below the floor,
// and reports the residual statistics of the requested identity.
//   ph       scalar: Laplacian and infinity-Laplacian both vanish
//   eigen    scalar with a weight: 1-Laplacian eigenrelation
//   twin     pair: exchange identities and gradient orthonormality
//   tm       holomorphic: eigencone membership defect (and weight when known)
//   mincurv  scalar: mean curvature on the level set (Newton projection)
//   graph    scalar: minimal-graph residual of x_{n+1} = f(x)
VerificationReport run_check(CheckKind kind, const CheckTarget& target,
                             const SampleConfig& cfg, double tol, double level = 0.0);

// One Newton iteration tail for u(x) = level; fails on guard hits, small
// gradients, divergence, or running out of iterations.
std::optional<std::vector<double>> newton_project(const ScalarField& u,
                                                  std::span<const double> x0,
                                                  double level, double tol = 1e-12,
                                                  int max_iter = 50,
                                                  double grad_floor = 1e-8);

// Box samples projected onto {u = level}. Throws when more than half of the
// projection attempts fail.
std::vector<std::vector<double>> sample_level_points(const ScalarField& u, double level,
                                                     const SampleConfig& cfg);

std::string points_to_csv(const std::vector<std::vector<double>>& pts, int dim);
std::string points_to_ply(const std::vector<std::vector<double>>& pts, int dim);

}  // namespace minsurf
