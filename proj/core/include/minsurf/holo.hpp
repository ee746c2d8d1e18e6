// Holomorphic fields h: C^m -> C and the machinery around them: the
// eigencone residual  r = sum conj(h_{z_i z_j}) h_{z_i} h_{z_j}  with its
// membership defect and recovered weight mu, the real/imaginary parts as
// scalar fields on R^{2m}, orthogonal-twin residuals, the argument field,
// and a catalog of members closed under scaled powers, disjoint products
// and quotients.
#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minsurf/cjet.hpp"
#include "minsurf/field.hpp"
#include "minsurf/poly.hpp"

namespace minsurf {

class HoloField {
 public:
  using Evaluator = std::function<CJet2(std::span<const complexd>)>;
  using Guard = std::function<bool(std::span<const complexd>)>;
  using MuFn = std::function<double(std::span<const complexd>)>;

  HoloField() = default;
  HoloField(int m, std::string name, Evaluator eval, Guard guard = {},
            MuFn expected_mu = {});

  int dim() const { return m_; }            // complex dimension
  int real_dim() const { return 2 * m_; }
  const std::string& name() const { return name_; }
  const MuFn& expected_mu() const { return mu_; }

  CJet2 eval(std::span<const complexd> z) const;
  bool excluded(std::span<const complexd> z) const;

  HoloField with_expected_mu(MuFn mu) const {
    HoloField h = *this;
    h.mu_ = std::move(mu);
    return h;
  }

 private:
  int m_ = 0;
  std::string name_;
  Evaluator eval_;
  Guard guard_;
  MuFn mu_;
};

struct TmResidual {
  complexd r;            // sum conj(h_ij) h_i h_j
  complexd h;            // field value
  double imag_defect;    // |Im(r conj h)| / (|r||h| + eps)
  std::optional<double> mu;  // Re(r conj h)/|h|^2 when |h| > 1e-12
};

TmResidual tm_residual(const HoloField& h, std::span<const complexd> z);
TmResidual tm_residual_from_jet(const CJet2& cj);

// Real and imaginary parts as scalar fields on R^{2m}, coordinates
// (x_1..x_m, y_1..y_m); derivatives come from the holomorphic jet via the
// Cauchy-Riemann dictionary.
ScalarField re_field(const HoloField& h);
ScalarField im_field(const HoloField& h);

// Jet2 of Re h / Im h on R^{2m} assembled from a holomorphic jet.
Jet2 re_jet(const CJet2& cj);
Jet2 im_jet(const CJet2& cj);

struct TwinResidual {
  // raw residuals
  double r_lap;       // v lap u - u lap v
  double r_inf;       // v inf u - u inf v
  double r_grad_norm; // |grad u|^2 - |grad v|^2
  double r_grad_dot;  // grad u . grad v
  // scale-invariant counterparts
  double n_lap, n_inf, n_grad_norm, n_grad_dot;
  double max_normalized() const;
};

TwinResidual twin_residual(const Jet2& u, const Jet2& v);
TwinResidual twin_residual(const ScalarField& u, const ScalarField& v,
                           std::span<const double> x);

// atan2(Im h, Re h) as a scalar field on R^{2m}; guard rejects |h| < 0.1.
ScalarField arg_field(const HoloField& h);

// Minimal-graph residual of x_{2m+1} = arg h at a base point of R^{2m}.
double arg_graph_residual(const HoloField& h, std::span<const double> x);

// --- catalog ---

HoloField holo_linear(int m, std::vector<complexd> a, complexd b);
HoloField holo_clifford(int m);                       // z_1^2 + ... + z_m^2, mu = 8
HoloField holo_exp(double p);                         // e^{p z} on C
HoloField holo_binomial(complexd a, complexd b, double p);  // (a z + b)^p on C
HoloField holo_monomial(std::vector<long long> k);    // prod z_i^{k_i}
HoloField holo_lawson(long long p, long long q);      // z_1^p z_2^q
HoloField holo_det(int k);                            // det of a k x k matrix, k <= 4

// --- closure operations ---

HoloField holo_power(const HoloField& h, complexd c, double r);  // c * h^r
HoloField holo_product(const HoloField& h, const HoloField& g);  // disjoint blocks
HoloField holo_quotient(const HoloField& h, const HoloField& g); // disjoint blocks

// The expanded determinant polynomial (variables row-major z_{ij} -> i*k+j).
SparsePoly det_polynomial(int k);

}  // namespace minsurf
