#include "minsurf/holo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "minsurf/operators.hpp"

namespace minsurf {

namespace {

// Uniform admissibility floor for holomorphic fields: stay away from zeros,
// poles and branch loci of the member being sampled.
constexpr double kHoloValueFloor = 0.1;

bool near_branch_cut(complexd v) {
  // principal branch cut of log/pow: the closed negative real axis
  return v.real() < 0.0 && std::abs(v.imag()) < 0.05 * std::abs(v);
}

}  // namespace

HoloField::HoloField(int m, std::string name, Evaluator eval, Guard guard, MuFn expected_mu)
    : m_(m),
      name_(std::move(name)),
      eval_(std::move(eval)),
      guard_(std::move(guard)),
      mu_(std::move(expected_mu)) {}

CJet2 HoloField::eval(std::span<const complexd> z) const {
  if (static_cast<int>(z.size()) != m_) {
    std::ostringstream os;
    os << "holo field '" << name_ << "': point has complex dimension " << z.size()
       << ", expected " << m_;
    throw std::invalid_argument(os.str());
  }
  return eval_(z);
}

bool HoloField::excluded(std::span<const complexd> z) const {
  if (static_cast<int>(z.size()) != m_) return true;
  return guard_ ? guard_(z) : false;
}

TmResidual tm_residual_from_jet(const CJet2& cj) {
  const int m = cj.dim();
  complexd r = 0.0;
  for (int i = 0; i < m; ++i) {
    r += std::conj(cj.hess(i, i)) * cj.grad(i) * cj.grad(i);
    for (int j = i + 1; j < m; ++j) {
      r += 2.0 * std::conj(cj.hess(i, j)) * cj.grad(i) * cj.grad(j);
    }
  }
  TmResidual out;
  out.r = r;
  out.h = cj.value();
  const complexd rh = r * std::conj(cj.value());
  const double denom = std::abs(r) * std::abs(cj.value()) + 1e-300;
  out.imag_defect = std::abs(rh.imag()) / denom;
  const double habs = std::abs(cj.value());
  if (habs > 1e-12) out.mu = rh.real() / (habs * habs);
  return out;
}

TmResidual tm_residual(const HoloField& h, std::span<const complexd> z) {
  return tm_residual_from_jet(h.eval(z));
}

// Cauchy-Riemann dictionary. With u = Re h, v = Im h, z_k = x_k + i y_k:
//   u_{x_k} = Re h_k     u_{y_k} = -Im h_k
//   u_{x_p x_q} = Re h_pq   u_{x_p y_q} = -Im h_pq   u_{y_p y_q} = -Re h_pq
// and v is the same dictionary rotated by i.
Jet2 re_jet(const CJet2& cj) {
  const int m = cj.dim();
  Jet2 r(2 * m);
  r.value() = cj.value().real();
  for (int k = 0; k < m; ++k) {
    r.grad(k) = cj.grad(k).real();
    r.grad(m + k) = -cj.grad(k).imag();
  }
  for (int p = 0; p < m; ++p) {
    for (int q = p; q < m; ++q) {
      const complexd H = cj.hess(p, q);
      r.hess(p, q) = H.real();
      r.hess(m + p, m + q) = -H.real();
    }
  }
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      r.hess(p, m + q) = -cj.hess(p, q).imag();
    }
  }
  return r;
}

Jet2 im_jet(const CJet2& cj) {
  const int m = cj.dim();
  Jet2 r(2 * m);
  r.value() = cj.value().imag();
  for (int k = 0; k < m; ++k) {
    r.grad(k) = cj.grad(k).imag();
    r.grad(m + k) = cj.grad(k).real();
  }
  for (int p = 0; p < m; ++p) {
    for (int q = p; q < m; ++q) {
      const complexd H = cj.hess(p, q);
      r.hess(p, q) = H.imag();
      r.hess(m + p, m + q) = -H.imag();
    }
  }
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      r.hess(p, m + q) = cj.hess(p, q).real();
    }
  }
  return r;
}

namespace {

ScalarField part_field(const HoloField& h, bool real_part) {
  std::ostringstream name;
  name << (real_part ? "re(" : "im(") << h.name() << ")";
  std::optional<WeightSpec> w;
  return ScalarField(
      h.real_dim(), name.str(),
      [h, real_part](std::span<const double> x) {
        auto z = pack_complex(x);
        CJet2 cj = h.eval(z);
        return real_part ? re_jet(cj) : im_jet(cj);
      },
      [h](std::span<const double> x) {
        auto z = pack_complex(x);
        return h.excluded(z);
      },
      w);
}

}  // namespace

ScalarField re_field(const HoloField& h) { return part_field(h, true); }
ScalarField im_field(const HoloField& h) { return part_field(h, false); }

double TwinResidual::max_normalized() const {
  return std::max(std::max(n_lap, n_inf), std::max(n_grad_norm, n_grad_dot));
}

TwinResidual twin_residual(const Jet2& u, const Jet2& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("twin_residual: jets of different dimension");
  }
  const OperatorValues ou = evaluate_operators(u);
  const OperatorValues ov = evaluate_operators(v);
  const double hu = hess_frobenius_norm(u);
  const double hv = hess_frobenius_norm(v);
  double dot = 0.0;
  for (int i = 0; i < u.dim(); ++i) dot += u.grad(i) * v.grad(i);

  TwinResidual t;
  t.r_lap = v.value() * ou.laplacian - u.value() * ov.laplacian;
  t.r_inf = v.value() * ou.inf_laplacian - u.value() * ov.inf_laplacian;
  t.r_grad_norm = ou.grad_norm_sq - ov.grad_norm_sq;
  t.r_grad_dot = dot;

  const double av = std::abs(v.value());
  const double au = std::abs(u.value());
  t.n_lap = std::abs(t.r_lap) / (1.0 + av * hu + au * hv);
  t.n_inf = std::abs(t.r_inf) /
            (1.0 + av * ou.grad_norm_sq * hu + au * ov.grad_norm_sq * hv);
  t.n_grad_norm = std::abs(t.r_grad_norm) / (1.0 + ou.grad_norm_sq + ov.grad_norm_sq);
  t.n_grad_dot =
      std::abs(t.r_grad_dot) / (1.0 + std::sqrt(ou.grad_norm_sq * ov.grad_norm_sq));
  return t;
}

TwinResidual twin_residual(const ScalarField& u, const ScalarField& v,
                           std::span<const double> x) {
  return twin_residual(u.eval(x), v.eval(x));
}

ScalarField arg_field(const HoloField& h) {
  std::ostringstream name;
  name << "arg(" << h.name() << ")";
  return ScalarField(
      h.real_dim(), name.str(),
      [h](std::span<const double> x) {
        auto z = pack_complex(x);
        CJet2 cj = h.eval(z);
        return atan2(im_jet(cj), re_jet(cj));
      },
      [h](std::span<const double> x) {
        auto z = pack_complex(x);
        if (h.excluded(z)) return true;
        // needs its own floor: derivatives of arg blow up at zeros of h
        std::vector<complexd> zs(z.begin(), z.end());
        return std::abs(h.eval(zs).value()) < kHoloValueFloor;
      },
      WeightSpec::zero());
}

double arg_graph_residual(const HoloField& h, std::span<const double> x) {
  return graph_residual(arg_field(h).eval(x));
}

// --- catalog ---

HoloField holo_linear(int m, std::vector<complexd> a, complexd b) {
  if (static_cast<int>(a.size()) != m) {
    throw std::invalid_argument("holo_linear: coefficient count must equal dimension");
  }
  bool trivial = true;
  for (complexd c : a)
    if (c != complexd(0.0)) trivial = false;
  if (trivial) throw std::invalid_argument("holo_linear: all coefficients vanish");
  std::ostringstream name;
  name << "linear(m=" << m << ")";
  return HoloField(
      m, name.str(),
      [m, a, b](std::span<const complexd> z) {
        CJet2 s = CJet2::constant(m, b);
        for (int i = 0; i < m; ++i) s = s + a[static_cast<std::size_t>(i)] * CJet2::variable(m, i, z[static_cast<std::size_t>(i)]);
        return s;
      },
      [m, a, b](std::span<const complexd> z) {
        complexd s = b;
        for (int i = 0; i < m; ++i) s += a[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
        return std::abs(s) < kHoloValueFloor;
      });
}

HoloField holo_clifford(int m) {
  if (m < 1) throw std::invalid_argument("holo_clifford: need m >= 1");
  std::ostringstream name;
  name << "clifford(m=" << m << ")";
  return HoloField(
      m, name.str(),
      [m](std::span<const complexd> z) {
        CJet2 s(m);
        complexd v = 0.0;
        for (int i = 0; i < m; ++i) {
          v += z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
          s.grad(i) = 2.0 * z[static_cast<std::size_t>(i)];
          s.hess(i, i) = 2.0;
        }
        s.value() = v;
        return s;
      },
      [](std::span<const complexd> z) {
        complexd v = 0.0;
        for (complexd zi : z) v += zi * zi;
        return std::abs(v) < kHoloValueFloor;
      },
      [](std::span<const complexd>) { return 8.0; });
}

HoloField holo_exp(double p) {
  std::ostringstream name;
  name << "exp(p=" << p << ")";
  return HoloField(
      1, name.str(),
      [p](std::span<const complexd> z) {
        return exp(complexd(p, 0.0) * CJet2::variable(1, 0, z[0]));
      },
      [p](std::span<const complexd> z) {
        return std::abs(std::exp(p * z[0])) < kHoloValueFloor;
      },
      [p](std::span<const complexd> z) {
        // r = conj(p^2 h) (p h)^2 = p^4 |h|^2 h
        return p * p * p * p * std::exp(2.0 * p * z[0].real());
      });
}

HoloField holo_binomial(complexd a, complexd b, double p) {
  if (a == complexd(0.0)) throw std::invalid_argument("holo_binomial: a must be nonzero");
  std::ostringstream name;
  name << "binomial(a=" << a.real() << ",b=" << b.real() << ",p=" << p << ")";
  const bool integral = p == std::round(p);
  return HoloField(
      1, name.str(),
      [a, b, p](std::span<const complexd> z) {
        CJet2 w = a * CJet2::variable(1, 0, z[0]) + b;
        return pow(w, p);
      },
      [a, b, integral](std::span<const complexd> z) {
        const complexd w = a * z[0] + b;
        if (std::abs(w) < kHoloValueFloor) return true;
        return !integral && near_branch_cut(w);
      });
}

HoloField holo_monomial(std::vector<long long> k) {
  const int m = static_cast<int>(k.size());
  if (m < 1) throw std::invalid_argument("holo_monomial: need at least one exponent");
  bool all_zero = true;
  for (long long e : k)
    if (e != 0) all_zero = false;
  if (all_zero) throw std::invalid_argument("holo_monomial: exponents must not all vanish");
  std::ostringstream name;
  name << "monomial(k=[";
  for (int i = 0; i < m; ++i) name << (i ? "," : "") << k[static_cast<std::size_t>(i)];
  name << "])";
  return HoloField(
      m, name.str(),
      [m, k](std::span<const complexd> z) {
        CJet2 s = CJet2::constant(m, complexd(1.0));
        for (int i = 0; i < m; ++i) {
          if (k[static_cast<std::size_t>(i)] == 0) continue;
          s = s * pow_int(CJet2::variable(m, i, z[static_cast<std::size_t>(i)]),
                          k[static_cast<std::size_t>(i)]);
        }
        return s;
      },
      [m, k](std::span<const complexd> z) {
        complexd v = 1.0;
        for (int i = 0; i < m; ++i) {
          const long long e = k[static_cast<std::size_t>(i)];
          if (e == 0) continue;
          if (e < 0 && std::abs(z[static_cast<std::size_t>(i)]) < kHoloValueFloor) return true;
          v *= std::pow(z[static_cast<std::size_t>(i)], static_cast<double>(e));
        }
        return std::abs(v) < kHoloValueFloor;
      },
      [m, k](std::span<const complexd> z) {
        // r = |h|^2 h (S^2 - sum k_i^3 / |z_i|^4) with S = sum k_i^2 / |z_i|^2
        double habs2 = 1.0;
        double s = 0.0;
        double t = 0.0;
        for (int i = 0; i < m; ++i) {
          const double e = static_cast<double>(k[static_cast<std::size_t>(i)]);
          if (e == 0.0) continue;
          const double a2 = std::norm(z[static_cast<std::size_t>(i)]);
          habs2 *= std::pow(a2, e);
          s += e * e / a2;
          t += e * e * e / (a2 * a2);
        }
        return habs2 * (s * s - t);
      });
}

HoloField holo_lawson(long long p, long long q) {
  if (p < 1 || q < 1) throw std::invalid_argument("holo_lawson: exponents must be positive");
  std::ostringstream name;
  name << "lawson(p=" << p << ",q=" << q << ")";
  HoloField base = holo_monomial({p, q});
  return HoloField(2, name.str(),
                   [base](std::span<const complexd> z) { return base.eval(z); },
                   [base](std::span<const complexd> z) { return base.excluded(z); },
                   base.expected_mu());
}

SparsePoly det_polynomial(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("det_polynomial: need 1 <= k <= 4");
  SparsePoly poly(k * k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // permutation sign by inversion count
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    std::vector<int> vars(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) vars[static_cast<std::size_t>(i)] = i * k + perm[static_cast<std::size_t>(i)];
    poly.add_term(Monomial::of(vars), inv % 2 == 0 ? 1.0 : -1.0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return poly;
}

HoloField holo_det(int k) {
  SparsePoly poly = det_polynomial(k);
  std::ostringstream name;
  name << "det(k=" << k << ")";
  return HoloField(
      k * k, name.str(),
      [poly](std::span<const complexd> z) { return poly.eval_cjet(z); },
      [poly](std::span<const complexd> z) {
        return std::abs(poly.eval_cjet(z).value()) < kHoloValueFloor;
      });
}

// --- closure operations ---

HoloField holo_power(const HoloField& h, complexd c, double r) {
  if (c == complexd(0.0)) throw std::invalid_argument("holo_power: scale must be nonzero");
  std::ostringstream name;
  name << "power(" << h.name() << ",r=" << r << ")";
  const bool integral = r == std::round(r);
  return HoloField(
      h.dim(), name.str(),
      [h, c, r](std::span<const complexd> z) { return c * pow(h.eval(z), r); },
      [h, r, integral](std::span<const complexd> z) {
        if (h.excluded(z)) return true;
        const complexd v = h.eval(z).value();
        if (r < 0.0 && std::abs(v) < kHoloValueFloor) return true;
        if (!integral && (std::abs(v) < kHoloValueFloor || near_branch_cut(v))) return true;
        return false;
      });
}

HoloField holo_product(const HoloField& h, const HoloField& g) {
  const int mh = h.dim();
  const int mg = g.dim();
  const int m = mh + mg;
  std::ostringstream name;
  name << "product(" << h.name() << "," << g.name() << ")";
  auto embed_c = [](const CJet2& j, int total, int at) {
    CJet2 r(total);
    r.value() = j.value();
    for (int i = 0; i < j.dim(); ++i) r.grad(at + i) = j.grad(i);
    for (int i = 0; i < j.dim(); ++i)
      for (int k2 = i; k2 < j.dim(); ++k2) r.hess(at + i, at + k2) = j.hess(i, k2);
    return r;
  };
  return HoloField(
      m, name.str(),
      [h, g, mh, mg, m, embed_c](std::span<const complexd> z) {
        CJet2 jh = h.eval(z.subspan(0, static_cast<std::size_t>(mh)));
        CJet2 jg = g.eval(z.subspan(static_cast<std::size_t>(mh), static_cast<std::size_t>(mg)));
        return embed_c(jh, m, 0) * embed_c(jg, m, mh);
      },
      [h, g, mh, mg](std::span<const complexd> z) {
        return h.excluded(z.subspan(0, static_cast<std::size_t>(mh))) ||
               g.excluded(z.subspan(static_cast<std::size_t>(mh), static_cast<std::size_t>(mg)));
      });
}

HoloField holo_quotient(const HoloField& h, const HoloField& g) {
  HoloField prod = holo_product(h, holo_power(g, complexd(1.0), -1.0));
  std::ostringstream name;
  name << "quotient(" << h.name() << "," << g.name() << ")";
  return HoloField(prod.dim(), name.str(),
                   [prod](std::span<const complexd> z) { return prod.eval(z); },
                   [prod](std::span<const complexd> z) { return prod.excluded(z); });
}

}  // namespace minsurf
