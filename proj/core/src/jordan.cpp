#include "minsurf/jordan.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace minsurf {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// even-sign patterns for the three independent diagonal directions
constexpr int kDiagSigns[3][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}};

constexpr std::pair<int, int> kSlotPos[6] = {{0, 1}, {2, 3}, {0, 2},
                                             {1, 3}, {0, 3}, {1, 2}};

void validate_d(int d) {
  if (d != 0 && d != 1 && d != 2 && d != 4) {
    throw std::invalid_argument("division algebra dimension must be 0, 1, 2 or 4");
  }
}

void require_same_d(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("mixing elements over different division algebras");
  }
}

void require_traceless(const JordanElement& x) {
  if (std::abs(sigma1(x)) > 1e-12) {
    throw std::invalid_argument("identity holds on the traceless subspace only");
  }
}

}  // namespace

DivisionScalar DivisionScalar::zero(int d) {
  validate_d(d);
  DivisionScalar s;
  s.d = d;
  return s;
}

DivisionScalar DivisionScalar::real(int d, double v) {
  DivisionScalar s = zero(d);
  s.c[0] = v;
  return s;
}

DivisionScalar DivisionScalar::unit(int d, int axis) {
  validate_d(d);
  if (axis < 0 || axis >= d) {
    throw std::out_of_range("unit axis outside the division algebra");
  }
  DivisionScalar s = zero(d);
  s.c[static_cast<std::size_t>(axis)] = 1.0;
  return s;
}

DivisionScalar conj(const DivisionScalar& a) {
  DivisionScalar r = a;
  r.c[1] = -r.c[1];
  r.c[2] = -r.c[2];
  r.c[3] = -r.c[3];
  return r;
}

double norm_sq(const DivisionScalar& a) {
  return a.c[0] * a.c[0] + a.c[1] * a.c[1] + a.c[2] * a.c[2] + a.c[3] * a.c[3];
}

DivisionScalar operator+(const DivisionScalar& a, const DivisionScalar& b) {
  require_same_d(a.d, b.d);
  DivisionScalar r = a;
  for (int i = 0; i < 4; ++i) r.c[static_cast<std::size_t>(i)] += b.c[static_cast<std::size_t>(i)];
  return r;
}

DivisionScalar operator-(const DivisionScalar& a, const DivisionScalar& b) {
  require_same_d(a.d, b.d);
  DivisionScalar r = a;
  for (int i = 0; i < 4; ++i) r.c[static_cast<std::size_t>(i)] -= b.c[static_cast<std::size_t>(i)];
  return r;
}

DivisionScalar operator*(const DivisionScalar& a, const DivisionScalar& b) {
  require_same_d(a.d, b.d);
  const auto& x = a.c;
  const auto& y = b.c;
  DivisionScalar r;
  r.d = a.d;
  r.c[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
  r.c[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
  r.c[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
  r.c[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
  return r;
}

DivisionScalar operator*(double s, const DivisionScalar& a) {
  DivisionScalar r = a;
  for (double& v : r.c) v *= s;
  return r;
}

Matrix4::Matrix4(int d_in) : d(d_in) {
  validate_d(d);
  e.fill(DivisionScalar::zero(d));
}

Matrix4 Matrix4::identity(int d) {
  Matrix4 m(d);
  for (int i = 0; i < 4; ++i) m.at(i, i) = DivisionScalar::real(d, 1.0);
  return m;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
  require_same_d(a.d, b.d);
  Matrix4 r(a.d);
  for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
  require_same_d(a.d, b.d);
  Matrix4 r(a.d);
  for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  require_same_d(a.d, b.d);
  Matrix4 r(a.d);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      DivisionScalar acc = DivisionScalar::zero(a.d);
      for (int k = 0; k < 4; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  }
  return r;
}

Matrix4 operator*(double s, const Matrix4& a) {
  Matrix4 r(a.d);
  for (std::size_t i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
  return r;
}

double trace_scalar(const Matrix4& a) {
  double t = 0.0;
  for (int i = 0; i < 4; ++i) t += a.at(i, i).c[0];
  return t;
}

double frobenius_norm(const Matrix4& a) {
  double s = 0.0;
  for (const DivisionScalar& v : a.e) s += norm_sq(v);
  return std::sqrt(s);
}

JordanElement::JordanElement(int d) : d_(d) {
  validate_d(d);
  z_.fill(DivisionScalar::zero(d));
}

JordanElement JordanElement::identity(int d) {
  JordanElement x(d);
  for (int i = 0; i < 4; ++i) x.w(i) = 1.0;
  return x;
}

JordanElement JordanElement::from_matrix(const Matrix4& m) {
  JordanElement x(m.d);
  for (int i = 0; i < 4; ++i) x.w(i) = m.at(i, i).c[0];
  for (int s = 0; s < 6; ++s) {
    auto [r, c] = kSlotPos[s];
    x.z(s) = m.at(r, c);
  }
  return x;
}

Matrix4 JordanElement::to_matrix() const {
  Matrix4 m(d_);
  for (int i = 0; i < 4; ++i) m.at(i, i) = DivisionScalar::real(d_, w(i));
  for (int s = 0; s < 6; ++s) {
    auto [r, c] = kSlotPos[s];
    m.at(r, c) = z(s);
    m.at(c, r) = conj(z(s));
  }
  return m;
}

std::pair<int, int> slot_position(int slot) {
  if (slot < 0 || slot > 5) throw std::out_of_range("slot index");
  return kSlotPos[slot];
}

JordanElement jordan_mul(const JordanElement& a, const JordanElement& b) {
  const Matrix4 ma = a.to_matrix();
  const Matrix4 mb = b.to_matrix();
  return JordanElement::from_matrix(0.5 * (ma * mb + mb * ma));
}

double sigma1(const JordanElement& x) {
  return x.w(0) + x.w(1) + x.w(2) + x.w(3);
}

double bilinear_b(const JordanElement& a, const JordanElement& b) {
  return sigma1(jordan_mul(a, b));
}

NewtonSigmas newton_sigmas(const JordanElement& x) {
  require_traceless(x);
  const Matrix4 m = x.to_matrix();
  const Matrix4 m2 = m * m;
  const Matrix4 m3 = m2 * m;
  const Matrix4 m4 = m3 * m;
  NewtonSigmas s;
  s.p2 = trace_scalar(m2);
  s.p3 = trace_scalar(m3);
  s.p4 = trace_scalar(m4);
  s.sigma2 = -0.5 * s.p2;
  s.sigma3 = s.p3 / 3.0;
  s.sigma4 = 0.125 * (s.p2 * s.p2 - 2.0 * s.p4);
  return s;
}

double hamilton_cayley_residual(const JordanElement& x) {
  require_traceless(x);
  const Matrix4 m = x.to_matrix();
  const Matrix4 m2 = m * m;
  const Matrix4 m3 = m2 * m;
  const Matrix4 m4 = m3 * m;
  const double p2 = trace_scalar(m2);
  const double p3 = trace_scalar(m3);
  const double p4 = trace_scalar(m4);
  const double sigma4 = 0.125 * (p2 * p2 - 2.0 * p4);
  const Matrix4 res = m4 - 0.5 * p2 * m2 - (p3 / 3.0) * m + sigma4 * Matrix4::identity(x.d());
  const double scale = 1.0 + p2;
  return frobenius_norm(res) / (scale * scale);
}

double trace_power5_residual(const JordanElement& x) {
  require_traceless(x);
  const Matrix4 m = x.to_matrix();
  const Matrix4 m2 = m * m;
  const Matrix4 m3 = m2 * m;
  const Matrix4 m5 = m3 * m2;
  const double p2 = trace_scalar(m2);
  const double p3 = trace_scalar(m3);
  const double p5 = trace_scalar(m5);
  return std::abs(p5 - (5.0 / 6.0) * p2 * p3) / (1.0 + std::pow(p2, 2.5));
}

int hsiang_dim(int d) {
  validate_d(d);
  return 3 + 6 * d;
}

JordanElement traceless_embed(int d, std::span<const double> coords) {
  const int n = hsiang_dim(d);
  if (static_cast<int>(coords.size()) != n) {
    std::ostringstream os;
    os << "chart expects " << n << " coordinates, got " << coords.size();
    throw std::invalid_argument(os.str());
  }
  JordanElement x(d);
  for (int i = 0; i < 3; ++i) {
    double acc = kDiagSigns[i][0] * coords[0];
    acc += kDiagSigns[i][1] * coords[1];
    acc += kDiagSigns[i][2] * coords[2];
    x.w(i) = acc * kInvSqrt2;
  }
  // exact vanishing trace by construction
  x.w(3) = -(x.w(0) + x.w(1) + x.w(2));
  for (int s = 0; s < 6; ++s) {
    for (int k = 0; k < d; ++k) {
      x.z(s).c[static_cast<std::size_t>(k)] =
          coords[static_cast<std::size_t>(3 + s * d + k)];
    }
  }
  return x;
}

JordanElement traceless_embed_orthonormal(int d, std::span<const double> coords) {
  std::vector<double> scaled(coords.begin(), coords.end());
  for (double& v : scaled) v *= kInvSqrt2;
  return traceless_embed(d, scaled);
}

std::vector<JordanElement> orthonormal_basis(int d) {
  const int n = hsiang_dim(d);
  std::vector<JordanElement> basis;
  basis.reserve(static_cast<std::size_t>(n));
  std::vector<double> coords(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    coords[static_cast<std::size_t>(j)] = 1.0;
    basis.push_back(traceless_embed_orthonormal(d, coords));
    coords[static_cast<std::size_t>(j)] = 0.0;
  }
  return basis;
}

double basis_square_sum_residual(int d) {
  const int n = hsiang_dim(d);
  Matrix4 sum(d);
  for (const JordanElement& b : orthonormal_basis(d)) {
    const Matrix4 m = b.to_matrix();
    sum = sum + m * m;
  }
  const Matrix4 target = (static_cast<double>(n) / 4.0) * Matrix4::identity(d);
  return frobenius_norm(sum - target);
}

// --- symbolic expansion of the cubic ---

namespace {

// F_d element whose components are polynomials in the chart coordinates
struct PolyF {
  std::array<SparsePoly, 4> c;
};

PolyF pf_zero(int n) {
  PolyF r;
  for (auto& p : r.c) p = SparsePoly(n);
  return r;
}

void acc_product(SparsePoly& r, const SparsePoly& a, const SparsePoly& b, double sign) {
  if (a.term_count() == 0 || b.term_count() == 0) return;
  r += a.times(b).scaled(sign);
}

PolyF pf_mul(const PolyF& a, const PolyF& b, int n) {
  PolyF r = pf_zero(n);
  acc_product(r.c[0], a.c[0], b.c[0], 1.0);
  acc_product(r.c[0], a.c[1], b.c[1], -1.0);
  acc_product(r.c[0], a.c[2], b.c[2], -1.0);
  acc_product(r.c[0], a.c[3], b.c[3], -1.0);
  acc_product(r.c[1], a.c[0], b.c[1], 1.0);
  acc_product(r.c[1], a.c[1], b.c[0], 1.0);
  acc_product(r.c[1], a.c[2], b.c[3], 1.0);
  acc_product(r.c[1], a.c[3], b.c[2], -1.0);
  acc_product(r.c[2], a.c[0], b.c[2], 1.0);
  acc_product(r.c[2], a.c[1], b.c[3], -1.0);
  acc_product(r.c[2], a.c[2], b.c[0], 1.0);
  acc_product(r.c[2], a.c[3], b.c[1], 1.0);
  acc_product(r.c[3], a.c[0], b.c[3], 1.0);
  acc_product(r.c[3], a.c[1], b.c[2], 1.0);
  acc_product(r.c[3], a.c[2], b.c[1], -1.0);
  acc_product(r.c[3], a.c[3], b.c[0], 1.0);
  return r;
}

PolyF pf_add(const PolyF& a, const PolyF& b) {
  PolyF r = a;
  for (int i = 0; i < 4; ++i) r.c[static_cast<std::size_t>(i)] += b.c[static_cast<std::size_t>(i)];
  return r;
}

using PolyMatrix = std::array<std::array<PolyF, 4>, 4>;

PolyMatrix symbolic_embed(int d) {
  const int n = hsiang_dim(d);
  PolyMatrix x;
  for (auto& row : x)
    for (auto& e : row) e = pf_zero(n);
  // diagonal: the three even-sign combinations and minus their sum
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      x[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].c[0].add_term(
          {j}, kDiagSigns[i][j] * kInvSqrt2);
    }
  }
  const int last[3] = {-1, -1, 1};
  for (int j = 0; j < 3; ++j) x[3][3].c[0].add_term({j}, last[j] * kInvSqrt2);
  // slots and their conjugates
  for (int s = 0; s < 6; ++s) {
    auto [r, c] = kSlotPos[s];
    for (int k = 0; k < d; ++k) {
      const int var = 3 + s * d + k;
      x[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
          .c[static_cast<std::size_t>(k)]
          .add_term({var}, 1.0);
      x[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]
          .c[static_cast<std::size_t>(k)]
          .add_term({var}, k == 0 ? 1.0 : -1.0);
    }
  }
  return x;
}

PolyMatrix symbolic_matmul(const PolyMatrix& a, const PolyMatrix& b, int n) {
  PolyMatrix r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      PolyF acc = pf_zero(n);
      for (int k = 0; k < 4; ++k) {
        acc = pf_add(acc, pf_mul(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                 b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], n));
      }
      r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  }
  return r;
}

}  // namespace

SparsePoly hsiang_cubic(int d) {
  const int n = hsiang_dim(d);
  const PolyMatrix x = symbolic_embed(d);
  const PolyMatrix x2 = symbolic_matmul(x, x, n);
  const PolyMatrix x3 = symbolic_matmul(x2, x, n);
  SparsePoly trace(n);
  for (int i = 0; i < 4; ++i) {
    trace += x3[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].c[0];
  }
  SparsePoly f = trace.scaled(1.0 / 6.0);
  f.prune(1e-14);
  return f;
}

namespace {

const double kOrthoScale = 1.0 / (2.0 * std::numbers::sqrt2);

}  // namespace

ScalarField hsiang_field(int d) {
  const SparsePoly f = hsiang_cubic(d).scaled(kOrthoScale);
  std::ostringstream name;
  name << "hsiang(d=" << d << ")";
  return ScalarField(
      hsiang_dim(d), name.str(),
      [f](std::span<const double> x) { return f.eval_jet(x); }, {},
      WeightSpec::radial(-0.5));
}

HoloField hsiang_holo(int d) {
  const SparsePoly f = hsiang_cubic(d).scaled(kOrthoScale);
  std::ostringstream name;
  name << "hsiang-holo(d=" << d << ")";
  return HoloField(
      hsiang_dim(d), name.str(),
      [f](std::span<const complexd> z) { return f.eval_cjet(z); },
      [f](std::span<const complexd> z) {
        complexd v = 0.0;
        for (const auto& [m, c] : f.terms()) {
          complexd t = c;
          const int deg = m.degree();
          for (int i = 0; i < deg; ++i) t *= z[m.v[static_cast<std::size_t>(i)]];
          v += t;
        }
        return std::abs(v) < 0.1;
      },
      [](std::span<const complexd> z) {
        double s = 0.0;
        for (complexd zi : z) s += std::norm(zi);
        return 0.5 * s;
      });
}

namespace {

bool polys_match(const SparsePoly& a, const SparsePoly& b, double tol) {
  for (const auto& [m, c] : a.terms()) {
    if (std::abs(c - b.coeff(m)) > tol) return false;
  }
  for (const auto& [m, c] : b.terms()) {
    if (std::abs(c - a.coeff(m)) > tol) return false;
  }
  return true;
}

}  // namespace

std::pair<SparsePoly, SparsePoly> f1_determinant_pair(std::span<const int, 6> signs) {
  const int n = 9;  // v1 v2 v3 z1..z6
  const SparsePoly f1 = hsiang_cubic(1);

  // mixed slot pairs: zp[2i] from (z_{2i+1} + z_{2i+2}), zp[2i+1] from the difference
  std::array<SparsePoly, 6> zp;
  for (int pair = 0; pair < 3; ++pair) {
    const int za = 3 + 2 * pair;
    const int zb = za + 1;
    SparsePoly sum(n), diff(n);
    sum.add_term({za}, signs[static_cast<std::size_t>(2 * pair)] * kInvSqrt2);
    sum.add_term({zb}, signs[static_cast<std::size_t>(2 * pair)] * kInvSqrt2);
    diff.add_term({za}, signs[static_cast<std::size_t>(2 * pair + 1)] * kInvSqrt2);
    diff.add_term({zb}, -signs[static_cast<std::size_t>(2 * pair + 1)] * kInvSqrt2);
    zp[static_cast<std::size_t>(2 * pair)] = sum;
    zp[static_cast<std::size_t>(2 * pair + 1)] = diff;
  }

  std::array<std::array<SparsePoly, 3>, 3> m;
  auto var_poly = [n](int v) {
    SparsePoly p(n);
    p.add_term({v}, 1.0);
    return p;
  };
  m[0][0] = var_poly(0);
  m[1][1] = var_poly(1);
  m[2][2] = var_poly(2);
  m[0][1] = zp[5];  // z6'
  m[0][2] = zp[2];  // z3'
  m[1][0] = zp[4];  // z5'
  m[1][2] = zp[1];  // z2'
  m[2][0] = zp[3];  // z4'
  m[2][1] = zp[0];  // z1'

  SparsePoly det =
      m[0][0] * (m[1][1] * m[2][2] + (m[1][2] * m[2][1]).scaled(-1.0)) +
      (m[0][1] * (m[1][0] * m[2][2] + (m[1][2] * m[2][0]).scaled(-1.0))).scaled(-1.0) +
      m[0][2] * (m[1][0] * m[2][1] + (m[1][1] * m[2][0]).scaled(-1.0));
  SparsePoly scaled = det.scaled(std::numbers::sqrt2);
  scaled.prune(1e-14);
  return {f1, scaled};
}

std::array<int, 6> f1_mix_signs() {
  for (int mask = 0; mask < 64; ++mask) {
    std::array<int, 6> s{};
    for (int i = 0; i < 6; ++i) {
      s[static_cast<std::size_t>(i)] = ((mask >> (5 - i)) & 1) ? -1 : 1;
    }
    auto [f1, det] = f1_determinant_pair(s);
    if (polys_match(f1, det, 1e-12)) return s;
  }
  throw std::runtime_error("no sign pattern matches the determinant form");
}

std::pair<ScalarField, ScalarField> f0_complexified_twins() {
  SparsePoly u(6), v(6);
  u.add_term({0, 1, 2}, 1.0);
  u.add_term({0, 4, 5}, -1.0);
  u.add_term({3, 1, 5}, -1.0);
  u.add_term({3, 4, 2}, -1.0);
  v.add_term({3, 1, 2}, 1.0);
  v.add_term({0, 4, 2}, 1.0);
  v.add_term({0, 1, 5}, 1.0);
  v.add_term({3, 4, 5}, -1.0);
  ScalarField fu(
      6, "f0-twins-re", [u](std::span<const double> x) { return u.eval_jet(x); }, {},
      WeightSpec::radial(-2.0));
  ScalarField fv(
      6, "f0-twins-im", [v](std::span<const double> x) { return v.eval_jet(x); }, {},
      WeightSpec::radial(-2.0));
  return {fu, fv};
}

}  // namespace minsurf
