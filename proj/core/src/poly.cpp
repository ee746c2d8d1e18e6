#include "minsurf/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minsurf {

int Monomial::degree() const {
  int d = 0;
  while (d < kPolyMaxDegree && v[static_cast<std::size_t>(d)] != kPolyNoVar) ++d;
  return d;
}

Monomial Monomial::of(std::initializer_list<int> vars) {
  std::array<int, kPolyMaxDegree> tmp{};
  int n = 0;
  for (int x : vars) tmp[static_cast<std::size_t>(n++)] = x;
  return of(std::span<const int>(tmp.data(), static_cast<std::size_t>(n)));
}

Monomial Monomial::of(std::span<const int> vars) {
  if (vars.size() > kPolyMaxDegree) {
    throw std::invalid_argument("monomial degree exceeds 4");
  }
  Monomial m;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] < 0 || vars[i] >= 255) throw std::out_of_range("monomial variable index");
    m.v[i] = static_cast<std::uint8_t>(vars[i]);
  }
  std::sort(m.v.begin(), m.v.begin() + static_cast<std::ptrdiff_t>(vars.size()));
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  const int da = degree();
  const int db = other.degree();
  if (da + db > kPolyMaxDegree) {
    throw std::invalid_argument("monomial product degree exceeds 4");
  }
  Monomial m;
  for (int i = 0; i < da; ++i) m.v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
  for (int i = 0; i < db; ++i)
    m.v[static_cast<std::size_t>(da + i)] = other.v[static_cast<std::size_t>(i)];
  std::sort(m.v.begin(), m.v.begin() + da + db);
  return m;
}

void SparsePoly::add_term(const Monomial& m, double coeff) {
  const int d = m.degree();
  for (int i = 0; i < d; ++i) {
    if (m.v[static_cast<std::size_t>(i)] >= dim_) {
      throw std::out_of_range("monomial variable index exceeds polynomial dimension");
    }
  }
  terms_[m] += coeff;
}

void SparsePoly::add_term(std::initializer_list<int> vars, double coeff) {
  add_term(Monomial::of(vars), coeff);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.dim_ > dim_) dim_ = o.dim_;
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  return *this;
}

SparsePoly SparsePoly::scaled(double c) const {
  SparsePoly r(dim_);
  for (const auto& [m, co] : terms_) r.terms_[m] = co * c;
  return r;
}

SparsePoly SparsePoly::times(const SparsePoly& o) const {
  SparsePoly r(std::max(dim_, o.dim_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.terms_[ma.times(mb)] += ca * cb;
    }
  }
  return r;
}

void SparsePoly::prune(double eps) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= eps) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

int SparsePoly::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool SparsePoly::homogeneous(int degree) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != degree) return false;
  }
  return true;
}

double SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

double SparsePoly::eval_value(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("polynomial evaluated at point of wrong dimension");
  }
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c;
    const int d = m.degree();
    for (int i = 0; i < d; ++i) t *= x[m.v[static_cast<std::size_t>(i)]];
    s += t;
  }
  return s;
}

Jet2 SparsePoly::eval_jet(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("polynomial evaluated at point of wrong dimension");
  }
  Jet2 r(dim_);
  double value = 0.0;
  for (const auto& [m, c] : terms_) {
    const int d = m.degree();
    const auto* v = m.v.data();
    double prod = c;
    for (int i = 0; i < d; ++i) prod *= x[v[i]];
    value += prod;
    // gradient: drop one factor at a time
    for (int p = 0; p < d; ++p) {
      double t = c;
      for (int q = 0; q < d; ++q)
        if (q != p) t *= x[v[q]];
      r.grad(v[p]) += t;
    }
    // Hessian: drop an unordered pair of factors; a repeated variable pair
    // contributes twice to the diagonal entry.
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        double t = c;
        for (int s = 0; s < d; ++s)
          if (s != p && s != q) t *= x[v[s]];
        if (v[p] == v[q]) t *= 2.0;
        r.hess(v[p], v[q]) += t;
      }
    }
  }
  r.value() = value;
  return r;
}

CJet2 SparsePoly::eval_cjet(std::span<const complexd> z) const {
  if (static_cast<int>(z.size()) != dim_) {
    throw std::invalid_argument("polynomial evaluated at point of wrong dimension");
  }
  CJet2 r(dim_);
  complexd value = 0.0;
  for (const auto& [m, c] : terms_) {
    const int d = m.degree();
    const auto* v = m.v.data();
    complexd prod = c;
    for (int i = 0; i < d; ++i) prod *= z[v[i]];
    value += prod;
    for (int p = 0; p < d; ++p) {
      complexd t = c;
      for (int q = 0; q < d; ++q)
        if (q != p) t *= z[v[q]];
      r.grad(v[p]) += t;
    }
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        complexd t = c;
        for (int s = 0; s < d; ++s)
          if (s != p && s != q) t *= z[v[s]];
        if (v[p] == v[q]) t *= 2.0;
        r.hess(v[p], v[q]) += t;
      }
    }
  }
  r.value() = value;
  return r;
}

std::string SparsePoly::to_string(const std::string& var_prefix) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    os << std::abs(c);
    const int d = m.degree();
    for (int i = 0; i < d; ++i) os << "*" << var_prefix << (m.v[static_cast<std::size_t>(i)] + 1);
  }
  if (first) os << "0";
  return os.str();
}

SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
  a += b;
  return a;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return a.times(b); }

}  // namespace minsurf
