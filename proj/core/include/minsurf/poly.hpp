// Sparse multivariate polynomials of total degree <= 4 with real
// coefficients, evaluable as values, real jets, or holomorphic complex jets.
// Monomials are kept as sorted index lists, so derivative accumulation stays
// exact for repeated factors.
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>

#include "minsurf/cjet.hpp"
#include "minsurf/jet.hpp"

namespace minsurf {

inline constexpr int kPolyMaxDegree = 4;
inline constexpr std::uint8_t kPolyNoVar = 0xFF;

struct Monomial {
  std::array<std::uint8_t, kPolyMaxDegree> v{kPolyNoVar, kPolyNoVar, kPolyNoVar, kPolyNoVar};

  int degree() const;
  static Monomial of(std::initializer_list<int> vars);
  static Monomial of(std::span<const int> vars);
  Monomial times(const Monomial& other) const;  // throws if degree would exceed 4
  bool operator<(const Monomial& o) const { return v < o.v; }
  bool operator==(const Monomial& o) const { return v == o.v; }
};

class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, double>& terms() const { return terms_; }

  void add_term(const Monomial& m, double coeff);
  void add_term(std::initializer_list<int> vars, double coeff);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly scaled(double c) const;
  SparsePoly times(const SparsePoly& o) const;

  // Drops terms with |coeff| <= eps.
  void prune(double eps = 1e-14);

  int max_degree() const;
  bool homogeneous(int degree) const;

  double coeff(const Monomial& m) const;
  double eval_value(std::span<const double> x) const;
  Jet2 eval_jet(std::span<const double> x) const;
  CJet2 eval_cjet(std::span<const complexd> z) const;

  std::string to_string(const std::string& var_prefix = "x") const;

 private:
  int dim_ = 0;
  std::map<Monomial, double> terms_;
};

SparsePoly operator+(SparsePoly a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

}  // namespace minsurf
