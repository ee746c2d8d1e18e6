#include "minsurf/fieldspec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "minsurf/expr.hpp"
#include "minsurf/fields.hpp"
#include "minsurf/jordan.hpp"

namespace minsurf {

std::string normalize_spec(std::string_view spec) {
  std::string out;
  out.reserve(spec.size());
  for (char c : spec) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c == '_') c = '-';
    out += c;
  }
  // trim outer whitespace
  const auto b = out.find_first_not_of(" \t");
  const auto e = out.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return out.substr(b, e - b + 1);
}

namespace {

struct SpecNode;

struct SpecValue {
  enum class Kind { number, list, node };
  Kind kind = Kind::number;
  double number = 0.0;
  std::vector<double> list;
  std::shared_ptr<SpecNode> node;
  std::size_t offset = 0;
};

struct SpecNode {
  std::string name;
  std::string suffix;  // "", "re", "im", "arg"
  std::string expr;    // payload when name == "expr"
  std::vector<std::pair<std::string, SpecValue>> args;
  std::size_t offset = 0;
};

bool is_letter(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_letter(c) || is_digit(c) || c == '-'; }

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  SpecNode run() {
    SpecNode n = parse_node();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "end of spec", found());
    return n;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  std::string found() const {
    if (eof()) return "end of input";
    return std::string("'") + s_[pos_] + "'";
  }

  std::string read_ident() {
    const std::size_t start = pos_;
    while (!eof() && is_ident_char(peek())) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  SpecNode parse_node() {
    skip_ws();
    const std::size_t at = pos_;
    if (eof() || !is_letter(peek())) throw ParseError(pos_, "field name", found());
    std::string ident = read_ident();
    return continue_node(std::move(ident), at);
  }

  SpecNode continue_node(std::string ident, std::size_t at) {
    SpecNode n;
    n.offset = at;
    if (ident == "expr" && !eof() && peek() == ':') {
      ++pos_;
      n.name = "expr";
      n.expr = capture_expression();
      if (n.expr.empty()) throw ParseError(pos_, "expression", found());
      return n;
    }
    n.name = std::move(ident);
    skip_ws();
    if (!eof() && peek() == '(') {
      ++pos_;
      skip_ws();
      if (!eof() && peek() == ')') {
        ++pos_;
      } else {
        for (;;) {
          parse_arg(n);
          skip_ws();
          if (!eof() && peek() == ',') {
            ++pos_;
            continue;
          }
          if (!eof() && peek() == ')') {
            ++pos_;
            break;
          }
          throw ParseError(pos_, "',' or ')'", found());
        }
      }
      // optional part suffix after the closing paren
      if (!eof() && peek() == '-') {
        const std::size_t sat = pos_;
        ++pos_;
        std::string sfx = read_ident();
        if (sfx != "re" && sfx != "im" && sfx != "arg") {
          throw ParseError(sat, "suffix -re, -im or -arg", "-" + sfx);
        }
        n.suffix = sfx;
      }
    }
    return n;
  }

  // Everything up to the first top-level ',' ']' or ')' is expression text.
  std::string capture_expression() {
    const std::size_t start = pos_;
    int depth = 0;
    while (!eof()) {
      const char c = peek();
      if (c == '(') ++depth;
      if (c == ')' || c == ',' || c == ']') {
        if (depth == 0) break;
        if (c == ')') --depth;
      }
      ++pos_;
    }
    std::string out(s_.substr(start, pos_ - start));
    const auto b = out.find_first_not_of(" \t");
    const auto e = out.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return out.substr(b, e - b + 1);
  }

  void parse_arg(SpecNode& n) {
    skip_ws();
    const std::size_t at = pos_;
    if (!eof() && is_letter(peek())) {
      std::string ident = read_ident();
      skip_ws();
      if (!eof() && peek() == '=') {
        ++pos_;
        n.args.emplace_back(std::move(ident), parse_value());
        return;
      }
      SpecValue v;
      v.kind = SpecValue::Kind::node;
      v.node = std::make_shared<SpecNode>(continue_node(std::move(ident), at));
      v.offset = at;
      n.args.emplace_back("", std::move(v));
      return;
    }
    n.args.emplace_back("", parse_value());
  }

  SpecValue parse_value() {
    skip_ws();
    SpecValue v;
    v.offset = pos_;
    if (eof()) throw ParseError(pos_, "argument value", found());
    const char c = peek();
    if (c == '[') {
      ++pos_;
      v.kind = SpecValue::Kind::list;
      skip_ws();
      if (!eof() && peek() == ']') {
        ++pos_;
        return v;
      }
      for (;;) {
        v.list.push_back(parse_number());
        skip_ws();
        if (!eof() && peek() == ',') {
          ++pos_;
          continue;
        }
        if (!eof() && peek() == ']') {
          ++pos_;
          return v;
        }
        throw ParseError(pos_, "',' or ']'", found());
      }
    }
    if (is_digit(c) || c == '.' || c == '-' || c == '+') {
      v.kind = SpecValue::Kind::number;
      v.number = parse_number();
      return v;
    }
    if (is_letter(c)) {
      const std::size_t at = pos_;
      std::string ident = read_ident();
      v.kind = SpecValue::Kind::node;
      v.node = std::make_shared<SpecNode>(continue_node(std::move(ident), at));
      return v;
    }
    throw ParseError(pos_, "argument value", found());
  }

  double parse_number() {
    skip_ws();
    if (eof()) throw ParseError(pos_, "number", found());
    std::size_t start = pos_;
    if (peek() == '+') ++pos_;
    double value = 0.0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc()) throw ParseError(start, "number", found());
    pos_ = static_cast<std::size_t>(p - s_.data());
    return value;
  }
};

[[noreturn]] void arg_error(const SpecNode& n, const std::string& what) {
  std::ostringstream os;
  os << "spec '" << n.name << "': " << what;
  throw std::invalid_argument(os.str());
}

// Binds declared parameters: keyed arguments by name, positional arguments
// in declaration order over the parameters not already keyed.
class Args {
 public:
  Args(const SpecNode& n, std::vector<std::string> params)
      : n_(n), params_(std::move(params)) {
    std::vector<const SpecValue*> positional;
    for (const auto& [key, value] : n.args) {
      if (key.empty()) {
        positional.push_back(&value);
        continue;
      }
      if (std::find(params_.begin(), params_.end(), key) == params_.end()) {
        arg_error(n, "unknown argument '" + key + "'");
      }
      if (bound_.count(key)) arg_error(n, "duplicate argument '" + key + "'");
      bound_[key] = &value;
    }
    std::size_t next = 0;
    for (const SpecValue* value : positional) {
      while (next < params_.size() && bound_.count(params_[next])) ++next;
      if (next == params_.size()) arg_error(n, "too many arguments");
      bound_[params_[next++]] = value;
    }
  }

  bool has(const std::string& key) const { return bound_.count(key) > 0; }

  double number(const std::string& key) const {
    const SpecValue& v = required(key);
    if (v.kind != SpecValue::Kind::number) arg_error(n_, "'" + key + "' must be a number");
    return v.number;
  }
  double number_or(const std::string& key, double def) const {
    return has(key) ? number(key) : def;
  }

  long long integer(const std::string& key) const {
    const double v = number(key);
    if (v != std::round(v)) arg_error(n_, "'" + key + "' must be an integer");
    return static_cast<long long>(v);
  }
  long long integer_or(const std::string& key, long long def) const {
    return has(key) ? integer(key) : def;
  }

  std::vector<double> list(const std::string& key) const {
    const SpecValue& v = required(key);
    if (v.kind != SpecValue::Kind::list) {
      arg_error(n_, "'" + key + "' must be a bracket list");
    }
    return v.list;
  }

  const SpecNode& node(const std::string& key) const {
    const SpecValue& v = required(key);
    if (v.kind != SpecValue::Kind::node) {
      arg_error(n_, "'" + key + "' must be a field spec");
    }
    return *v.node;
  }

  // bare identifier (a spec node with no arguments)
  std::string token(const std::string& key) const {
    const SpecNode& t = node(key);
    if (!t.args.empty() || !t.suffix.empty() || t.name == "expr") {
      arg_error(n_, "'" + key + "' must be a plain name");
    }
    return t.name;
  }

 private:
  const SpecValue& required(const std::string& key) const {
    auto it = bound_.find(key);
    if (it == bound_.end()) arg_error(n_, "missing argument '" + key + "'");
    return *it->second;
  }

  const SpecNode& n_;
  std::vector<std::string> params_;
  std::map<std::string, const SpecValue*> bound_;
};

ResolvedField resolve_node(const SpecNode& n, int expr_dim);

ScalarField scalar_of(const SpecNode& n, int expr_dim) {
  ResolvedField r = resolve_node(n, expr_dim);
  if (!r.scalar) arg_error(n, "names a non-scalar field where a scalar is needed");
  return std::move(*r.scalar);
}

// Embeds a field in a larger variable space so two sub-fields of different
// sizes can share one. The appended variables are inert; a zero weight
// survives the embedding, a radial one would not and is dropped.
ScalarField widen_to(ScalarField f, int dim) {
  if (f.dim() >= dim) return f;
  const std::size_t k = static_cast<std::size_t>(f.dim());
  const int inner_dim = f.dim();
  std::optional<WeightSpec> w;
  if (f.weight() && f.weight()->kind == WeightSpec::Kind::zero) w = *f.weight();
  const std::string name = f.name();
  auto base = std::make_shared<const ScalarField>(std::move(f));
  auto eval = [base, k, inner_dim, dim](std::span<const double> x) {
    const Jet2 inner = base->eval(x.subspan(0, k));
    Jet2 out(dim);
    out.value() = inner.value();
    for (int i = 0; i < inner_dim; ++i) out.grad(i) = inner.grad(i);
    for (int i = 0; i < inner_dim; ++i)
      for (int j = i; j < inner_dim; ++j) out.hess(i, j) = inner.hess(i, j);
    return out;
  };
  auto guard = [base, k](std::span<const double> x) {
    return base->excluded(x.subspan(0, k));
  };
  return ScalarField(dim, name, std::move(eval), std::move(guard), w);
}

HoloField holo_of(const SpecNode& n) {
  ResolvedField r = resolve_node(n, -1);
  if (!r.holo) arg_error(n, "names a non-holomorphic field where one is needed");
  return std::move(*r.holo);
}

std::vector<long long> integer_list(const SpecNode& n, const Args& a,
                                    const std::string& key) {
  std::vector<long long> out;
  for (double v : a.list(key)) {
    if (v != std::round(v)) arg_error(n, "'" + key + "' must contain integers");
    out.push_back(static_cast<long long>(v));
  }
  return out;
}

std::vector<complexd> complex_list(const Args& a, const std::string& key) {
  std::vector<complexd> out;
  for (double v : a.list(key)) out.emplace_back(v, 0.0);
  return out;
}

PhiKind parse_phi(const SpecNode& n, const std::string& token) {
  if (token == "identity") return PhiKind::identity;
  if (token == "sin") return PhiKind::sin;
  if (token == "tan") return PhiKind::tan;
  if (token == "atan") return PhiKind::atan;
  if (token == "pow") return PhiKind::odd_pow;
  if (token == "expm1") return PhiKind::expm1;
  arg_error(n, "unknown outer function '" + token +
                   "' (identity, sin, tan, atan, pow, expm1)");
}

ResolvedField resolve_base(const SpecNode& n, int expr_dim) {
  ResolvedField out;

  if (n.name == "expr") {
    out.scalar = expression_field(n.expr, expr_dim);
    return out;
  }
  if (n.name == "helicoid") {
    Args a(n, {});
    out.scalar = helicoid();
    return out;
  }
  if (n.name == "affine") {
    Args a(n, {"n", "a", "b"});
    const int dim = static_cast<int>(a.integer("n"));
    std::vector<double> b = a.has("b")
                                ? a.list("b")
                                : std::vector<double>(static_cast<std::size_t>(
                                                          std::max(dim, 0)),
                                                      1.0);
    out.scalar = affine(dim, a.number_or("a", 0.0), std::move(b));
    return out;
  }
  if (n.name == "polar-angle") {
    Args a(n, {"n", "i", "j", "a", "b"});
    out.scalar = polar_angle(static_cast<int>(a.integer("n")),
                             static_cast<int>(a.integer("i")) - 1,
                             static_cast<int>(a.integer("j")) - 1,
                             a.number_or("a", 0.0), a.number_or("b", 1.0));
    return out;
  }
  if (n.name == "angle-sum") {
    Args a(n, {"p"});
    out.scalar = angle_sum(a.list("p"));
    return out;
  }
  if (n.name == "superpose") {
    Args a(n, {"a", "f", "b", "g"});
    out.scalar = superpose(a.number_or("a", 1.0), scalar_of(a.node("f"), expr_dim),
                           a.number_or("b", 1.0), scalar_of(a.node("g"), expr_dim));
    return out;
  }
  if (n.name == "graph-lift-tan") {
    Args a(n, {"f"});
    out.scalar = graph_lift_tan(scalar_of(a.node("f"), expr_dim));
    return out;
  }
  if (n.name == "compose") {
    Args a(n, {"phi", "u", "k"});
    const PhiKind phi = parse_phi(n, a.token("phi"));
    out.scalar = compose_scalar(phi, scalar_of(a.node("u"), expr_dim),
                                static_cast<int>(a.integer_or("k", 3)));
    return out;
  }
  if (n.name == "multiply") {
    Args a(n, {"v", "u"});
    ScalarField v = scalar_of(a.node("v"), expr_dim);
    ScalarField u = scalar_of(a.node("u"), expr_dim);
    const int m = std::max(v.dim(), u.dim());
    out.scalar = multiply(widen_to(std::move(v), m), widen_to(std::move(u), m));
    return out;
  }
  if (n.name == "twin-arctan") {
    Args a(n, {"u", "v"});
    ScalarField u = scalar_of(a.node("u"), expr_dim);
    ScalarField v = scalar_of(a.node("v"), expr_dim);
    const int m = std::max(u.dim(), v.dim());
    out.scalar = twin_arctan(widen_to(std::move(u), m), widen_to(std::move(v), m));
    return out;
  }
  if (n.name == "hsiang") {
    Args a(n, {"d"});
    out.scalar = hsiang_field(static_cast<int>(a.integer("d")));
    return out;
  }
  if (n.name == "hsiang-holo") {
    Args a(n, {"d"});
    out.holo = hsiang_holo(static_cast<int>(a.integer("d")));
    return out;
  }
  if (n.name == "f0-twins") {
    Args a(n, {});
    out.twins = f0_complexified_twins();
    return out;
  }
  if (n.name == "f0-twins-re") {
    Args a(n, {});
    out.scalar = f0_complexified_twins().first;
    return out;
  }
  if (n.name == "f0-twins-im") {
    Args a(n, {});
    out.scalar = f0_complexified_twins().second;
    return out;
  }
  if (n.name == "pair") {
    Args a(n, {"u", "v"});
    ScalarField u = scalar_of(a.node("u"), expr_dim);
    ScalarField v = scalar_of(a.node("v"), expr_dim);
    const int m = std::max(u.dim(), v.dim());
    out.twins = std::make_pair(widen_to(std::move(u), m), widen_to(std::move(v), m));
    return out;
  }
  if (n.name == "re" || n.name == "im" || n.name == "arg") {
    Args a(n, {"h"});
    const HoloField h = holo_of(a.node("h"));
    if (n.name == "re") out.scalar = re_field(h);
    if (n.name == "im") out.scalar = im_field(h);
    if (n.name == "arg") out.scalar = arg_field(h);
    return out;
  }
  if (n.name == "linear") {
    Args a(n, {"m", "a", "b"});
    out.holo = holo_linear(static_cast<int>(a.integer("m")), complex_list(a, "a"),
                           complexd(a.number_or("b", 0.0), 0.0));
    return out;
  }
  if (n.name == "clifford") {
    Args a(n, {"m"});
    out.holo = holo_clifford(static_cast<int>(a.integer("m")));
    return out;
  }
  if (n.name == "exp") {
    Args a(n, {"p"});
    out.holo = holo_exp(a.number("p"));
    return out;
  }
  if (n.name == "binomial") {
    Args a(n, {"a", "b", "p"});
    out.holo = holo_binomial(complexd(a.number("a"), 0.0), complexd(a.number("b"), 0.0),
                             a.number("p"));
    return out;
  }
  if (n.name == "monomial") {
    Args a(n, {"k"});
    out.holo = holo_monomial(integer_list(n, a, "k"));
    return out;
  }
  if (n.name == "lawson") {
    Args a(n, {"p", "q"});
    out.holo = holo_lawson(a.integer("p"), a.integer("q"));
    return out;
  }
  if (n.name == "det") {
    Args a(n, {"k"});
    out.holo = holo_det(static_cast<int>(a.integer("k")));
    return out;
  }
  if (n.name == "power") {
    Args a(n, {"h", "c", "r"});
    out.holo = holo_power(holo_of(a.node("h")), complexd(a.number_or("c", 1.0), 0.0),
                          a.number("r"));
    return out;
  }
  if (n.name == "product") {
    Args a(n, {"h", "g"});
    out.holo = holo_product(holo_of(a.node("h")), holo_of(a.node("g")));
    return out;
  }
  if (n.name == "quotient") {
    Args a(n, {"h", "g"});
    out.holo = holo_quotient(holo_of(a.node("h")), holo_of(a.node("g")));
    return out;
  }

  std::ostringstream os;
  os << "unknown field spec '" << n.name << "'";
  throw std::invalid_argument(os.str());
}

ResolvedField resolve_node(const SpecNode& n, int expr_dim) {
  ResolvedField base = resolve_base(n, expr_dim);
  if (n.suffix.empty()) return base;
  if (!base.holo) arg_error(n, "suffix -" + n.suffix + " needs a holomorphic base");
  ResolvedField out;
  if (n.suffix == "re") out.scalar = re_field(*base.holo);
  if (n.suffix == "im") out.scalar = im_field(*base.holo);
  if (n.suffix == "arg") out.scalar = arg_field(*base.holo);
  return out;
}

}  // namespace

ResolvedField resolve_spec(std::string_view spec, int expr_dim) {
  const std::string norm = normalize_spec(spec);
  SpecNode n = SpecParser(norm).run();
  return resolve_node(n, expr_dim);
}

ScalarField resolve_scalar(std::string_view spec, int expr_dim) {
  ResolvedField r = resolve_spec(spec, expr_dim);
  if (!r.scalar) {
    throw std::invalid_argument("spec '" + normalize_spec(spec) +
                                "' does not name a scalar field");
  }
  return std::move(*r.scalar);
}

HoloField resolve_holo(std::string_view spec) {
  ResolvedField r = resolve_spec(spec, -1);
  if (!r.holo) {
    throw std::invalid_argument("spec '" + normalize_spec(spec) +
                                "' does not name a holomorphic field");
  }
  return std::move(*r.holo);
}

std::pair<ScalarField, ScalarField> resolve_twins(std::string_view spec, int expr_dim) {
  ResolvedField r = resolve_spec(spec, expr_dim);
  if (!r.twins) {
    throw std::invalid_argument("spec '" + normalize_spec(spec) +
                                "' does not name a field pair");
  }
  return std::move(*r.twins);
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"helicoid", 3, "level function x3 - atan2(x2,x1) of the right helicoid"},
      {"polar-angle(n=2,i=1,j=2)", 2, "plane angle atan2(x2,x1)"},
      {"angle-sum(p=[1,1])", 4, "sum of plane angles over paired coordinates"},
      {"affine(n=3,a=0,b=[1,1,1])", 3, "affine function"},
      {"expr:x1*x2*x3", 3, "expression-language field"},
      {"f0-twins", 6, "complexified diagonal cubic pair, radial weight -2"},
      {"hsiang(d=0)", 3, "diagonal traceless cubic, radial weight -1/2"},
      {"hsiang(d=1)", 9, "traceless symmetric cubic, radial weight -1/2"},
      {"hsiang(d=2)", 15, "traceless Hermitian cubic, radial weight -1/2"},
      {"hsiang(d=4)", 27, "traceless quaternion-Hermitian cubic, radial weight -1/2"},
      {"hsiang-holo(d=1)", 18, "holomorphic extension of hsiang(d=1)"},
      {"clifford(m=2)", 4, "quadric z1^2+z2^2 with constant weight 8"},
      {"clifford(m=3)", 6, "quadric z1^2+z2^2+z3^2 with constant weight 8"},
      {"exp(p=1)", 2, "exponential e^z"},
      {"lawson(p=1,q=2)", 4, "monomial z1*z2^2"},
      {"monomial(k=[1,1,1])", 6, "monomial z1*z2*z3"},
      {"binomial(a=1,b=2,p=0.5)", 2, "principal branch of (z+2)^0.5"},
      {"linear(m=2,a=[1,1],b=0)", 4, "complex-linear form z1+z2"},
      {"det(k=2)", 8, "determinant of a 2x2 complex matrix"},
      {"det(k=3)", 18, "determinant of a 3x3 complex matrix"},
  };
}

std::string catalog_listing() {
  std::string out;
  for (const CatalogEntry& e : catalog_entries()) {
    out += e.spec;
    out += "  N=";
    out += std::to_string(e.dim);
    out += "  ";
    out += e.summary;
    out += '\n';
  }
  return out;
}

}  // namespace minsurf
