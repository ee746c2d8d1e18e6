#include "minsurf/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>

namespace minsurf {

namespace {

std::string parse_error_message(std::size_t offset, const std::string& expected,
                                const std::string& found) {
  std::ostringstream os;
  os << "parse error at offset " << offset << ": expected " << expected << ", found "
     << found;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset_in, std::string expected_in, std::string found_in)
    : std::runtime_error(parse_error_message(offset_in, expected_in, found_in)),
      offset(offset_in),
      expected(std::move(expected_in)),
      found(std::move(found_in)) {}

namespace {

int call_arity(std::string_view fn) {
  if (fn == "atan2") return 2;
  if (fn == "sin" || fn == "cos" || fn == "tan" || fn == "atan" || fn == "exp" ||
      fn == "log" || fn == "sqrt") {
    return 1;
  }
  return -1;
}

ExprPtr make_number(double v) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::number;
  n->value = v;
  return n;
}

ExprPtr make_binary(ExprOp op, ExprPtr a, ExprPtr b) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->args = {std::move(a), std::move(b)};
  return n;
}

std::optional<double> constant_fold(const ExprPtr& e) {
  switch (e->op) {
    case ExprOp::number:
      return e->value;
    case ExprOp::variable:
      return std::nullopt;
    case ExprOp::neg: {
      auto a = constant_fold(e->args[0]);
      if (!a) return std::nullopt;
      return -*a;
    }
    case ExprOp::add:
    case ExprOp::sub:
    case ExprOp::mul:
    case ExprOp::div: {
      auto a = constant_fold(e->args[0]);
      auto b = constant_fold(e->args[1]);
      if (!a || !b) return std::nullopt;
      switch (e->op) {
        case ExprOp::add: return *a + *b;
        case ExprOp::sub: return *a - *b;
        case ExprOp::mul: return *a * *b;
        default: return *a / *b;
      }
    }
    case ExprOp::pow: {
      auto a = constant_fold(e->args[0]);
      if (!a) return std::nullopt;
      return std::pow(*a, e->value);
    }
    case ExprOp::call: {
      std::vector<double> vals;
      for (const ExprPtr& arg : e->args) {
        auto v = constant_fold(arg);
        if (!v) return std::nullopt;
        vals.push_back(*v);
      }
      if (e->fn == "sin") return std::sin(vals[0]);
      if (e->fn == "cos") return std::cos(vals[0]);
      if (e->fn == "tan") return std::tan(vals[0]);
      if (e->fn == "atan") return std::atan(vals[0]);
      if (e->fn == "exp") return std::exp(vals[0]);
      if (e->fn == "log") return std::log(vals[0]);
      if (e->fn == "sqrt") return std::sqrt(vals[0]);
      return std::atan2(vals[0], vals[1]);
    }
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) throw error("end of input", found_here());
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string found_here() const {
    if (eof()) return "end of input";
    return std::string("'") + s_[pos_] + "'";
  }

  ParseError error(std::string expected, std::string found) const {
    return ParseError(pos_, std::move(expected), std::move(found));
  }

  bool accept(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        left = make_binary(ExprOp::add, left, parse_term());
      } else if (accept('-')) {
        left = make_binary(ExprOp::sub, left, parse_term());
      } else {
        return left;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        left = make_binary(ExprOp::mul, left, parse_unary());
      } else if (accept('/')) {
        left = make_binary(ExprOp::div, left, parse_unary());
      } else {
        return left;
      }
    }
  }

  ExprPtr parse_unary() {
    skip_ws();
    if (accept('-')) {
      ExprPtr child = parse_unary();
      if (child->op == ExprOp::number) return make_number(-child->value);
      auto n = std::make_shared<ExprNode>();
      n->op = ExprOp::neg;
      n->args = {std::move(child)};
      return n;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    ExprPtr exponent = parse_unary();
    auto folded = constant_fold(exponent);
    if (!folded) {
      throw ParseError(at, "constant exponent", "expression with variables");
    }
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::pow;
    n->value = *folded;
    n->args = {std::move(base)};
    return n;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (eof()) throw error("expression", "end of input");
    const char c = peek();
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      if (!accept(')')) throw error("')'", found_here());
      return e;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return parse_identifier();
    throw error("expression", found_here());
  }

  ExprPtr parse_number() {
    double v = 0.0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc()) throw error("number", found_here());
    pos_ = static_cast<std::size_t>(p - s_.data());
    return make_number(v);
  }

  ExprPtr parse_identifier() {
    const std::size_t start = pos_;
    while (!eof() && ((peek() >= 'a' && peek() <= 'z') || (peek() >= 'A' && peek() <= 'Z') ||
                      (peek() >= '0' && peek() <= '9'))) {
      ++pos_;
    }
    std::string ident(s_.substr(start, pos_ - start));
    if (ident.size() > 1 && ident[0] == 'x' &&
        ident.find_first_not_of("0123456789", 1) == std::string::npos) {
      long idx = std::strtol(ident.c_str() + 1, nullptr, 10);
      if (idx < 1 || idx > 255) {
        throw ParseError(start, "variable index between 1 and 255", ident);
      }
      auto n = std::make_shared<ExprNode>();
      n->op = ExprOp::variable;
      n->var = static_cast<int>(idx - 1);
      return n;
    }
    const int arity = call_arity(ident);
    if (arity < 0) throw ParseError(start, "function name or variable", ident);
    if (!accept('(')) throw error("'('", found_here());
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::call;
    n->fn = ident;
    n->args.push_back(parse_expr());
    for (int i = 1; i < arity; ++i) {
      if (!accept(',')) throw error("','", found_here());
      n->args.push_back(parse_expr());
    }
    if (!accept(')')) throw error("')'", found_here());
    return n;
  }
};

std::string format_number(double v) {
  std::array<char, 32> buf;
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

// precedence levels used for printing
constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecNeg = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

int print_precedence(const ExprNode& e) {
  switch (e.op) {
    case ExprOp::add:
    case ExprOp::sub:
      return kPrecAdd;
    case ExprOp::mul:
    case ExprOp::div:
      return kPrecMul;
    case ExprOp::neg:
      return kPrecNeg;
    case ExprOp::pow:
      return kPrecPow;
    case ExprOp::number:
      // a negative literal re-parses through unary minus
      return e.value < 0.0 ? kPrecNeg : kPrecAtom;
    default:
      return kPrecAtom;
  }
}

void print_node(const ExprNode& e, int context, std::string& out);

void print_child(const ExprPtr& e, int context, std::string& out) {
  if (print_precedence(*e) < context) {
    out += '(';
    print_node(*e, 0, out);
    out += ')';
  } else {
    print_node(*e, context, out);
  }
}

void print_node(const ExprNode& e, int, std::string& out) {
  switch (e.op) {
    case ExprOp::number:
      out += format_number(e.value);
      return;
    case ExprOp::variable:
      out += 'x';
      out += std::to_string(e.var + 1);
      return;
    case ExprOp::add:
      print_child(e.args[0], kPrecAdd, out);
      out += '+';
      print_child(e.args[1], kPrecAdd + 1, out);
      return;
    case ExprOp::sub:
      print_child(e.args[0], kPrecAdd, out);
      out += '-';
      print_child(e.args[1], kPrecAdd + 1, out);
      return;
    case ExprOp::mul:
      print_child(e.args[0], kPrecMul, out);
      out += '*';
      print_child(e.args[1], kPrecMul + 1, out);
      return;
    case ExprOp::div:
      print_child(e.args[0], kPrecMul, out);
      out += '/';
      print_child(e.args[1], kPrecMul + 1, out);
      return;
    case ExprOp::neg:
      out += '-';
      print_child(e.args[0], kPrecNeg, out);
      return;
    case ExprOp::pow:
      print_child(e.args[0], kPrecAtom, out);
      out += '^';
      out += format_number(e.value);
      return;
    case ExprOp::call:
      out += e.fn;
      out += '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ',';
        print_node(*e.args[i], 0, out);
      }
      out += ')';
      return;
  }
}

Jet2 eval_node(const ExprNode& e, std::span<const double> x, int dim) {
  switch (e.op) {
    case ExprOp::number:
      return Jet2::constant(dim, e.value);
    case ExprOp::variable:
      return Jet2::variable(dim, e.var, x[static_cast<std::size_t>(e.var)]);
    case ExprOp::add:
      return eval_node(*e.args[0], x, dim) + eval_node(*e.args[1], x, dim);
    case ExprOp::sub:
      return eval_node(*e.args[0], x, dim) - eval_node(*e.args[1], x, dim);
    case ExprOp::mul:
      return eval_node(*e.args[0], x, dim) * eval_node(*e.args[1], x, dim);
    case ExprOp::div:
      return eval_node(*e.args[0], x, dim) / eval_node(*e.args[1], x, dim);
    case ExprOp::neg:
      return -eval_node(*e.args[0], x, dim);
    case ExprOp::pow:
      return pow(eval_node(*e.args[0], x, dim), e.value);
    case ExprOp::call: {
      Jet2 a = eval_node(*e.args[0], x, dim);
      if (e.fn == "sin") return sin(a);
      if (e.fn == "cos") return cos(a);
      if (e.fn == "tan") return tan(a);
      if (e.fn == "atan") return atan(a);
      if (e.fn == "exp") return exp(a);
      if (e.fn == "log") return log(a);
      if (e.fn == "sqrt") return sqrt(a);
      return atan2(a, eval_node(*e.args[1], x, dim));
    }
  }
  throw std::logic_error("unreachable expression node");
}

// Walks values only, reporting points where the jet would be undefined or
// numerically untrustworthy. Returns false when the point is excluded.
bool value_walk(const ExprNode& e, std::span<const double> x, double& out) {
  switch (e.op) {
    case ExprOp::number:
      out = e.value;
      return true;
    case ExprOp::variable:
      out = x[static_cast<std::size_t>(e.var)];
      return true;
    case ExprOp::add:
    case ExprOp::sub:
    case ExprOp::mul:
    case ExprOp::div: {
      double a = 0.0, b = 0.0;
      if (!value_walk(*e.args[0], x, a) || !value_walk(*e.args[1], x, b)) return false;
      switch (e.op) {
        case ExprOp::add: out = a + b; break;
        case ExprOp::sub: out = a - b; break;
        case ExprOp::mul: out = a * b; break;
        default:
          if (std::abs(b) < 1e-8) return false;
          out = a / b;
          break;
      }
      return std::isfinite(out);
    }
    case ExprOp::neg: {
      double a = 0.0;
      if (!value_walk(*e.args[0], x, a)) return false;
      out = -a;
      return true;
    }
    case ExprOp::pow: {
      double a = 0.0;
      if (!value_walk(*e.args[0], x, a)) return false;
      const double r = e.value;
      if (r == std::round(r)) {
        if (r < 0.0 && std::abs(a) < 1e-8) return false;
      } else if (a < 1e-8) {
        return false;
      }
      out = std::pow(a, r);
      return std::isfinite(out);
    }
    case ExprOp::call: {
      double a = 0.0;
      if (!value_walk(*e.args[0], x, a)) return false;
      if (e.fn == "sin") { out = std::sin(a); return true; }
      if (e.fn == "cos") { out = std::cos(a); return true; }
      if (e.fn == "atan") { out = std::atan(a); return true; }
      if (e.fn == "tan") {
        if (std::abs(std::cos(a)) < 1e-6) return false;
        out = std::tan(a);
        return true;
      }
      if (e.fn == "exp") {
        out = std::exp(a);
        return std::isfinite(out);
      }
      if (e.fn == "log") {
        if (a < 1e-8) return false;
        out = std::log(a);
        return true;
      }
      if (e.fn == "sqrt") {
        if (a < 1e-8) return false;
        out = std::sqrt(a);
        return true;
      }
      double b = 0.0;
      if (!value_walk(*e.args[1], x, b)) return false;
      if (a * a + b * b < 1e-12) return false;
      out = std::atan2(a, b);
      return true;
    }
  }
  return false;
}

int max_var(const ExprNode& e) {
  int m = -1;
  if (e.op == ExprOp::variable) m = e.var;
  for (const ExprPtr& a : e.args) m = std::max(m, max_var(*a));
  return m;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).run(); }

int min_dimension(const ExprPtr& e) { return std::max(1, max_var(*e) + 1); }

std::string pretty_print(const ExprPtr& e) {
  std::string out;
  print_node(*e, 0, out);
  return out;
}

Jet2 eval_expression(const ExprPtr& e, std::span<const double> x) {
  return eval_node(*e, x, static_cast<int>(x.size()));
}

bool expression_excluded(const ExprPtr& e, std::span<const double> x) {
  double v = 0.0;
  return !value_walk(*e, x, v);
}

ScalarField expression_field(const ExprPtr& e, int dim, std::string name) {
  if (dim < min_dimension(e)) {
    throw std::invalid_argument("expression uses variables beyond the field dimension");
  }
  if (name.empty()) name = "expr:" + pretty_print(e);
  return ScalarField(
      dim, std::move(name),
      [e](std::span<const double> x) { return eval_expression(e, x); },
      [e](std::span<const double> x) { return expression_excluded(e, x); });
}

ScalarField expression_field(std::string_view text, int dim) {
  ExprPtr e = parse_expression(text);
  return expression_field(e, dim < 0 ? min_dimension(e) : dim);
}

}  // namespace minsurf
