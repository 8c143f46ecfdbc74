#include "stsub/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "stsub/parse.hpp"

namespace stsub {

FormulaRef f_true() {
  static const FormulaRef instance = std::make_shared<const Formula>(Formula::True{});
  return instance;
}

FormulaRef f_false() {
  static const FormulaRef instance = std::make_shared<const Formula>(Formula::False{});
  return instance;
}

FormulaRef f_and(FormulaRef lhs, FormulaRef rhs) {
  return std::make_shared<const Formula>(Formula::And{std::move(lhs), std::move(rhs)});
}

FormulaRef f_or(FormulaRef lhs, FormulaRef rhs) {
  return std::make_shared<const Formula>(Formula::Or{std::move(lhs), std::move(rhs)});
}

FormulaRef f_box(Action act, FormulaRef body) {
  return std::make_shared<const Formula>(Formula::Box{std::move(act), std::move(body)});
}

FormulaRef f_diamond(Action act, FormulaRef body) {
  return std::make_shared<const Formula>(Formula::Diamond{std::move(act), std::move(body)});
}

FormulaRef f_nu(std::string var, FormulaRef body) {
  return std::make_shared<const Formula>(Formula::Nu{std::move(var), std::move(body)});
}

FormulaRef f_fvar(std::string name) {
  return std::make_shared<const Formula>(Formula::FVar{std::move(name)});
}

FormulaRef and_all(std::vector<FormulaRef> parts) {
  if (parts.empty()) return f_true();
  FormulaRef acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    acc = f_and(parts[i], std::move(acc));
  return acc;
}

FormulaRef or_all(std::vector<FormulaRef> parts) {
  if (parts.empty()) return f_false();
  FormulaRef acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    acc = f_or(parts[i], std::move(acc));
  return acc;
}

FormulaRef box_all(const std::vector<Action>& actions, const FormulaRef& body) {
  std::vector<FormulaRef> parts;
  parts.reserve(actions.size());
  for (const Action& a : actions) parts.push_back(f_box(a, body));
  return and_all(std::move(parts));
}

bool formula_equal(const FormulaRef& a, const FormulaRef& b) {
  if (a.get() == b.get()) return true;
  if (a->node().index() != b->node().index()) return false;
  if (a->as_true() || a->as_false()) return true;
  if (const auto* x = a->as_and()) {
    const auto* y = b->as_and();
    return formula_equal(x->lhs, y->lhs) && formula_equal(x->rhs, y->rhs);
  }
  if (const auto* x = a->as_or()) {
    const auto* y = b->as_or();
    return formula_equal(x->lhs, y->lhs) && formula_equal(x->rhs, y->rhs);
  }
  if (const auto* x = a->as_box()) {
    const auto* y = b->as_box();
    return x->act == y->act && formula_equal(x->body, y->body);
  }
  if (const auto* x = a->as_diamond()) {
    const auto* y = b->as_diamond();
    return x->act == y->act && formula_equal(x->body, y->body);
  }
  if (const auto* x = a->as_nu()) {
    const auto* y = b->as_nu();
    return x->var == y->var && formula_equal(x->body, y->body);
  }
  return a->as_fvar()->name == b->as_fvar()->name;
}

std::size_t formula_size(const FormulaRef& phi) {
  if (const auto* x = phi->as_and()) return 1 + formula_size(x->lhs) + formula_size(x->rhs);
  if (const auto* x = phi->as_or()) return 1 + formula_size(x->lhs) + formula_size(x->rhs);
  if (const auto* x = phi->as_box()) return 1 + formula_size(x->body);
  if (const auto* x = phi->as_diamond()) return 1 + formula_size(x->body);
  if (const auto* x = phi->as_nu()) return 1 + formula_size(x->body);
  return 1;
}

namespace {

void collect_formula_free(const FormulaRef& phi, std::vector<std::string>& bound,
                          std::vector<std::string>& out) {
  if (const auto* x = phi->as_fvar()) {
    if (std::find(bound.begin(), bound.end(), x->name) == bound.end() &&
        std::find(out.begin(), out.end(), x->name) == out.end())
      out.push_back(x->name);
  } else if (const auto* x = phi->as_and()) {
    collect_formula_free(x->lhs, bound, out);
    collect_formula_free(x->rhs, bound, out);
  } else if (const auto* x = phi->as_or()) {
    collect_formula_free(x->lhs, bound, out);
    collect_formula_free(x->rhs, bound, out);
  } else if (const auto* x = phi->as_box()) {
    collect_formula_free(x->body, bound, out);
  } else if (const auto* x = phi->as_diamond()) {
    collect_formula_free(x->body, bound, out);
  } else if (const auto* x = phi->as_nu()) {
    bound.push_back(x->var);
    collect_formula_free(x->body, bound, out);
    bound.pop_back();
  }
}

void collect_binders(const FormulaRef& phi, std::vector<std::string>& out) {
  if (const auto* x = phi->as_and()) {
    collect_binders(x->lhs, out);
    collect_binders(x->rhs, out);
  } else if (const auto* x = phi->as_or()) {
    collect_binders(x->lhs, out);
    collect_binders(x->rhs, out);
  } else if (const auto* x = phi->as_box()) {
    collect_binders(x->body, out);
  } else if (const auto* x = phi->as_diamond()) {
    collect_binders(x->body, out);
  } else if (const auto* x = phi->as_nu()) {
    out.push_back(x->var);
    collect_binders(x->body, out);
  }
}

}  // namespace

std::vector<std::string> formula_free_vars(const FormulaRef& phi) {
  std::vector<std::string> bound, out;
  collect_formula_free(phi, bound, out);
  return out;
}

std::vector<std::string> formula_binders(const FormulaRef& phi) {
  std::vector<std::string> out;
  collect_binders(phi, out);
  return out;
}

FormulaRef dual_formula(const FormulaRef& phi) {
  if (const auto* x = phi->as_and()) return f_and(dual_formula(x->lhs), dual_formula(x->rhs));
  if (const auto* x = phi->as_or()) return f_or(dual_formula(x->lhs), dual_formula(x->rhs));
  if (const auto* x = phi->as_box()) return f_box(dual(x->act), dual_formula(x->body));
  if (const auto* x = phi->as_diamond())
    return f_diamond(dual(x->act), dual_formula(x->body));
  if (const auto* x = phi->as_nu()) return f_nu(x->var, dual_formula(x->body));
  return phi;  // tt, ff, variables
}

FormulaRef substitute(const FormulaRef& phi, const std::string& var,
                      const FormulaRef& replacement) {
  if (const auto* x = phi->as_fvar()) return x->name == var ? replacement : phi;
  if (const auto* x = phi->as_and()) {
    FormulaRef l = substitute(x->lhs, var, replacement);
    FormulaRef r = substitute(x->rhs, var, replacement);
    return l.get() == x->lhs.get() && r.get() == x->rhs.get() ? phi : f_and(l, r);
  }
  if (const auto* x = phi->as_or()) {
    FormulaRef l = substitute(x->lhs, var, replacement);
    FormulaRef r = substitute(x->rhs, var, replacement);
    return l.get() == x->lhs.get() && r.get() == x->rhs.get() ? phi : f_or(l, r);
  }
  if (const auto* x = phi->as_box()) {
    FormulaRef b = substitute(x->body, var, replacement);
    return b.get() == x->body.get() ? phi : f_box(x->act, b);
  }
  if (const auto* x = phi->as_diamond()) {
    FormulaRef b = substitute(x->body, var, replacement);
    return b.get() == x->body.get() ? phi : f_diamond(x->act, b);
  }
  if (const auto* x = phi->as_nu()) {
    if (x->var == var) return phi;  // shadowed
    FormulaRef b = substitute(x->body, var, replacement);
    return b.get() == x->body.get() ? phi : f_nu(x->var, b);
  }
  return phi;
}

FormulaRef approximate(const FormulaRef& phi, std::size_t n) {
  const auto* nu = phi->as_nu();
  if (!nu) throw std::invalid_argument("approximate: formula is not a nu node");
  if (n == 0) return f_true();
  return substitute(nu->body, nu->var, approximate(phi, n - 1));
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence, loosest to tightest: nu, ||, &&, modalities/atoms.
enum Prec { kNu = 0, kOr = 1, kAnd = 2, kUnary = 3 };

Prec prec_of(const Formula& f) {
  if (f.as_nu()) return kNu;
  if (f.as_or()) return kOr;
  if (f.as_and()) return kAnd;
  return kUnary;
}

std::string mcrl2_action(const Action& a) {
  switch (a.dir) {
    case Dir::Send: return "snd_" + a.label;
    case Dir::Recv: return "rcv_" + a.label;
    case Dir::Bare: return "act_" + a.label;
  }
  return a.label;
}

struct Printer {
  FormulaStyle style;
  std::string out;

  void atom(const FormulaRef& phi, Prec min_prec) {
    if (prec_of(*phi) < min_prec) {
      out += "(";
      go(phi);
      out += ")";
    } else {
      go(phi);
    }
  }

  void go(const FormulaRef& phi) {
    if (phi->as_true()) {
      out += style == FormulaStyle::Native ? "tt" : "true";
    } else if (phi->as_false()) {
      out += style == FormulaStyle::Native ? "ff" : "false";
    } else if (const auto* x = phi->as_and()) {
      atom(x->lhs, static_cast<Prec>(kAnd + 1));
      out += " && ";
      atom(x->rhs, kAnd);  // right-nested chains print flat
    } else if (const auto* x = phi->as_or()) {
      atom(x->lhs, static_cast<Prec>(kOr + 1));
      out += " || ";
      atom(x->rhs, kOr);
    } else if (const auto* x = phi->as_box()) {
      out += "[";
      out += style == FormulaStyle::Native ? to_string(x->act) : mcrl2_action(x->act);
      out += "]";
      atom(x->body, kUnary);
    } else if (const auto* x = phi->as_diamond()) {
      out += "<";
      out += style == FormulaStyle::Native ? to_string(x->act) : mcrl2_action(x->act);
      out += ">";
      atom(x->body, kUnary);
    } else if (const auto* x = phi->as_nu()) {
      out += "nu ";
      out += style == FormulaStyle::Native ? x->var : "X" + x->var;
      out += " . ";
      go(x->body);
    } else {
      const auto* v = phi->as_fvar();
      out += style == FormulaStyle::Native ? v->name : "X" + v->name;
    }
  }
};

}  // namespace

std::string print_formula(const FormulaRef& phi, FormulaStyle style) {
  Printer p{style, {}};
  p.go(phi);
  return p.out;
}

// ---------------------------------------------------------------------------
// Parsing (native style)
// ---------------------------------------------------------------------------

namespace {

class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  FormulaRef parse() {
    FormulaRef f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after formula");
    return f;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool try_string(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) != s) return false;
    for (std::size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string word() {
    skip_ws();
    std::string w;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      w += text_[pos_];
      advance();
    }
    if (w.empty()) fail("expected identifier");
    return w;
  }

  Action action() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected action");
    if (text_[pos_] == '!') {
      advance();
      return Action{Dir::Send, word()};
    }
    if (text_[pos_] == '?') {
      advance();
      return Action{Dir::Recv, word()};
    }
    return Action{Dir::Bare, word()};
  }

  FormulaRef formula() {
    if (consume_nu_keyword()) {
      std::string var = word();
      expect('.');
      return f_nu(std::move(var), formula());
    }
    return or_level();
  }

  bool consume_nu_keyword() {
    skip_ws();
    if (text_.substr(pos_, 2) != "nu") return false;
    const std::size_t after = pos_ + 2;
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
      return false;  // an identifier that merely starts with "nu"
    advance();
    advance();
    return true;
  }

  FormulaRef or_level() {
    FormulaRef lhs = and_level();
    if (try_string("||")) return f_or(std::move(lhs), or_level());
    return lhs;
  }

  FormulaRef and_level() {
    FormulaRef lhs = unary();
    if (try_string("&&")) return f_and(std::move(lhs), and_level());
    return lhs;
  }

  FormulaRef unary() {
    if (peek_is('[')) {
      advance();
      Action a = action();
      expect(']');
      return f_box(std::move(a), unary());
    }
    if (peek_is('<')) {
      advance();
      Action a = action();
      expect('>');
      return f_diamond(std::move(a), unary());
    }
    if (peek_is('(')) {
      advance();
      FormulaRef f = formula();
      expect(')');
      return f;
    }
    std::string w = word();
    if (w == "tt") return f_true();
    if (w == "ff") return f_false();
    if (w == "nu") fail("'nu' needs a variable and a body");
    return f_fvar(std::move(w));
  }
};

}  // namespace

FormulaRef parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

}  // namespace stsub
