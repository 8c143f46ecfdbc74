#include "stsub/parse.hpp"

#include <cctype>
#include <sstream>

namespace stsub {

std::string ValidationError::describe(const std::vector<Violation>& vs) {
  std::ostringstream os;
  os << "invalid type:";
  for (const Violation& v : vs) os << " [" << to_string(v.kind) << ": " << v.detail << "]";
  return os.str();
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class TypeParser {
public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  TypeRef parse() {
    TypeRef t = parse_type();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after type");
    return t;
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
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
    std::string name;
    while (pos_ < text_.size() && ident_char(text_[pos_])) {
      name += text_[pos_];
      advance();
    }
    return name;
  }

  Branch branch(char prefix) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != prefix)
      fail(std::string("expected '") + prefix + "' branch");
    advance();
    std::string label = ident();
    expect('.');
    return Branch{std::move(label), parse_type()};
  }

  TypeRef braces(ChoiceKind kind, char prefix) {
    expect('{');
    std::vector<Branch> branches;
    branches.push_back(branch(prefix));
    while (try_consume(',')) branches.push_back(branch(prefix));
    expect('}');
    return t_choice(kind, std::move(branches));
  }

  TypeRef parse_type() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '+') {
      advance();
      return braces(ChoiceKind::Internal, '!');
    }
    if (c == '&') {
      advance();
      return braces(ChoiceKind::External, '?');
    }
    if (c == '!' || c == '?') {
      advance();
      std::string label = ident();
      expect('.');
      TypeRef cont = parse_type();
      return c == '!' ? t_send(std::move(label), std::move(cont))
                      : t_recv(std::move(label), std::move(cont));
    }
    if (ident_start(c)) {
      std::string word = ident();
      if (word == "end") return t_end();
      if (word == "rec") {
        std::string var = ident();
        if (var == "end" || var == "rec") fail("'" + var + "' is a keyword");
        expect('.');
        return t_rec(std::move(var), parse_type());
      }
      return t_var(std::move(word));
    }
    fail("expected a type");
  }
};

}  // namespace

TypeRef parse_type(std::string_view text) {
  TypeRef t = alpha_rename_apart(TypeParser(text).parse());
  std::vector<Violation> vs = validate_type(t, /*require_closed=*/false);
  if (!vs.empty()) throw ValidationError(std::move(vs));
  return t;
}

TypeRef parse_closed_type(std::string_view text) {
  TypeRef t = parse_type(text);
  std::vector<Violation> vs = validate_type(t, /*require_closed=*/true);
  if (!vs.empty()) throw ValidationError(std::move(vs));
  return t;
}

namespace {

void print_impl(const TypeRef& t, std::string& out) {
  if (t->as_end()) {
    out += "end";
    return;
  }
  if (const auto* v = t->as_var()) {
    out += v->name;
    return;
  }
  if (const auto* r = t->as_rec()) {
    out += "rec ";
    out += r->var;
    out += ".";
    print_impl(r->body, out);
    return;
  }
  const auto& c = *t->as_choice();
  const char prefix = c.kind == ChoiceKind::Internal ? '!' : '?';
  if (c.branches.size() == 1) {
    out += prefix;
    out += c.branches[0].label;
    out += ".";
    print_impl(c.branches[0].body, out);
    return;
  }
  out += c.kind == ChoiceKind::Internal ? "+{" : "&{";
  for (std::size_t i = 0; i < c.branches.size(); ++i) {
    if (i > 0) out += ", ";
    out += prefix;
    out += c.branches[i].label;
    out += ".";
    print_impl(c.branches[i].body, out);
  }
  out += "}";
}

}  // namespace

std::string print_type(const TypeRef& t) {
  std::string out;
  print_impl(t, out);
  return out;
}

}  // namespace stsub
