#include "stsub/type.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stsub {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t str_hash(const std::string& s) {
  return std::hash<std::string>{}(s);
}

}  // namespace

Dir dual(Dir d) {
  switch (d) {
    case Dir::Send: return Dir::Recv;
    case Dir::Recv: return Dir::Send;
    case Dir::Bare: return Dir::Bare;
  }
  return Dir::Bare;
}

bool operator<(const Action& a, const Action& b) {
  if (a.label != b.label) return a.label < b.label;
  return static_cast<int>(a.dir) < static_cast<int>(b.dir);
}

Action dual(const Action& a) { return Action{dual(a.dir), a.label}; }

std::string to_string(const Action& a) {
  switch (a.dir) {
    case Dir::Send: return "!" + a.label;
    case Dir::Recv: return "?" + a.label;
    case Dir::Bare: return a.label;
  }
  return a.label;
}

std::size_t ActionHash::operator()(const Action& a) const noexcept {
  return mix(static_cast<std::uint64_t>(a.dir) + 1, str_hash(a.label));
}

ChoiceKind dual(ChoiceKind k) {
  return k == ChoiceKind::Internal ? ChoiceKind::External : ChoiceKind::Internal;
}

Dir dir_of(ChoiceKind k) {
  return k == ChoiceKind::Internal ? Dir::Send : Dir::Recv;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

TypeRef t_end() {
  static const TypeRef instance =
      std::make_shared<const SessionType>(SessionType::End{});
  return instance;
}

TypeRef t_var(std::string name) {
  return std::make_shared<const SessionType>(SessionType::Var{std::move(name)});
}

TypeRef t_rec(std::string var, TypeRef body) {
  if (!body) throw std::invalid_argument("t_rec: null body");
  return std::make_shared<const SessionType>(
      SessionType::Rec{std::move(var), std::move(body)});
}

TypeRef t_choice(ChoiceKind kind, std::vector<Branch> branches) {
  for (const Branch& b : branches)
    if (!b.body) throw std::invalid_argument("t_choice: null branch body");
  std::vector<std::uint32_t> order(branches.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return branches[a].label < branches[b].label;
  });
  return std::make_shared<const SessionType>(
      SessionType::Choice{kind, std::move(branches), std::move(order)});
}

TypeRef t_send(Label label, TypeRef cont) {
  return t_choice(ChoiceKind::Internal, {{std::move(label), std::move(cont)}});
}

TypeRef t_recv(Label label, TypeRef cont) {
  return t_choice(ChoiceKind::External, {{std::move(label), std::move(cont)}});
}

Action branch_action(const SessionType::Choice& c, std::size_t i) {
  return Action{dir_of(c.kind), c.branches[i].label};
}

// ---------------------------------------------------------------------------
// Hashing and equality
// ---------------------------------------------------------------------------

std::uint64_t struct_hash(const TypeRef& t) {
  std::uint64_t cached = t->hash_.load(std::memory_order_relaxed);
  if (cached != 0) return cached;

  std::uint64_t h = 0;
  if (t->as_end()) {
    h = 0x5u;
  } else if (const auto* v = t->as_var()) {
    h = mix(0x11u, str_hash(v->name));
  } else if (const auto* r = t->as_rec()) {
    h = mix(mix(0x23u, str_hash(r->var)), struct_hash(r->body));
  } else {
    const auto& c = *t->as_choice();
    h = mix(0x47u, static_cast<std::uint64_t>(c.kind));
    for (std::uint32_t idx : c.by_label) {
      h = mix(h, str_hash(c.branches[idx].label));
      h = mix(h, struct_hash(c.branches[idx].body));
    }
  }
  if (h == 0) h = 1;
  t->hash_.store(h, std::memory_order_relaxed);
  return h;
}

bool structurally_equal(const TypeRef& a, const TypeRef& b) {
  if (a.get() == b.get()) return true;
  if (struct_hash(a) != struct_hash(b)) return false;
  if (a->node().index() != b->node().index()) return false;

  if (a->as_end()) return true;
  if (const auto* va = a->as_var()) return va->name == b->as_var()->name;
  if (const auto* ra = a->as_rec()) {
    const auto* rb = b->as_rec();
    return ra->var == rb->var && structurally_equal(ra->body, rb->body);
  }
  const auto& ca = *a->as_choice();
  const auto& cb = *b->as_choice();
  if (ca.kind != cb.kind || ca.branches.size() != cb.branches.size()) return false;
  for (std::size_t i = 0; i < ca.by_label.size(); ++i) {
    const Branch& x = ca.branches[ca.by_label[i]];
    const Branch& y = cb.branches[cb.by_label[i]];
    if (x.label != y.label || !structurally_equal(x.body, y.body)) return false;
  }
  return true;
}

namespace {

bool alpha_equal_impl(const TypeRef& a, const TypeRef& b,
                      std::vector<std::pair<std::string, std::string>>& binders) {
  if (a->node().index() != b->node().index()) return false;
  if (a->as_end()) return true;
  if (const auto* va = a->as_var()) {
    const auto* vb = b->as_var();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      const bool la = it->first == va->name;
      const bool lb = it->second == vb->name;
      if (la || lb) return la && lb;  // both bound by the same binder
    }
    return va->name == vb->name;  // both free
  }
  if (const auto* ra = a->as_rec()) {
    const auto* rb = b->as_rec();
    binders.emplace_back(ra->var, rb->var);
    const bool ok = alpha_equal_impl(ra->body, rb->body, binders);
    binders.pop_back();
    return ok;
  }
  const auto& ca = *a->as_choice();
  const auto& cb = *b->as_choice();
  if (ca.kind != cb.kind || ca.branches.size() != cb.branches.size()) return false;
  for (std::size_t i = 0; i < ca.by_label.size(); ++i) {
    const Branch& x = ca.branches[ca.by_label[i]];
    const Branch& y = cb.branches[cb.by_label[i]];
    if (x.label != y.label) return false;
    if (!alpha_equal_impl(x.body, y.body, binders)) return false;
  }
  return true;
}

}  // namespace

bool alpha_equal(const TypeRef& a, const TypeRef& b) {
  std::vector<std::pair<std::string, std::string>> binders;
  return alpha_equal_impl(a, b, binders);
}

// ---------------------------------------------------------------------------
// Variables and substitution
// ---------------------------------------------------------------------------

namespace {

void collect_free(const TypeRef& t, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  if (const auto* v = t->as_var()) {
    if (std::find(bound.begin(), bound.end(), v->name) == bound.end() &&
        std::find(out.begin(), out.end(), v->name) == out.end())
      out.push_back(v->name);
  } else if (const auto* r = t->as_rec()) {
    bound.push_back(r->var);
    collect_free(r->body, bound, out);
    bound.pop_back();
  } else if (const auto* c = t->as_choice()) {
    for (const Branch& b : c->branches) collect_free(b.body, bound, out);
  }
}

}  // namespace

std::vector<std::string> free_vars(const TypeRef& t) {
  std::vector<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

bool is_closed(const TypeRef& t) { return free_vars(t).empty(); }

std::uint64_t varocc(const TypeRef& t, const std::string& var) {
  if (const auto* v = t->as_var()) return v->name == var ? 1 : 0;
  if (const auto* r = t->as_rec())
    return r->var == var ? 0 : varocc(r->body, var);
  if (const auto* c = t->as_choice()) {
    std::uint64_t n = 0;
    for (const Branch& b : c->branches) n += varocc(b.body, var);
    return n;
  }
  return 0;
}

TypeRef substitute(const TypeRef& t, const std::string& var, const TypeRef& replacement) {
  if (const auto* v = t->as_var()) return v->name == var ? replacement : t;
  if (const auto* r = t->as_rec()) {
    if (r->var == var) return t;  // shadowed
    TypeRef body = substitute(r->body, var, replacement);
    return body.get() == r->body.get() ? t : t_rec(r->var, std::move(body));
  }
  if (const auto* c = t->as_choice()) {
    bool changed = false;
    std::vector<Branch> branches;
    branches.reserve(c->branches.size());
    for (const Branch& b : c->branches) {
      TypeRef body = substitute(b.body, var, replacement);
      changed |= body.get() != b.body.get();
      branches.push_back({b.label, std::move(body)});
    }
    return changed ? t_choice(c->kind, std::move(branches)) : t;
  }
  return t;
}

TypeRef unfold_once(const TypeRef& t) {
  if (const auto* r = t->as_rec()) return substitute(r->body, r->var, t);
  return t;
}

TypeRef unfold_top(const TypeRef& t) {
  TypeRef cur = t;
  while (cur->as_rec()) cur = unfold_once(cur);
  return cur;
}

TypeRef dual_type(const TypeRef& t) {
  if (const auto* r = t->as_rec()) {
    TypeRef body = dual_type(r->body);
    return body.get() == r->body.get() ? t : t_rec(r->var, std::move(body));
  }
  if (const auto* c = t->as_choice()) {
    std::vector<Branch> branches;
    branches.reserve(c->branches.size());
    for (const Branch& b : c->branches) branches.push_back({b.label, dual_type(b.body)});
    return t_choice(dual(c->kind), std::move(branches));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Size metrics
// ---------------------------------------------------------------------------

std::uint64_t nummsg(const TypeRef& t) {
  if (const auto* r = t->as_rec()) return nummsg(r->body);
  if (const auto* c = t->as_choice()) {
    std::uint64_t n = c->branches.size();
    for (const Branch& b : c->branches) n += nummsg(b.body);
    return n;
  }
  return 0;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(p);
}

}  // namespace

std::uint64_t unfold_measure(const TypeRef& t) {
  if (const auto* r = t->as_rec())
    return sat_mul(sat_add(1, varocc(r->body, r->var)), unfold_measure(r->body));
  if (const auto* c = t->as_choice()) {
    std::uint64_t n = c->branches.size();
    for (const Branch& b : c->branches) n = sat_add(n, unfold_measure(b.body));
    return n;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::FreeVariable: return "free variable";
    case ViolationKind::DuplicateLabel: return "duplicate label";
    case ViolationKind::NonContractive: return "non-contractive recursion";
    case ViolationKind::EmptyChoice: return "empty choice";
  }
  return "?";
}

namespace {

struct ScopeEntry {
  std::string name;
  bool guarded;  // a choice node lies between the binder and here
};

void validate_impl(const TypeRef& t, bool require_closed,
                   std::vector<ScopeEntry>& scope, std::vector<Violation>& out) {
  if (const auto* v = t->as_var()) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->name == v->name) {
        if (!it->guarded)
          out.push_back({ViolationKind::NonContractive,
                         "variable '" + v->name + "' is not guarded by a choice"});
        return;
      }
    }
    if (require_closed)
      out.push_back({ViolationKind::FreeVariable, "free variable '" + v->name + "'"});
    return;
  }
  if (const auto* r = t->as_rec()) {
    scope.push_back({r->var, false});
    validate_impl(r->body, require_closed, scope, out);
    scope.pop_back();
    return;
  }
  if (const auto* c = t->as_choice()) {
    if (c->branches.empty())
      out.push_back({ViolationKind::EmptyChoice, "choice with no branches"});
    for (std::size_t i = 1; i < c->by_label.size(); ++i) {
      const Label& prev = c->branches[c->by_label[i - 1]].label;
      const Label& cur = c->branches[c->by_label[i]].label;
      if (prev == cur)
        out.push_back({ViolationKind::DuplicateLabel, "label '" + cur + "'"});
    }
    std::vector<ScopeEntry> inner = scope;
    for (ScopeEntry& e : inner) e.guarded = true;
    for (const Branch& b : c->branches) validate_impl(b.body, require_closed, inner, out);
    return;
  }
}

}  // namespace

std::vector<Violation> validate_type(const TypeRef& t, bool require_closed) {
  std::vector<Violation> out;
  std::vector<ScopeEntry> scope;
  validate_impl(t, require_closed, scope, out);
  return out;
}

// ---------------------------------------------------------------------------
// Alpha renaming
// ---------------------------------------------------------------------------

namespace {

struct Renamer {
  std::unordered_set<std::string> taken;  // all idents plus assigned binders

  std::string fresh(const std::string& base) {
    if (taken.insert(base).second) return base;
    for (int i = 1;; ++i) {
      std::string candidate = base + "_" + std::to_string(i);
      if (taken.insert(candidate).second) return candidate;
    }
  }

  TypeRef run(const TypeRef& t, std::vector<std::pair<std::string, std::string>>& scope) {
    if (const auto* v = t->as_var()) {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first == v->name)
          return it->second == v->name ? t : t_var(it->second);
      return t;  // free
    }
    if (const auto* r = t->as_rec()) {
      std::string name = fresh(r->var);
      scope.emplace_back(r->var, name);
      TypeRef body = run(r->body, scope);
      scope.pop_back();
      if (name == r->var && body.get() == r->body.get()) return t;
      return t_rec(std::move(name), std::move(body));
    }
    if (const auto* c = t->as_choice()) {
      bool changed = false;
      std::vector<Branch> branches;
      branches.reserve(c->branches.size());
      for (const Branch& b : c->branches) {
        TypeRef body = run(b.body, scope);
        changed |= body.get() != b.body.get();
        branches.push_back({b.label, std::move(body)});
      }
      return changed ? t_choice(c->kind, std::move(branches)) : t;
    }
    return t;
  }
};

}  // namespace

TypeRef alpha_rename_apart(const TypeRef& t) {
  Renamer renamer;
  // Free variables keep their names; seed the taken set with them so a
  // renamed binder can never alias one. Collisions with later original
  // binders resolve themselves because those binders are renamed in turn.
  for (const std::string& fv : free_vars(t)) renamer.taken.insert(fv);
  std::vector<std::pair<std::string, std::string>> scope;
  return renamer.run(t, scope);
}

}  // namespace stsub
