#include "stsub/charform.hpp"

#include <unordered_set>

#include "stsub/modelcheck.hpp"

namespace stsub {

Mode dual(Mode m) { return m == Mode::SubOf ? Mode::SupOf : Mode::SubOf; }

ChoiceKind mode_kind(Mode m) {
  return m == Mode::SubOf ? ChoiceKind::Internal : ChoiceKind::External;
}

namespace {

struct Builder {
  Mode mode;
  const Alphabet& alphabet;
  bool dummy;
  std::unordered_set<std::string> taken;  // rec binders of t, for fresh dummies
  int next_dummy = 0;

  std::string fresh_dummy() {
    for (;;) {
      std::string name = "_d" + std::to_string(next_dummy++);
      if (!taken.count(name)) return name;
    }
  }

  FormulaRef wrap(FormulaRef body) {
    return dummy ? f_nu(fresh_dummy(), std::move(body)) : std::move(body);
  }

  FormulaRef box(Action a, FormulaRef body) { return f_box(std::move(a), wrap(std::move(body))); }
  FormulaRef dia(Action a, FormulaRef body) {
    return f_diamond(std::move(a), wrap(std::move(body)));
  }

  FormulaRef box_set(const std::vector<Action>& actions, const FormulaRef& body) {
    std::vector<FormulaRef> parts;
    parts.reserve(actions.size());
    for (const Action& a : actions) parts.push_back(box(a, body));
    return and_all(std::move(parts));
  }

  FormulaRef go(const TypeRef& t) {
    if (t->as_end()) return box_set(alphabet.actions, f_false());
    if (const auto* v = t->as_var()) return f_fvar(v->name);
    if (const auto* r = t->as_rec()) return f_nu(r->var, go(r->body));

    const auto& c = *t->as_choice();
    std::vector<Action> acts;
    acts.reserve(c.branches.size());
    for (std::size_t i = 0; i < c.branches.size(); ++i) acts.push_back(branch_action(c, i));

    if (c.kind == mode_kind(mode)) {
      // Every branch is mandatory.
      std::vector<FormulaRef> parts;
      parts.reserve(c.branches.size());
      for (std::size_t i = 0; i < c.branches.size(); ++i)
        parts.push_back(dia(acts[i], go(c.branches[i].body)));
      return and_all(std::move(parts));
    }

    // Every branch is optional, at least one must exist, nothing else may.
    std::vector<FormulaRef> parts;
    parts.reserve(c.branches.size() + 2);
    for (std::size_t i = 0; i < c.branches.size(); ++i)
      parts.push_back(box(acts[i], go(c.branches[i].body)));
    std::vector<FormulaRef> dias;
    dias.reserve(c.branches.size());
    for (const Action& a : acts) dias.push_back(dia(a, f_true()));
    parts.push_back(or_all(std::move(dias)));
    parts.push_back(box_set(complement(alphabet, acts), f_false()));
    return and_all(std::move(parts));
  }
};

void collect_rec_binders(const TypeRef& t, std::unordered_set<std::string>& out) {
  if (const auto* r = t->as_rec()) {
    out.insert(r->var);
    collect_rec_binders(r->body, out);
  } else if (const auto* c = t->as_choice()) {
    for (const Branch& b : c->branches) collect_rec_binders(b.body, out);
  }
}

}  // namespace

FormulaRef char_formula(const TypeRef& t, Mode mode, const Alphabet& alphabet,
                        bool dummy_fixpoints) {
  Builder builder{mode, alphabet, dummy_fixpoints, {}, 0};
  if (dummy_fixpoints) collect_rec_binders(t, builder.taken);
  return builder.go(t);
}

bool subtype_cf_sub(const TypeRef& t, const TypeRef& u, Budget* budget,
                    bool dummy_fixpoints) {
  const Alphabet alpha = check_alphabet(t, u);
  const FormulaRef phi = char_formula(t, Mode::SubOf, alpha, dummy_fixpoints);
  const TypeLts model = build_lts(u, budget);
  return models(model.lts, phi, budget);
}

bool subtype_cf_sup(const TypeRef& t, const TypeRef& u, Budget* budget,
                    bool dummy_fixpoints) {
  const Alphabet alpha = check_alphabet(t, u);
  const FormulaRef phi = char_formula(u, Mode::SupOf, alpha, dummy_fixpoints);
  const TypeLts model = build_lts(t, budget);
  return models(model.lts, phi, budget);
}

}  // namespace stsub
