#include "stsub/modelcheck.hpp"

#include <cassert>
#include <stdexcept>

namespace stsub {

namespace {

struct Evaluator {
  const Lts& lts;
  Budget* budget;
  std::vector<std::pair<const std::string*, StateSet>> env;

  const StateSet* lookup(const std::string& name) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (*it->first == name) return &it->second;
    return nullptr;
  }

  StateSet eval(const FormulaRef& phi) {
    budget_tick(budget);
    const std::size_t n = lts.num_states();

    if (phi->as_true()) return StateSet::all(n);
    if (phi->as_false()) return StateSet::none(n);
    if (const auto* x = phi->as_and()) {
      StateSet l = eval(x->lhs);
      l &= eval(x->rhs);
      return l;
    }
    if (const auto* x = phi->as_or()) {
      StateSet l = eval(x->lhs);
      l |= eval(x->rhs);
      return l;
    }
    if (const auto* x = phi->as_box()) {
      const StateSet body = eval(x->body);
      StateSet out = StateSet::none(n);
      for (std::size_t s = 0; s < n; ++s) {
        const auto succ = lts.step(static_cast<std::uint32_t>(s), x->act);
        out.set(s, !succ || body.test(*succ));
      }
      return out;
    }
    if (const auto* x = phi->as_diamond()) {
      const StateSet body = eval(x->body);
      StateSet out = StateSet::none(n);
      for (std::size_t s = 0; s < n; ++s) {
        const auto succ = lts.step(static_cast<std::uint32_t>(s), x->act);
        out.set(s, succ && body.test(*succ));
      }
      return out;
    }
    if (const auto* x = phi->as_nu()) {
      StateSet current = StateSet::all(n);
      env.emplace_back(&x->var, current);
      for (;;) {
        budget_tick(budget);
        StateSet next = eval(x->body);
        assert(next.subset_of(current));
        if (next == current) break;
        current = next;
        env.back().second = current;
      }
      env.pop_back();
      return current;
    }
    const auto* v = phi->as_fvar();
    const StateSet* bound = lookup(v->name);
    if (!bound)
      throw std::invalid_argument("eval_states: unbound variable '" + v->name + "'");
    return *bound;
  }
};

}  // namespace

StateSet eval_states(const Lts& lts, const FormulaRef& phi, const VarEnv& env,
                     Budget* budget) {
  Evaluator ev{lts, budget, {}};
  for (const auto& [name, set] : env) {
    if (set.size() != lts.num_states())
      throw std::invalid_argument("eval_states: env set size mismatch");
    ev.env.emplace_back(&name, set);
  }
  return ev.eval(phi);
}

bool models(const Lts& lts, const FormulaRef& phi, Budget* budget) {
  return eval_states(lts, phi, {}, budget).test(lts.initial);
}

}  // namespace stsub
