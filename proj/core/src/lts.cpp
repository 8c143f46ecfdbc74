#include "stsub/lts.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace stsub {

TypeLts build_lts(const TypeRef& t, Budget* budget) {
  TypeLts out;
  std::unordered_map<TypeRef, std::uint32_t, TypeStructHash, TypeStructEq> ids;

  const auto intern = [&](const TypeRef& raw) -> std::uint32_t {
    TypeRef canon = unfold_top(raw);
    auto it = ids.find(canon);
    if (it != ids.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(out.states.size());
    ids.emplace(canon, id);
    out.states.push_back(std::move(canon));
    out.lts.adj.emplace_back();
    return id;
  };

  std::deque<std::uint32_t> work;
  out.lts.initial = intern(t);
  work.push_back(out.lts.initial);

  std::vector<bool> expanded;
  while (!work.empty()) {
    budget_tick(budget);
    const std::uint32_t id = work.front();
    work.pop_front();
    if (id < expanded.size() && expanded[id]) continue;
    if (expanded.size() <= id) expanded.resize(id + 1, false);
    expanded[id] = true;

    const TypeRef state = out.states[id];
    const auto* c = state->as_choice();
    if (!c) continue;  // end: no outgoing edges
    for (std::size_t i = 0; i < c->branches.size(); ++i) {
      const std::uint32_t succ = intern(c->branches[i].body);
      out.lts.adj[id].push_back({branch_action(*c, i), succ});
      if (succ >= expanded.size() || !expanded[succ]) work.push_back(succ);
    }
  }
  return out;
}

bool Alphabet::contains(const Action& a) const {
  return std::binary_search(actions.begin(), actions.end(), a);
}

namespace {

void collect_actions(const TypeRef& t, std::vector<Action>& out) {
  if (const auto* r = t->as_rec()) {
    collect_actions(r->body, out);
  } else if (const auto* c = t->as_choice()) {
    for (std::size_t i = 0; i < c->branches.size(); ++i) {
      out.push_back(branch_action(*c, i));
      collect_actions(c->branches[i].body, out);
    }
  }
}

Alphabet normalise(std::vector<Action> actions) {
  std::sort(actions.begin(), actions.end());
  actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  return Alphabet{std::move(actions)};
}

}  // namespace

Alphabet actions_of(const TypeRef& t) {
  std::vector<Action> actions;
  collect_actions(t, actions);
  return normalise(std::move(actions));
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
  std::vector<Action> actions = a.actions;
  actions.insert(actions.end(), b.actions.begin(), b.actions.end());
  return normalise(std::move(actions));
}

Alphabet check_alphabet(const TypeRef& t, const TypeRef& u) {
  return alphabet_union(actions_of(t), actions_of(u));
}

std::vector<Action> complement(const Alphabet& alpha, const std::vector<Action>& acts) {
  std::vector<Action> out;
  for (const Action& a : alpha.actions)
    if (std::find(acts.begin(), acts.end(), a) == acts.end()) out.push_back(a);
  return out;
}

}  // namespace stsub
