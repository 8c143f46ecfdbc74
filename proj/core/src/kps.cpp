#include "stsub/kps.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace stsub {

std::string to_string(const Constructor& c) {
  if (c.tag == Constructor::Tag::End) return "end";
  std::string out = c.kind == ChoiceKind::Internal ? "+{" : "&{";
  for (std::size_t i = 0; i < c.actions.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(c.actions[i]);
  }
  out += "}";
  return out;
}

bool constructor_leq(const Constructor& c1, const Constructor& c2) {
  if (c1.tag != c2.tag) return false;
  if (c1.tag == Constructor::Tag::End) return true;
  if (c1.kind != c2.kind) return false;
  const auto subset = [](const std::vector<Action>& a, const std::vector<Action>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  return c1.kind == ChoiceKind::Internal ? subset(c1.actions, c2.actions)
                                         : subset(c2.actions, c1.actions);
}

std::optional<std::uint32_t> TermAutomaton::step(std::uint32_t s, const Action& a) const {
  for (const auto& [act, to] : delta[s])
    if (act == a) return to;
  return std::nullopt;
}

TermAutomaton to_term_automaton(const TypeRef& t, Budget* budget) {
  const TypeLts tl = build_lts(t, budget);
  TermAutomaton out;
  out.initial = tl.lts.initial;
  out.labels.reserve(tl.states.size());
  out.delta.resize(tl.states.size());

  for (std::size_t s = 0; s < tl.states.size(); ++s) {
    const TypeRef& state = tl.states[s];
    if (const auto* c = state->as_choice()) {
      std::vector<Action> actions;
      actions.reserve(c->branches.size());
      for (std::size_t i = 0; i < c->branches.size(); ++i)
        actions.push_back(branch_action(*c, i));
      std::sort(actions.begin(), actions.end());
      out.labels.push_back({Constructor::Tag::Choice, c->kind, std::move(actions)});
    } else {
      out.labels.push_back({Constructor::Tag::End, ChoiceKind::Internal, {}});
    }
    for (const Lts::Edge& e : tl.lts.adj[s]) out.delta[s].emplace_back(e.act, e.to);
    std::sort(out.delta[s].begin(), out.delta[s].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

ProductAutomaton product(const TermAutomaton& m, const TermAutomaton& n, Budget* budget) {
  ProductAutomaton out;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;

  const auto intern = [&](std::uint32_t a, std::uint32_t b) {
    const auto [it, inserted] = ids.emplace(std::make_pair(a, b),
                                            static_cast<std::uint32_t>(out.states.size()));
    if (inserted) {
      out.states.push_back({a, b, !constructor_leq(m.labels[a], n.labels[b])});
      out.delta.emplace_back();
    }
    return it->second;
  };

  std::deque<std::uint32_t> work;
  out.initial = intern(m.initial, n.initial);
  work.push_back(out.initial);

  std::vector<bool> expanded;
  while (!work.empty()) {
    budget_tick(budget);
    const std::uint32_t id = work.front();
    work.pop_front();
    if (id < expanded.size() && expanded[id]) continue;
    if (expanded.size() <= id) expanded.resize(id + 1, false);
    expanded[id] = true;

    const auto [lhs, rhs, acc] = out.states[id];
    (void)acc;
    for (const auto& [act, to_m] : m.delta[lhs]) {
      const auto to_n = n.step(rhs, act);
      if (!to_n) continue;  // defined iff both components move
      const std::uint32_t succ = intern(to_m, *to_n);
      out.delta[id].emplace_back(act, succ);
      if (succ >= expanded.size() || !expanded[succ]) work.push_back(succ);
    }
  }
  return out;
}

std::size_t ProductAutomaton::num_accepting() const {
  std::size_t n = 0;
  for (const State& s : states) n += s.accepting ? 1 : 0;
  return n;
}

bool language_empty(const ProductAutomaton& p) {
  for (const ProductAutomaton::State& s : p.states)
    if (s.accepting) return false;
  return true;
}

std::optional<std::vector<Action>> counterexample_trace(const ProductAutomaton& p) {
  if (p.states.empty()) return std::nullopt;
  // BFS over the (already reachable-only) product for a shortest witness.
  std::vector<std::int64_t> parent(p.states.size(), -1);
  std::vector<Action> via(p.states.size());
  std::vector<bool> seen(p.states.size(), false);
  std::deque<std::uint32_t> work;
  seen[p.initial] = true;
  work.push_back(p.initial);
  while (!work.empty()) {
    const std::uint32_t id = work.front();
    work.pop_front();
    if (p.states[id].accepting) {
      std::vector<Action> trace;
      for (std::uint32_t cur = id; parent[cur] >= 0;
           cur = static_cast<std::uint32_t>(parent[cur]))
        trace.push_back(via[cur]);
      std::reverse(trace.begin(), trace.end());
      return trace;
    }
    for (const auto& [act, to] : p.delta[id]) {
      if (seen[to]) continue;
      seen[to] = true;
      parent[to] = id;
      via[to] = act;
      work.push_back(to);
    }
  }
  return std::nullopt;
}

bool subtype_kps(const TypeRef& t, const TypeRef& u, Budget* budget) {
  return language_empty(product(to_term_automaton(t, budget), to_term_automaton(u, budget), budget));
}

}  // namespace stsub
