#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stsub/budget.hpp"
#include "stsub/type.hpp"

namespace stsub {

/// Finite deterministic labelled transition system. States are dense ids;
/// determinism means at most one successor per (state, action).
struct Lts {
  struct Edge {
    Action act;
    std::uint32_t to;
  };

  std::uint32_t initial = 0;
  std::vector<std::vector<Edge>> adj;

  std::size_t num_states() const { return adj.size(); }

  std::optional<std::uint32_t> step(std::uint32_t s, const Action& a) const {
    for (const Edge& e : adj[s])
      if (e.act == a) return e.to;
    return std::nullopt;
  }
};

/// LTS of a closed session type together with the canonical (top-unfolded)
/// type of each state. State 0 is the initial state.
struct TypeLts {
  Lts lts;
  std::vector<TypeRef> states;
};

/// Builds the LTS induced by a closed, contractive, validated type. States
/// are the canonical forms reachable from t; identity is structural
/// equality of canonical forms.
TypeLts build_lts(const TypeRef& t, Budget* budget = nullptr);

/// Finite action set; kept sorted and duplicate-free.
struct Alphabet {
  std::vector<Action> actions;

  bool contains(const Action& a) const;
};

/// All actions occurring in t (branch labels with their derived direction).
Alphabet actions_of(const TypeRef& t);

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);

/// The per-check alphabet: the union of the actions of the two types under
/// comparison.
Alphabet check_alphabet(const TypeRef& t, const TypeRef& u);

/// Actions in alpha but not in acts.
std::vector<Action> complement(const Alphabet& alpha, const std::vector<Action>& acts);

}  // namespace stsub
