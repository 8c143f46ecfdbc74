#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stsub/budget.hpp"
#include "stsub/lts.hpp"
#include "stsub/type.hpp"

namespace stsub {

/// Type constructor labelling a term-automaton state: end, or a choice kind
/// together with its nonempty action set.
struct Constructor {
  enum class Tag : std::uint8_t { End, Choice };

  Tag tag = Tag::End;
  ChoiceKind kind = ChoiceKind::Internal;  // meaningful for Choice only
  std::vector<Action> actions;             // sorted; nonempty for Choice

  friend bool operator==(const Constructor&, const Constructor&) = default;
};

std::string to_string(const Constructor& c);

/// Constructor order: end <= end; +A <= +B iff A is a subset of B;
/// &A <= &B iff B is a subset of A; everything else is unrelated.
bool constructor_leq(const Constructor& c1, const Constructor& c2);

/// Automaton over type constructors: states are labelled with constructors
/// and the transition function is defined exactly on each state's own
/// action set.
struct TermAutomaton {
  std::uint32_t initial = 0;
  std::vector<Constructor> labels;                          // per state
  std::vector<std::vector<std::pair<Action, std::uint32_t>>> delta;  // per state

  std::size_t num_states() const { return labels.size(); }
  std::optional<std::uint32_t> step(std::uint32_t s, const Action& a) const;
};

/// Translates a closed validated type: states and transitions come from its
/// LTS; each state's constructor is read off the canonical head.
TermAutomaton to_term_automaton(const TypeRef& t, Budget* budget = nullptr);

/// Reachable part of the product automaton. A state is accepting when its
/// component labels are not related by constructor_leq; transitions exist
/// exactly where both components move.
struct ProductAutomaton {
  struct State {
    std::uint32_t lhs, rhs;
    bool accepting;
  };

  std::uint32_t initial = 0;
  std::vector<State> states;
  std::vector<std::vector<std::pair<Action, std::uint32_t>>> delta;

  std::size_t num_states() const { return states.size(); }
  std::size_t num_accepting() const;
};

/// Breadth-first product construction from the pair of initial states.
ProductAutomaton product(const TermAutomaton& m, const TermAutomaton& n,
                         Budget* budget = nullptr);

/// True iff no reachable state is accepting.
bool language_empty(const ProductAutomaton& p);

/// Shortest action sequence from the initial state to an accepting state,
/// or nullopt when the language is empty.
std::optional<std::vector<Action>> counterexample_trace(const ProductAutomaton& p);

/// T <= U via emptiness of the product of the two term automata.
bool subtype_kps(const TypeRef& t, const TypeRef& u, Budget* budget = nullptr);

}  // namespace stsub
