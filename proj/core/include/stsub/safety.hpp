#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stsub/budget.hpp"
#include "stsub/type.hpp"

namespace stsub {

/// Two closed session types composed under the synchronous semantics.
/// Components are kept in canonical (top-unfolded) form.
struct System {
  TypeRef left, right;
};

System make_system(const TypeRef& left, const TypeRef& right);

/// Communication errors of a system state.
enum class ErrorKind : std::uint8_t {
  SameDirection,  // both heads are choices of the same kind
  MissingLabel,   // an internal choice offers a label its peer cannot take
  EndMismatch,    // exactly one side has terminated
};

std::string to_string(ErrorKind k);

/// All synchronous successors: one side fires an action, the other fires
/// the dual action on the same label. Components of the successors are
/// canonicalised.
std::vector<std::pair<Label, System>> sync_step(const System& s);

/// Error classification of a canonicalised system state; nullopt when fine.
std::optional<ErrorKind> is_error(const System& s);

struct SafetyResult {
  bool safe = true;
  std::optional<ErrorKind> error;   // set when unsafe
  std::vector<Label> trace;         // synchronised labels to the first error
};

/// Exhaustive breadth-first exploration of the reachable system states,
/// including the initial one. The state space is finite (bounded by the
/// product of the two LTS sizes).
SafetyResult safe_explore(const TypeRef& t, const TypeRef& u, Budget* budget = nullptr);

/// Renders the witness per line: "<label>" for each synchronised step, then
/// the error kind name.
std::string format_witness(const SafetyResult& r);

enum class SubtypeAlgo : std::uint8_t { Gh, Kps, Cf };

/// Safety via subtyping: T <= dual(U) or dual(T) <= U with the chosen
/// algorithm; agrees with safe_explore.
bool safe_by_subtyping(const TypeRef& t, const TypeRef& u, SubtypeAlgo algo,
                       Budget* budget = nullptr);

}  // namespace stsub
