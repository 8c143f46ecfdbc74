#pragma once

#include <optional>

#include "stsub/budget.hpp"
#include "stsub/type.hpp"

namespace stsub {

/// Gay-Hole inference-rule subtyping with explicit unfolding and a
/// visited-pair context. Rule priority: the assumption rule first, then a
/// left rec unfolding, then a right one, then the structural rules; false
/// when no rule applies. The context stores the exact pre-unfolding pairs,
/// scoped to the current derivation branch, so the procedure exhibits the
/// algorithm's worst-case exponential behaviour on recursive types.
///
/// The budget (step limit and/or deadline) counts rule applications and
/// throws BudgetExceeded when exhausted.
bool subtype_gh(const TypeRef& t, const TypeRef& u, Budget* budget = nullptr);

/// Convenience wrapper with a step limit; nullopt when the limit is hit.
std::optional<bool> subtype_gh_steps(const TypeRef& t, const TypeRef& u,
                                     std::uint64_t max_steps);

}  // namespace stsub
