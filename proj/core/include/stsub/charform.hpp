#pragma once

#include "stsub/budget.hpp"
#include "stsub/formula.hpp"
#include "stsub/lts.hpp"
#include "stsub/type.hpp"

namespace stsub {

/// Which relation the characteristic formula captures.
///   SubOf: the formula of T is satisfied by exactly the supertypes of T;
///          T <= U is checked as U |= F(T, SubOf).
///   SupOf: the formula of U is satisfied by exactly the subtypes of U;
///          T <= U is checked as T |= F(U, SupOf).
enum class Mode : std::uint8_t { SubOf, SupOf };

Mode dual(Mode m);

/// The choice kind whose branches become mandatory diamonds under m.
ChoiceKind mode_kind(Mode m);

/// Characteristic formula of t, structural recursion over the term:
///   - a choice matching the mode's kind yields a conjunction of diamonds;
///   - the opposite kind yields boxes, a disjunction of diamonds over tt,
///     and a box over the complement alphabet to ff;
///   - end yields [alphabet]ff, rec yields nu, variables map to variables.
/// When dummy_fixpoints is set, every modality body is wrapped in a vacuous
/// nu binder (unused variable); the semantics is unchanged.
FormulaRef char_formula(const TypeRef& t, Mode mode, const Alphabet& alphabet,
                        bool dummy_fixpoints = false);

/// T <= U via U |= F(T, SubOf) over the per-check union alphabet.
bool subtype_cf_sub(const TypeRef& t, const TypeRef& u, Budget* budget = nullptr,
                    bool dummy_fixpoints = false);

/// T <= U via T |= F(U, SupOf) over the per-check union alphabet.
bool subtype_cf_sup(const TypeRef& t, const TypeRef& u, Budget* budget = nullptr,
                    bool dummy_fixpoints = false);

}  // namespace stsub
