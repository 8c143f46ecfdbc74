#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stsub/type.hpp"

namespace stsub {

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

/// Greatest-fixpoint fragment of the modal mu-calculus:
///   phi := tt | ff | phi && phi | phi || phi | [a]phi | <a>phi
///        | nu x . phi | x
/// Nodes are immutable and shared.
class Formula {
public:
  struct True {};
  struct False {};
  struct And {
    FormulaRef lhs, rhs;
  };
  struct Or {
    FormulaRef lhs, rhs;
  };
  struct Box {
    Action act;
    FormulaRef body;
  };
  struct Diamond {
    Action act;
    FormulaRef body;
  };
  struct Nu {
    std::string var;
    FormulaRef body;
  };
  struct FVar {
    std::string name;
  };
  using Node = std::variant<True, False, And, Or, Box, Diamond, Nu, FVar>;

  explicit Formula(Node node) : node_(std::move(node)) {}
  Formula(const Formula&) = delete;
  Formula& operator=(const Formula&) = delete;

  const Node& node() const { return node_; }
  const True* as_true() const { return std::get_if<True>(&node_); }
  const False* as_false() const { return std::get_if<False>(&node_); }
  const And* as_and() const { return std::get_if<And>(&node_); }
  const Or* as_or() const { return std::get_if<Or>(&node_); }
  const Box* as_box() const { return std::get_if<Box>(&node_); }
  const Diamond* as_diamond() const { return std::get_if<Diamond>(&node_); }
  const Nu* as_nu() const { return std::get_if<Nu>(&node_); }
  const FVar* as_fvar() const { return std::get_if<FVar>(&node_); }

private:
  Node node_;
};

FormulaRef f_true();
FormulaRef f_false();
FormulaRef f_and(FormulaRef lhs, FormulaRef rhs);
FormulaRef f_or(FormulaRef lhs, FormulaRef rhs);
FormulaRef f_box(Action act, FormulaRef body);
FormulaRef f_diamond(Action act, FormulaRef body);
FormulaRef f_nu(std::string var, FormulaRef body);
FormulaRef f_fvar(std::string name);

/// Right-nested conjunction in list order; empty list is tt.
FormulaRef and_all(std::vector<FormulaRef> parts);
/// Right-nested disjunction in list order; empty list is ff.
FormulaRef or_all(std::vector<FormulaRef> parts);
/// Conjunction of [a]body over the given actions; empty set is tt.
FormulaRef box_all(const std::vector<Action>& actions, const FormulaRef& body);

/// Exact structural equality, bound names included.
bool formula_equal(const FormulaRef& a, const FormulaRef& b);

std::size_t formula_size(const FormulaRef& phi);

std::vector<std::string> formula_free_vars(const FormulaRef& phi);

/// Collects every nu-bound variable name in phi.
std::vector<std::string> formula_binders(const FormulaRef& phi);

/// Flips the direction of every modality's action; everything else is
/// preserved. An involution.
FormulaRef dual_formula(const FormulaRef& phi);

/// Replaces free occurrences of var. Precondition: no capture (replacement
/// closed, or binders of phi disjoint from its free variables).
FormulaRef substitute(const FormulaRef& phi, const std::string& var,
                      const FormulaRef& replacement);

/// n-th approximation of a fixpoint formula. Precondition: phi is a nu node.
/// n = 0 gives tt; n > 0 gives the body with the variable replaced by the
/// (n-1)-th approximation.
FormulaRef approximate(const FormulaRef& phi, std::size_t n);

enum class FormulaStyle : std::uint8_t { Native, Mcrl2 };

/// Native style round-trips through parse_formula; mcrl2 style is a textual
/// export convenience, output only.
std::string print_formula(const FormulaRef& phi, FormulaStyle style = FormulaStyle::Native);

/// Parses the native syntax: tt, ff, &&, ||, [!a]phi, <?a>phi, nu x . phi,
/// identifiers as variables, parentheses. Bare action labels (no ! or ?)
/// are accepted for the lambda extension. Throws ParseError.
FormulaRef parse_formula(std::string_view text);

}  // namespace stsub
