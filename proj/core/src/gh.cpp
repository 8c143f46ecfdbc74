#include "stsub/gh.hpp"

#include <unordered_set>
#include <utility>

namespace stsub {

namespace {

struct PairKey {
  TypeRef lhs, rhs;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& p) const {
    const std::uint64_t h1 = struct_hash(p.lhs);
    const std::uint64_t h2 = struct_hash(p.rhs);
    return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL + (h1 << 6));
  }
};

struct PairKeyEq {
  bool operator()(const PairKey& a, const PairKey& b) const {
    return structurally_equal(a.lhs, b.lhs) && structurally_equal(a.rhs, b.rhs);
  }
};

struct GhChecker {
  Budget* budget;
  std::unordered_set<PairKey, PairKeyHash, PairKeyEq> context;

  bool derive(const TypeRef& t, const TypeRef& u) {
    budget_tick(budget);

    // Assump has priority whenever applicable.
    const PairKey key{t, u};
    if (context.count(key)) return true;

    // RL, then RR: unfold one rec step, assuming the pre-unfolding pair.
    // Assumptions are scoped to the branch; erase by key, since nested
    // insertions may rehash and invalidate iterators.
    if (t->as_rec()) {
      context.insert(key);
      const bool ok = derive(unfold_once(t), u);
      context.erase(key);
      return ok;
    }
    if (u->as_rec()) {
      context.insert(key);
      const bool ok = derive(t, unfold_once(u));
      context.erase(key);
      return ok;
    }

    if (t->as_end() && u->as_end()) return true;

    const auto* ct = t->as_choice();
    const auto* cu = u->as_choice();
    if (!ct || !cu || ct->kind != cu->kind) return false;

    if (ct->kind == ChoiceKind::Internal) {
      // Sel: every left branch must exist on the right.
      for (const Branch& bt : ct->branches) {
        const Branch* bu = find_branch(*cu, bt.label);
        if (!bu || !derive(bt.body, bu->body)) return false;
      }
      return true;
    }
    // Bra: every right branch must exist on the left.
    for (const Branch& bu : cu->branches) {
      const Branch* bt = find_branch(*ct, bu.label);
      if (!bt || !derive(bt->body, bu.body)) return false;
    }
    return true;
  }

  static const Branch* find_branch(const SessionType::Choice& c, const Label& label) {
    for (const Branch& b : c.branches)
      if (b.label == label) return &b;
    return nullptr;
  }
};

}  // namespace

bool subtype_gh(const TypeRef& t, const TypeRef& u, Budget* budget) {
  GhChecker checker{budget, {}};
  return checker.derive(t, u);
}

std::optional<bool> subtype_gh_steps(const TypeRef& t, const TypeRef& u,
                                     std::uint64_t max_steps) {
  Budget budget = Budget::with_steps(max_steps);
  try {
    return subtype_gh(t, u, &budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace stsub
