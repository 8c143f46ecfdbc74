#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stsub/budget.hpp"
#include "stsub/formula.hpp"
#include "stsub/lts.hpp"

namespace stsub {

/// Subset of an LTS's state space, as a fixed-width bitset.
class StateSet {
public:
  explicit StateSet(std::size_t n, bool fill = false)
      : n_(n), words_((n + 63) / 64, fill ? ~0ULL : 0ULL) {
    trim();
  }

  static StateSet all(std::size_t n) { return StateSet(n, true); }
  static StateSet none(std::size_t n) { return StateSet(n, false); }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  void set(std::size_t i, bool v = true) {
    if (v)
      words_[i / 64] |= 1ULL << (i % 64);
    else
      words_[i / 64] &= ~(1ULL << (i % 64));
  }

  StateSet& operator&=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  StateSet& operator|=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool operator==(const StateSet& o) const { return n_ == o.n_ && words_ == o.words_; }

  bool subset_of(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

using VarEnv = std::vector<std::pair<std::string, StateSet>>;

/// Denotation of phi over the LTS: the set of states satisfying it. Free
/// variables of phi must be bound in env. A nu is computed by iterating its
/// body downward from the full state set until stable; the fragment is
/// negation-free, so each iterate is a subset of the previous one and the
/// loop takes at most |states| + 1 evaluations.
StateSet eval_states(const Lts& lts, const FormulaRef& phi, const VarEnv& env = {},
                     Budget* budget = nullptr);

/// True iff the initial state satisfies the closed formula phi.
bool models(const Lts& lts, const FormulaRef& phi, Budget* budget = nullptr);

}  // namespace stsub
