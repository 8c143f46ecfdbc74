#pragma once

#include <cstdint>
#include <utility>

#include "stsub/type.hpp"

namespace stsub {

/// Parameters for seeded random generation. target_size is the exact nummsg
/// of the result (0 produces end). The defaults are this artifact's choice;
/// they are not prescribed anywhere.
struct GenParams {
  std::uint32_t target_size = 10;
  std::uint32_t max_branching = 4;   // >= 1
  double rec_probability = 0.25;     // in [0, 1]
  std::uint32_t label_pool = 8;      // >= max_branching
  std::uint64_t seed = 0;
};

/// Closed, contractive, validated random type with nummsg == target_size.
/// Same parameters and seed give a structurally identical result.
TypeRef gen_random(const GenParams& p);

/// As gen_random but with no rec or variable nodes.
TypeRef gen_norec(const GenParams& p);

/// The super-recursive family
///   rec x1 . *a1 . ... rec xk . *ak . { *ai . { *aj . xj } }
/// with all choices of the given kind; nummsg is k(k+2).
TypeRef gen_super(std::uint32_t k, ChoiceKind kind);

/// A pair (rec x.V, rec x.V[V/x]) where V is a random choice tree over the
/// single variable x (no end leaves, no inner recs). Both components are
/// closed and validated, and the left is a subtype of the right (they
/// unfold to the same infinite tree).
std::pair<TypeRef, TypeRef> gen_unfolded_pair(const GenParams& p);

}  // namespace stsub
