#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace stsub {

// ---------------------------------------------------------------------------
// Labels and actions
// ---------------------------------------------------------------------------

using Label = std::string;

/// Direction of an action: sends (!a), receives (?a), or bare labels with no
/// direction (used by the lambda-type extension, whose actions are 0, 1,
/// top, bot).
enum class Dir : std::uint8_t { Send, Recv, Bare };

Dir dual(Dir d);

struct Action {
  Dir dir = Dir::Send;
  Label label;

  friend bool operator==(const Action&, const Action&) = default;
};

bool operator<(const Action& a, const Action& b);
Action dual(const Action& a);
std::string to_string(const Action& a);

struct ActionHash {
  std::size_t operator()(const Action& a) const noexcept;
};

/// Kind of a choice node. An internal choice (+) selects and sends one of
/// its branches; an external choice (&) offers all branches and receives.
/// Branch actions derive their direction from the kind, so a choice node
/// cannot pair a + with receive actions or a & with sends.
enum class ChoiceKind : std::uint8_t { Internal, External };

ChoiceKind dual(ChoiceKind k);
Dir dir_of(ChoiceKind k);

// ---------------------------------------------------------------------------
// Session type terms
// ---------------------------------------------------------------------------

class SessionType;
using TypeRef = std::shared_ptr<const SessionType>;

struct Branch {
  Label label;
  TypeRef body;
};

/// Immutable session type term. Terms are shared through TypeRef and never
/// mutated after construction, so every operation below is pure and
/// thread-safe. Branch declaration order is preserved for printing but
/// ignored by equality, hashing and all semantic operations.
class SessionType {
public:
  struct End {};
  struct Var {
    std::string name;
  };
  struct Rec {
    std::string var;
    TypeRef body;
  };
  struct Choice {
    ChoiceKind kind;
    std::vector<Branch> branches;          // declaration order
    std::vector<std::uint32_t> by_label;   // branch indices sorted by label
  };
  using Node = std::variant<End, Var, Rec, Choice>;

  explicit SessionType(Node node) : node_(std::move(node)) {}
  SessionType(const SessionType&) = delete;
  SessionType& operator=(const SessionType&) = delete;

  const Node& node() const { return node_; }
  const End* as_end() const { return std::get_if<End>(&node_); }
  const Var* as_var() const { return std::get_if<Var>(&node_); }
  const Rec* as_rec() const { return std::get_if<Rec>(&node_); }
  const Choice* as_choice() const { return std::get_if<Choice>(&node_); }

private:
  friend std::uint64_t struct_hash(const TypeRef&);
  Node node_;
  mutable std::atomic<std::uint64_t> hash_{0};  // 0 = not yet computed
};

TypeRef t_end();
TypeRef t_var(std::string name);
TypeRef t_rec(std::string var, TypeRef body);
TypeRef t_choice(ChoiceKind kind, std::vector<Branch> branches);
TypeRef t_send(Label label, TypeRef cont);  // +{ !label . cont }
TypeRef t_recv(Label label, TypeRef cont);  // &{ ?label . cont }

/// Action fired by branch i of a choice.
Action branch_action(const SessionType::Choice& c, std::size_t i);

// ---------------------------------------------------------------------------
// Equality and hashing
// ---------------------------------------------------------------------------

/// Name-sensitive structural hash, branch-order-insensitive. Cached per node.
std::uint64_t struct_hash(const TypeRef& t);

/// Name-sensitive structural equality, branch-order-insensitive. This is the
/// identity used for LTS states and visited-pair contexts, where binder
/// names are globally determined by one parse.
bool structurally_equal(const TypeRef& a, const TypeRef& b);

/// Structural equality modulo the choice of bound names.
bool alpha_equal(const TypeRef& a, const TypeRef& b);

struct TypeStructHash {
  std::size_t operator()(const TypeRef& t) const { return struct_hash(t); }
};
struct TypeStructEq {
  bool operator()(const TypeRef& a, const TypeRef& b) const {
    return structurally_equal(a, b);
  }
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

bool is_closed(const TypeRef& t);
std::vector<std::string> free_vars(const TypeRef& t);

/// Number of free occurrences of var in t.
std::uint64_t varocc(const TypeRef& t, const std::string& var);

/// Capture-avoiding only by precondition: replacement must be closed or the
/// binders of t must be disjoint from the free variables of replacement.
TypeRef substitute(const TypeRef& t, const std::string& var, const TypeRef& replacement);

/// Repeatedly unfolds a top-level rec until the head is end or a choice.
/// Terminates by contractivity.
TypeRef unfold_top(const TypeRef& t);

/// One unfolding step of a top-level rec: rec x.T becomes T[rec x.T / x].
/// Returns t unchanged when the head is not a rec.
TypeRef unfold_once(const TypeRef& t);

/// Flips every choice kind (and hence every action direction), recursively.
TypeRef dual_type(const TypeRef& t);

/// Number of messages: 0 for end/var, |I| + sum over branches for a choice,
/// unchanged by rec.
std::uint64_t nummsg(const TypeRef& t);

/// Number of messages in the one-time unfolding: a rec x.T weighs
/// (1 + varocc(T, x)) * unfold(T). Saturates at UINT64_MAX.
std::uint64_t unfold_measure(const TypeRef& t);

// ---------------------------------------------------------------------------
// Well-formedness
// ---------------------------------------------------------------------------

enum class ViolationKind : std::uint8_t {
  FreeVariable,
  DuplicateLabel,
  NonContractive,
  EmptyChoice,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Reports all violations; empty result means well-formed. Free variables
/// are only violations when require_closed is set.
std::vector<Violation> validate_type(const TypeRef& t, bool require_closed);

/// Renames binders so that every rec binds a distinct name, distinct also
/// from every other identifier occurring in the term.
TypeRef alpha_rename_apart(const TypeRef& t);

}  // namespace stsub
