#include "stsub/safety.hpp"

#include <deque>
#include <unordered_map>

#include "stsub/charform.hpp"
#include "stsub/gh.hpp"
#include "stsub/kps.hpp"

namespace stsub {

System make_system(const TypeRef& left, const TypeRef& right) {
  return System{unfold_top(left), unfold_top(right)};
}

std::string to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SameDirection: return "SameDirection";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::EndMismatch: return "EndMismatch";
  }
  return "?";
}

std::vector<std::pair<Label, System>> sync_step(const System& s) {
  std::vector<std::pair<Label, System>> out;
  const auto* cl = s.left->as_choice();
  const auto* cr = s.right->as_choice();
  if (!cl || !cr || cl->kind == cr->kind) return out;
  for (const Branch& bl : cl->branches) {
    for (const Branch& br : cr->branches) {
      if (bl.label != br.label) continue;
      out.emplace_back(bl.label, System{unfold_top(bl.body), unfold_top(br.body)});
    }
  }
  return out;
}

std::optional<ErrorKind> is_error(const System& s) {
  const auto* cl = s.left->as_choice();
  const auto* cr = s.right->as_choice();
  if (cl && cr) {
    if (cl->kind == cr->kind) return ErrorKind::SameDirection;
    const auto* internal = cl->kind == ChoiceKind::Internal ? cl : cr;
    const auto* external = cl->kind == ChoiceKind::Internal ? cr : cl;
    for (const Branch& bi : internal->branches) {
      bool matched = false;
      for (const Branch& be : external->branches) matched |= bi.label == be.label;
      if (!matched) return ErrorKind::MissingLabel;
    }
    return std::nullopt;
  }
  if (s.left->as_end() && s.right->as_end()) return std::nullopt;
  return ErrorKind::EndMismatch;  // exactly one side has terminated
}

namespace {

struct SystemKey {
  TypeRef left, right;
};

struct SystemKeyHash {
  std::size_t operator()(const SystemKey& k) const {
    const std::uint64_t h1 = struct_hash(k.left);
    const std::uint64_t h2 = struct_hash(k.right);
    return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL + (h1 << 6));
  }
};

struct SystemKeyEq {
  bool operator()(const SystemKey& a, const SystemKey& b) const {
    return structurally_equal(a.left, b.left) && structurally_equal(a.right, b.right);
  }
};

}  // namespace

SafetyResult safe_explore(const TypeRef& t, const TypeRef& u, Budget* budget) {
  struct Visited {
    System state;
    std::int64_t parent;
    Label via;
  };
  std::vector<Visited> nodes;
  std::unordered_map<SystemKey, std::uint32_t, SystemKeyHash, SystemKeyEq> seen;
  std::deque<std::uint32_t> work;

  const auto intern = [&](System s, std::int64_t parent, Label via) -> std::optional<std::uint32_t> {
    SystemKey key{s.left, s.right};
    if (seen.count(key)) return std::nullopt;
    const auto id = static_cast<std::uint32_t>(nodes.size());
    seen.emplace(std::move(key), id);
    nodes.push_back({std::move(s), parent, std::move(via)});
    return id;
  };

  work.push_back(*intern(make_system(t, u), -1, {}));

  while (!work.empty()) {
    budget_tick(budget);
    const std::uint32_t id = work.front();
    work.pop_front();

    if (const auto err = is_error(nodes[id].state)) {
      SafetyResult r;
      r.safe = false;
      r.error = err;
      for (std::uint32_t cur = id; nodes[cur].parent >= 0;
           cur = static_cast<std::uint32_t>(nodes[cur].parent))
        r.trace.push_back(nodes[cur].via);
      std::reverse(r.trace.begin(), r.trace.end());
      return r;
    }

    for (auto& [label, succ] : sync_step(nodes[id].state)) {
      if (const auto sid = intern(std::move(succ), id, label)) work.push_back(*sid);
    }
  }
  return SafetyResult{};
}

std::string format_witness(const SafetyResult& r) {
  if (r.safe) return "safe";
  std::string out;
  for (const Label& l : r.trace) {
    out += "<" + l + ">\n";
  }
  out += to_string(*r.error);
  return out;
}

bool safe_by_subtyping(const TypeRef& t, const TypeRef& u, SubtypeAlgo algo,
                       Budget* budget) {
  const TypeRef dual_u = dual_type(u);
  const TypeRef dual_t = dual_type(t);
  switch (algo) {
    case SubtypeAlgo::Gh:
      return subtype_gh(t, dual_u, budget) || subtype_gh(dual_t, u, budget);
    case SubtypeAlgo::Kps:
      return subtype_kps(t, dual_u, budget) || subtype_kps(dual_t, u, budget);
    case SubtypeAlgo::Cf:
      return subtype_cf_sub(t, dual_u, budget) || subtype_cf_sub(dual_t, u, budget);
  }
  return false;
}

}  // namespace stsub
