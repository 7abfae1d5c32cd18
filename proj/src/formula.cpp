#include "formula.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <mutex>
#include <unordered_map>

namespace pdl {

const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::Prop: return "Prop";
    case Kind::Not: return "Not";
    case Kind::And: return "And";
    case Kind::Or: return "Or";
    case Kind::Implies: return "Implies";
    case Kind::Dep: return "Dep";
    case Kind::Indep: return "Indep";
    case Kind::RelDep: return "RelDep";
    case Kind::UBox: return "UBox";
  }
  return "?";
}

bool FormulaNode::operator==(const FormulaNode& o) const noexcept {
  return kind == o.kind && left_len == o.left_len && cond_len == o.cond_len &&
         name == o.name && kids == o.kids;
}

namespace {

struct NodeHash {
  std::size_t operator()(const FormulaNode& n) const noexcept {
    std::size_t seed = static_cast<std::size_t>(n.kind);
    auto mix = [&seed](std::size_t v) {
      seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    };
    mix(std::hash<std::string>{}(n.name));
    mix(n.left_len);
    mix(n.cond_len);
    for (FormulaId k : n.kids) mix(k);
    return seed;
  }
};

// Growing node store with stable addresses.  Writers (interning) take the
// mutex; readers index published chunks lock-free.  Chunk slots are written
// once, before the ids pointing into them escape.
class Arena {
 public:
  static constexpr std::size_t kChunkBits = 12;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 14;

  FormulaId intern(FormulaNode&& n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(n);
    if (it != table_.end()) return it->second;
    const FormulaId id = next_;
    const std::size_t ci = id >> kChunkBits;
    if (ci >= kMaxChunks) throw GuardError("formula arena exhausted");
    FormulaNode* chunk = chunks_[ci].load(std::memory_order_relaxed);
    if (chunk == nullptr) {
      chunk = new FormulaNode[kChunkSize];
      chunks_[ci].store(chunk, std::memory_order_release);
    }
    chunk[id & (kChunkSize - 1)] = n;
    table_.emplace(std::move(n), id);
    ++next_;
    return id;
  }

  const FormulaNode& at(FormulaId id) const {
    const FormulaNode* chunk = chunks_[id >> kChunkBits].load(std::memory_order_acquire);
    assert(chunk != nullptr);
    return chunk[id & (kChunkSize - 1)];
  }

 private:
  std::mutex mu_;
  std::unordered_map<FormulaNode, FormulaId, NodeHash> table_;
  std::array<std::atomic<FormulaNode*>, kMaxChunks> chunks_{};
  FormulaId next_ = 0;
};

Arena& arena() {
  static Arena* a = new Arena();  // immortal
  return *a;
}

FormulaId intern(Kind k, std::vector<FormulaId> kids, std::string name = {},
                 std::uint16_t left_len = 0, std::uint16_t cond_len = 0) {
  FormulaNode n;
  n.kind = k;
  n.left_len = left_len;
  n.cond_len = cond_len;
  n.name = std::move(name);
  n.kids = std::move(kids);
  return arena().intern(std::move(n));
}

}  // namespace

FormulaId mk_prop(std::string_view name) {
  if (name.empty()) throw ArgError("proposition symbol must be nonempty");
  return intern(Kind::Prop, {}, std::string(name));
}

FormulaId mk_not(FormulaId f) { return intern(Kind::Not, {f}); }
FormulaId mk_and(FormulaId a, FormulaId b) { return intern(Kind::And, {a, b}); }
FormulaId mk_or(FormulaId a, FormulaId b) { return intern(Kind::Or, {a, b}); }
FormulaId mk_implies(FormulaId a, FormulaId b) { return intern(Kind::Implies, {a, b}); }

FormulaId mk_dep(std::span<const FormulaId> premises, FormulaId conclusion) {
  std::vector<FormulaId> kids(premises.begin(), premises.end());
  kids.push_back(conclusion);
  return intern(Kind::Dep, std::move(kids));
}

FormulaId mk_c(FormulaId f) { return mk_dep({}, f); }

FormulaId mk_indep(std::span<const FormulaId> left, std::span<const FormulaId> conds,
                   std::span<const FormulaId> right) {
  if (left.empty() || right.empty())
    throw ArgError("independence atom needs nonempty left and right tuples");
  std::vector<FormulaId> kids;
  kids.reserve(left.size() + conds.size() + right.size());
  kids.insert(kids.end(), left.begin(), left.end());
  kids.insert(kids.end(), conds.begin(), conds.end());
  kids.insert(kids.end(), right.begin(), right.end());
  return intern(Kind::Indep, std::move(kids), {}, static_cast<std::uint16_t>(left.size()),
                static_cast<std::uint16_t>(conds.size()));
}

FormulaId mk_reldep(FormulaId condition, std::span<const FormulaId> premises,
                    FormulaId conclusion) {
  std::vector<FormulaId> kids;
  kids.reserve(premises.size() + 2);
  kids.push_back(condition);
  kids.insert(kids.end(), premises.begin(), premises.end());
  kids.push_back(conclusion);
  return intern(Kind::RelDep, std::move(kids));
}

FormulaId mk_ubox(FormulaId f) { return intern(Kind::UBox, {f}); }

FormulaId mk_iff(FormulaId a, FormulaId b) {
  return mk_and(mk_implies(a, b), mk_implies(b, a));
}

FormulaId mk_top() {
  const FormulaId t = mk_prop(k_top_witness);
  return mk_or(t, mk_not(t));
}

FormulaId mk_bot() {
  const FormulaId t = mk_prop(k_top_witness);
  return mk_and(t, mk_not(t));
}

FormulaId mk_u_box(FormulaId f) { return mk_and(f, mk_c(f)); }
FormulaId mk_u_dia(FormulaId f) { return mk_not(mk_u_box(mk_not(f))); }

FormulaId mk_selfindep(FormulaId f) {
  const FormulaId one[1] = {f};
  return mk_indep(one, {}, one);
}

FormulaId mk_uprime_box(FormulaId f) { return mk_and(f, mk_selfindep(f)); }
FormulaId mk_uprime_dia(FormulaId f) { return mk_not(mk_uprime_box(mk_not(f))); }
FormulaId mk_ubig_dia(FormulaId f) { return mk_not(mk_ubox(mk_not(f))); }

const FormulaNode& node(FormulaId f) { return arena().at(f); }
Kind kind(FormulaId f) { return node(f).kind; }

const std::string& prop_name(FormulaId f) {
  assert(kind(f) == Kind::Prop);
  return node(f).name;
}

FormulaId child(FormulaId f) { return node(f).kids[0]; }
FormulaId lhs(FormulaId f) { return node(f).kids[0]; }
FormulaId rhs(FormulaId f) { return node(f).kids[1]; }

std::span<const FormulaId> dep_premises(FormulaId f) {
  const auto& n = node(f);
  return {n.kids.data(), n.kids.size() - 1};
}

FormulaId dep_conclusion(FormulaId f) { return node(f).kids.back(); }

std::span<const FormulaId> indep_left(FormulaId f) {
  const auto& n = node(f);
  return {n.kids.data(), n.left_len};
}

std::span<const FormulaId> indep_conds(FormulaId f) {
  const auto& n = node(f);
  return {n.kids.data() + n.left_len, n.cond_len};
}

std::span<const FormulaId> indep_right(FormulaId f) {
  const auto& n = node(f);
  return {n.kids.data() + n.left_len + n.cond_len,
          n.kids.size() - n.left_len - n.cond_len};
}

FormulaId reldep_condition(FormulaId f) { return node(f).kids[0]; }

std::span<const FormulaId> reldep_premises(FormulaId f) {
  const auto& n = node(f);
  return {n.kids.data() + 1, n.kids.size() - 2};
}

FormulaId reldep_conclusion(FormulaId f) { return node(f).kids.back(); }

// ── printing ────────────────────────────────────────────────────────────

namespace {

void print_list(std::span<const FormulaId> fs, std::string& out);

void print_into(FormulaId f, std::string& out) {
  // The constant abbreviations print back as themselves; their expansion
  // uses the reserved symbol, which the parser refuses in input.
  static const FormulaId top = mk_top();
  static const FormulaId bot = mk_bot();
  if (f == top) {
    out += "#T";
    return;
  }
  if (f == bot) {
    out += "#F";
    return;
  }
  const FormulaNode& n = node(f);
  switch (n.kind) {
    case Kind::Prop:
      out += n.name;
      return;
    case Kind::Not:
      out += '~';
      print_into(n.kids[0], out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      out += '(';
      print_into(n.kids[0], out);
      out += n.kind == Kind::And ? " & " : n.kind == Kind::Or ? " | " : " -> ";
      print_into(n.kids[1], out);
      out += ')';
      return;
    }
    case Kind::Dep: {
      if (n.kids.size() == 1) {
        out += "C ";
        print_into(n.kids[0], out);
        return;
      }
      out += "D(";
      print_list(dep_premises(f), out);
      out += "; ";
      print_into(n.kids.back(), out);
      out += ')';
      return;
    }
    case Kind::Indep: {
      out += "I(";
      print_list(indep_left(f), out);
      out += "; ";
      print_list(indep_conds(f), out);
      out += "; ";
      print_list(indep_right(f), out);
      out += ')';
      return;
    }
    case Kind::RelDep: {
      out += "D^{";
      print_into(n.kids[0], out);
      out += "}(";
      print_list(reldep_premises(f), out);
      out += "; ";
      print_into(n.kids.back(), out);
      out += ')';
      return;
    }
    case Kind::UBox:
      out += "[U] ";
      print_into(n.kids[0], out);
      return;
  }
}

void print_list(std::span<const FormulaId> fs, std::string& out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i != 0) out += ", ";
    print_into(fs[i], out);
  }
}

}  // namespace

std::string print(FormulaId f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::vector<std::string> props_of(FormulaId f) {
  std::vector<std::string> out;
  std::vector<FormulaId> stack{f};
  std::unordered_map<FormulaId, bool> seen;
  while (!stack.empty()) {
    const FormulaId cur = stack.back();
    stack.pop_back();
    if (seen.count(cur)) continue;
    seen[cur] = true;
    const FormulaNode& n = node(cur);
    if (n.kind == Kind::Prop) {
      out.push_back(n.name);
    } else {
      stack.insert(stack.end(), n.kids.begin(), n.kids.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <typename Fn>
FormulaId rewrite(FormulaId f, std::unordered_map<FormulaId, FormulaId>& memo, Fn&& leaf) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  const FormulaNode& n = node(f);
  FormulaId result;
  if (n.kind == Kind::Prop) {
    result = leaf(f);
  } else {
    std::vector<FormulaId> kids;
    kids.reserve(n.kids.size());
    for (FormulaId k : n.kids) kids.push_back(rewrite(k, memo, leaf));
    FormulaNode copy = n;
    copy.kids = std::move(kids);
    result = [&] {
      switch (n.kind) {
        case Kind::Not: return mk_not(copy.kids[0]);
        case Kind::And: return mk_and(copy.kids[0], copy.kids[1]);
        case Kind::Or: return mk_or(copy.kids[0], copy.kids[1]);
        case Kind::Implies: return mk_implies(copy.kids[0], copy.kids[1]);
        case Kind::Dep:
          return mk_dep({copy.kids.data(), copy.kids.size() - 1}, copy.kids.back());
        case Kind::Indep:
          return mk_indep({copy.kids.data(), n.left_len},
                          {copy.kids.data() + n.left_len, n.cond_len},
                          {copy.kids.data() + n.left_len + n.cond_len,
                           copy.kids.size() - n.left_len - n.cond_len});
        case Kind::RelDep:
          return mk_reldep(copy.kids[0], {copy.kids.data() + 1, copy.kids.size() - 2},
                           copy.kids.back());
        case Kind::UBox: return mk_ubox(copy.kids[0]);
        case Kind::Prop: break;
      }
      throw PdlError("unreachable");
    }();
  }
  memo.emplace(f, result);
  return result;
}

}  // namespace

FormulaId subst(FormulaId f, const std::map<std::string, FormulaId>& binding) {
  std::unordered_map<FormulaId, FormulaId> memo;
  return rewrite(f, memo, [&binding](FormulaId p) {
    auto it = binding.find(prop_name(p));
    return it == binding.end() ? p : it->second;
  });
}

FormulaId bot_substitute(FormulaId f, int max_premises) {
  if (max_premises < 1) throw ArgError("bot_substitute needs a positive premise bound");
  // Post-order: children are rewritten before the parent Dep is tested, so
  // the replacement runs innermost first.
  std::unordered_map<FormulaId, FormulaId> memo;
  struct Impl {
    int bound;
    std::unordered_map<FormulaId, FormulaId>& memo;
    FormulaId run(FormulaId g) {
      auto it = memo.find(g);
      if (it != memo.end()) return it->second;
      const FormulaNode& n = node(g);
      FormulaId result;
      if (n.kind == Kind::Prop) {
        result = g;
      } else {
        std::vector<FormulaId> kids;
        kids.reserve(n.kids.size());
        for (FormulaId k : n.kids) kids.push_back(run(k));
        switch (n.kind) {
          case Kind::Not: result = mk_not(kids[0]); break;
          case Kind::And: result = mk_and(kids[0], kids[1]); break;
          case Kind::Or: result = mk_or(kids[0], kids[1]); break;
          case Kind::Implies: result = mk_implies(kids[0], kids[1]); break;
          case Kind::UBox: result = mk_ubox(kids[0]); break;
          case Kind::Dep:
            if (static_cast<int>(kids.size()) - 1 > bound) {
              result = mk_bot();
            } else {
              result = mk_dep({kids.data(), kids.size() - 1}, kids.back());
            }
            break;
          case Kind::Indep:
            result = mk_indep({kids.data(), n.left_len},
                              {kids.data() + n.left_len, n.cond_len},
                              {kids.data() + n.left_len + n.cond_len,
                               kids.size() - n.left_len - n.cond_len});
            break;
          case Kind::RelDep:
            result = mk_reldep(kids[0], {kids.data() + 1, kids.size() - 2}, kids.back());
            break;
          case Kind::Prop: throw PdlError("unreachable");
        }
      }
      memo.emplace(g, result);
      return result;
    }
  } impl{max_premises, memo};
  return impl.run(f);
}

std::int64_t formula_size(FormulaId f) {
  std::unordered_map<FormulaId, std::int64_t> memo;
  struct Impl {
    std::unordered_map<FormulaId, std::int64_t>& memo;
    std::int64_t run(FormulaId g) {
      auto it = memo.find(g);
      if (it != memo.end()) return it->second;
      std::int64_t total = 1;
      for (FormulaId k : node(g).kids) total += run(k);
      memo.emplace(g, total);
      return total;
    }
  } impl{memo};
  return impl.run(f);
}

}  // namespace pdl
