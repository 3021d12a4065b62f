#include "hflab/eval.hpp"

#include <algorithm>

namespace hflab {

Nat eval_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: throw DomainError("eval_term: open term " + print_term(t));
    case TermKind::Const:
      throw SignatureError("eval_term: set constant in arithmetic context");
    case TermKind::Zero: return 0;
    case TermKind::Succ: return eval_term(t.child(0)) + 1;
    case TermKind::Add: return eval_term(t.child(0)) + eval_term(t.child(1));
    case TermKind::Mul: return eval_term(t.child(0)) * eval_term(t.child(1));
  }
  throw DomainError("eval_term: malformed term");
}

size_t EvalCache::KeyHash::operator()(const Key& k) const {
  size_t h = std::hash<const void*>{}(k.node);
  for (const auto& [var, val] : k.env) {
    h ^= (static_cast<size_t>(var) * 0x9e3779b97f4a7c15ull + val) + (h << 6) + (h >> 2);
  }
  return h;
}

bool EvalCache::lookup(const detail::FormulaNode* node,
                       const std::vector<std::pair<uint32_t, size_t>>& env, bool& out) const {
  auto it = memo_.find(Key{node, env});
  if (it == memo_.end()) return false;
  out = it->second;
  return true;
}

void EvalCache::store(const detail::FormulaNode* node,
                      const std::vector<std::pair<uint32_t, size_t>>& env, bool value) {
  memo_.emplace(Key{node, env}, value);
}

namespace {

struct SetEvaluator {
  const FiniteStructure& s;
  EvalCache* cache;
  uint32_t depth_left;
  std::vector<std::pair<uint32_t, size_t>> env;

  size_t lookup_var(uint32_t v) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == v) return it->second;
    throw DomainError("free variable v" + std::to_string(v) + " in sentence evaluation");
  }

  size_t term_index(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Var: return lookup_var(t.var_index());
      case TermKind::Const: {
        auto i = s.find_code(t.const_code());
        if (!i)
          throw DomainError("constant c_" + nat_str(t.const_code()) + " does not denote in " +
                            s.describe());
        return *i;
      }
      default: throw SignatureError("set-signature terms are variables and constants only");
    }
  }

  // Environment restricted to the free variables of f, for cache keys.
  std::vector<std::pair<uint32_t, size_t>> project(const Formula& f) const {
    std::vector<std::pair<uint32_t, size_t>> key;
    key.reserve(f.free_vars().size());
    for (uint32_t v : f.free_vars()) key.emplace_back(v, lookup_var(v));
    return key;
  }

  bool eval(const Formula& f) {
    if (depth_left == 0) throw ResourceError("evaluation recursion budget exhausted");
    --depth_left;
    bool r = eval_inner(f);
    ++depth_left;
    return r;
  }

  bool eval_inner(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Eq: return term_index(f.term(0)) == term_index(f.term(1));
      case FormulaKind::In: return s.mem(term_index(f.term(0)), term_index(f.term(1)));
      case FormulaKind::AckMem:
        throw SignatureError("AckMem atom under set-structure evaluation");
      case FormulaKind::Not: return !eval(f.child(0));
      case FormulaKind::Or: return eval(f.child(0)) || eval(f.child(1));
      case FormulaKind::Exists: {
        std::vector<std::pair<uint32_t, size_t>> key;
        if (cache) {
          key = project(f);
          bool out;
          if (cache->lookup(f.raw(), key, out)) return out;
        }
        bool found = false;
        for (size_t i = 0; i < s.size() && !found; ++i) {
          env.emplace_back(f.bound_var(), i);
          found = eval(f.child(0));
          env.pop_back();
        }
        if (cache) cache->store(f.raw(), key, found);
        return found;
      }
    }
    throw DomainError("malformed formula");
  }
};

}  // namespace

bool eval_with_env(const Formula& f, const FiniteStructure& s,
                   const std::vector<std::pair<uint32_t, size_t>>& env, EvalCache* cache,
                   const EvalBudget& budget) {
  if (f.sig() != Sig::Set) throw SignatureError("structure evaluation requires the set signature");
  SetEvaluator ev{s, cache, budget.max_recursion, env};
  return ev.eval(f);
}

bool eval_sentence(const Formula& f, const FiniteStructure& s, EvalCache* cache,
                   const EvalBudget& budget) {
  if (f.sig() != Sig::Set) throw SignatureError("eval_sentence requires the set signature");
  if (!f.closed())
    throw DomainError("eval_sentence: formula has free variables: " + print_formula(f));
  return eval_with_env(f, s, {}, cache, budget);
}

// ------------------------------------------------------------ delta0

namespace {

struct Delta0Evaluator {
  std::vector<std::pair<uint32_t, HFSet>> env;

  HFSet lookup_var(uint32_t v) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == v) return it->second;
    throw DomainError("free variable v" + std::to_string(v) + " in delta0 evaluation");
  }

  HFSet term_value(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Var: return lookup_var(t.var_index());
      case TermKind::Const: return ack_decode(t.const_code());
      default: throw SignatureError("set-signature terms are variables and constants only");
    }
  }

  // ∃v(v∈t ∧ ψ) arrives desugared as Exists(v, Not(Or(arm, arm))) where one
  // arm is Not(In(v, t)). Returns the guard term and the other arm.
  static bool match_bounded(const Formula& ex, Term& bound, Formula& rest) {
    Formula body = ex.child(0);
    if (body.kind() != FormulaKind::Not) return false;
    Formula inner = body.child(0);
    if (inner.kind() != FormulaKind::Or) return false;
    for (int arm = 0; arm < 2; ++arm) {
      Formula g = inner.child(arm);
      if (g.kind() != FormulaKind::Not) continue;
      Formula atom = g.child(0);
      if (atom.kind() != FormulaKind::In) continue;
      Term lhs = atom.term(0);
      if (lhs.kind() != TermKind::Var || lhs.var_index() != ex.bound_var()) continue;
      Term t = atom.term(1);
      if (t.kind() == TermKind::Var && t.var_index() == ex.bound_var()) continue;
      bound = t;
      rest = inner.child(1 - arm);
      return true;
    }
    return false;
  }

  bool eval(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Eq: return term_value(f.term(0)) == term_value(f.term(1));
      case FormulaKind::In: return term_value(f.term(1)).contains(term_value(f.term(0)));
      case FormulaKind::AckMem: throw SignatureError("AckMem atom in delta0 evaluation");
      case FormulaKind::Not: return !eval(f.child(0));
      case FormulaKind::Or: return eval(f.child(0)) || eval(f.child(1));
      case FormulaKind::Exists: {
        Term bound;
        Formula rest;
        if (!match_bounded(f, bound, rest))
          throw FragmentError("unbounded quantifier in delta0 evaluation: " + print_formula(f));
        HFSet range = term_value(bound);
        // ascending code order; children are stored descending
        const auto& cs = range.children();
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
          env.emplace_back(f.bound_var(), *it);
          bool witness = !eval(rest);
          env.pop_back();
          if (witness) return true;
        }
        return false;
      }
    }
    throw DomainError("malformed formula");
  }
};

}  // namespace

bool eval_delta0(const Formula& f) {
  if (f.sig() != Sig::Set) throw SignatureError("eval_delta0 requires the set signature");
  if (!f.closed())
    throw DomainError("eval_delta0: formula has free variables: " + print_formula(f));
  Delta0Evaluator ev;
  return ev.eval(f);
}

bool eval_qf_arith(const Formula& f) {
  if (f.sig() != Sig::Arith) throw SignatureError("eval_qf_arith requires arithmetic formulas");
  switch (f.kind()) {
    case FormulaKind::Eq: return eval_term(f.term(0)) == eval_term(f.term(1));
    case FormulaKind::Not: return !eval_qf_arith(f.child(0));
    case FormulaKind::Or: return eval_qf_arith(f.child(0)) || eval_qf_arith(f.child(1));
    case FormulaKind::Exists:
      throw FragmentError("quantifier in quantifier-free arithmetic evaluation");
    default: throw SignatureError("unexpected atom in arithmetic evaluation");
  }
}

}  // namespace hflab
