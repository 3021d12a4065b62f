#ifndef HFLAB_EVAL_HPP
#define HFLAB_EVAL_HPP

#include <unordered_map>
#include <vector>

#include "hflab/formula.hpp"
#include "hflab/structure.hpp"

namespace hflab {

// Value of a closed arithmetic term in the standard model.
Nat eval_term(const Term& t);

struct EvalBudget {
  uint32_t max_recursion = 1u << 14;
};

// Shared memo for repeated evaluation of large quantified formulas over one
// structure. Keys are (subformula, environment restricted to its free
// variables); results are exact, the cache only trades memory for time.
class EvalCache {
 public:
  bool lookup(const detail::FormulaNode* node, const std::vector<std::pair<uint32_t, size_t>>& env,
              bool& out) const;
  void store(const detail::FormulaNode* node, const std::vector<std::pair<uint32_t, size_t>>& env,
             bool value);
  size_t size() const { return memo_.size(); }

 private:
  struct Key {
    const detail::FormulaNode* node;
    std::vector<std::pair<uint32_t, size_t>> env;
    bool operator==(const Key& o) const { return node == o.node && env == o.env; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };
  std::unordered_map<Key, bool, KeyHash> memo_;
};

// Classical Tarskian truth of a set-signature sentence in a finite transitive
// structure. Existential witnesses are searched in ascending code order, so
// results and any reported witnesses are canonical.
// Errors: SignatureError for non-set formulas, DomainError for free variables
// or constants outside the domain.
bool eval_sentence(const Formula& f, const FiniteStructure& s, EvalCache* cache = nullptr,
                   const EvalBudget& budget = {});

// Same, with free variables interpreted by the environment (element indices).
bool eval_with_env(const Formula& f, const FiniteStructure& s,
                   const std::vector<std::pair<uint32_t, size_t>>& env, EvalCache* cache = nullptr,
                   const EvalBudget& budget = {});

// Exact truth over the full (V_ω, ∈) for the decidable bounded fragment:
// every quantifier must have the shape ∃v(v∈t ∧ ψ) or ¬∃v(v∈t ∧ ¬ψ) — as
// produced by the parser's sugar — for a term t not containing v.
// FragmentError on unbounded quantifiers, DomainError on free variables.
bool eval_delta0(const Formula& f);

// Quantifier-free arithmetic sentences in the standard model; FragmentError
// if a quantifier occurs (L_PA has no bounded-quantifier shape to exploit).
bool eval_qf_arith(const Formula& f);

}  // namespace hflab

#endif  // HFLAB_EVAL_HPP
