#ifndef HFLAB_PROOFS_HPP
#define HFLAB_PROOFS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hflab/formula.hpp"
#include "hflab/nat.hpp"

namespace hflab {

// One-sided (Tait-style) sequent: a finite set of formulas over one
// signature, read disjunctively. Canonical structural order throughout so
// that search and serialization are reproducible.
class Sequent {
 public:
  Sequent() = default;
  explicit Sequent(std::vector<Formula> formulas);

  const std::vector<Formula>& formulas() const { return formulas_; }
  bool empty() const { return formulas_.empty(); }
  size_t size() const { return formulas_.size(); }
  bool contains(const Formula& f) const;
  bool subset_of(const Sequent& o) const;
  Sequent with(const Formula& f) const;
  Sequent without(const Formula& f) const;
  Sequent union_with(const Sequent& o) const;

  bool operator==(const Sequent& o) const { return formulas_ == o.formulas_; }

 private:
  std::vector<Formula> formulas_;  // sorted by compare(), unique
};

// Rules of the calculus. The connective layer works on the ¬/∨/∃ primitives
// with the dual rules phrased through negation; NotNot peels the double
// negations this produces. Assumption leaves carry "φ holds" for φ in the
// declared assumption set.
enum class Rule : uint8_t {
  Ax,             // leaf: sequent contains an atomic α together with ¬α
  Assumption,     // leaf: sequent contains the assumption formula
  OrIntro,        // Γ, A, B        ⟹  Γ, A∨B
  AndSplit,       // Γ, ¬A and Γ, ¬B ⟹ Γ, ¬(A∨B)
  NotNot,         // Γ, A           ⟹  Γ, ¬¬A
  ExistsWitness,  // Γ, ∃vA, A[t/v] ⟹  Γ, ∃vA
  ForallEigen,    // Γ, ¬A[y/v]     ⟹  Γ, ¬∃vA   (y fresh for the conclusion)
  Cut,            // Γ, φ and Γ, ¬φ ⟹  Γ
};

namespace detail {
struct ProofNode;
}

// Immutable proof tree. Checking is weakening-tolerant: a premise may prove
// any subset of what the rule asks for, and principal formulas may be
// retained in premises.
class ProofTree {
 public:
  ProofTree() = default;

  static ProofTree ax(Sequent s);
  static ProofTree assumption(Sequent s, Formula assumed);
  static ProofTree or_intro(Sequent s, Formula principal, ProofTree child);
  static ProofTree and_split(Sequent s, Formula principal, ProofTree left, ProofTree right);
  static ProofTree not_not(Sequent s, Formula principal, ProofTree child);
  static ProofTree exists_witness(Sequent s, Formula principal, Term witness, ProofTree child);
  static ProofTree forall_eigen(Sequent s, Formula principal, uint32_t eigen, ProofTree child);
  static ProofTree cut(Sequent s, Formula cut_formula, ProofTree left, ProofTree right);

  Rule rule() const;
  const Sequent& sequent() const;
  const Formula& principal() const;  // also the assumption / cut formula
  const Term& witness() const;
  uint32_t eigen_var() const;
  size_t arity() const;
  const ProofTree& child(size_t i) const;

  uint64_t node_count() const;
  uint64_t cut_count() const;
  uint32_t max_cut_rank() const;  // deepest cut formula, 0 when cut-free

  explicit operator bool() const { return node_ != nullptr; }
  const detail::ProofNode* raw() const { return node_; }

 private:
  explicit ProofTree(const detail::ProofNode* n) : node_(n) {}
  const detail::ProofNode* node_;
  friend ProofTree intern_proof(detail::ProofNode&&);
};

// Validates every node locally, requires leaves to be Ax or members of the
// assumption set, and the root sequent to consist of goal / negated
// assumptions only. Returns false with a reason; throws StructuralError only
// for malformed trees (empty nodes, missing children).
bool check_proof(const ProofTree& proof, const std::vector<Formula>& assumptions,
                 const Formula& goal, std::string* reason = nullptr);

// Gödel-style code of the whole tree; strictly dominates the code of every
// formula occurring in any sequent (in particular of every assumption used).
Nat proof_code(const ProofTree& proof);

struct BlowupStats {
  uint64_t input_nodes = 0;
  uint64_t output_nodes = 0;
  uint32_t max_cut_rank = 0;
  // reference curve: max_cut_rank-fold iterated exponential of the input
  // size; astronomical = true when it cannot be materialized
  Nat reference_bound;
  bool astronomical = false;
};

// Full cut elimination. Assumption leaves are first folded into the
// ¬φ-wrapped sequent (identity expansions replace the leaves), then the
// standard rank induction removes every cut. The result proves
// {¬φ : φ ∈ assumptions used} ∪ {goal formulas}, checks, and has the
// subformula property. Cut-free input is returned unchanged.
ProofTree eliminate_cuts(const ProofTree& proof, BlowupStats* stats = nullptr);

// True iff every formula in every sequent is a substitution instance of a
// subformula of the goal or of an assumption, up to one outer negation. The
// negation allowance is forced by the primitive-¬ syntax: the dual rules
// (AndSplit, ForallEigen) and the ¬φ assumption wrapper put single negations
// on subformulas, which is the classical weak subformula property for
// one-sided calculi over ¬/∨/∃.
bool has_subformula_property(const ProofTree& proof, const std::vector<Formula>& assumptions,
                             const Formula& goal);

// Deterministic bounded-size proof search in the cut-free calculus over the
// wrapped sequent {¬φ : φ ∈ assumptions} ∪ {goal}. Returns the first proof
// of node count ≤ size_budget in canonical order, or nothing. Existential
// witnesses come from the closed subterms of the wrapped sequent plus the
// supplied extras. ResourceError when size_budget exceeds the ceiling.
inline constexpr uint64_t kSearchSizeCeiling = 64;
std::optional<ProofTree> bounded_search(const std::vector<Formula>& assumptions,
                                        const Formula& goal, uint64_t size_budget,
                                        const std::vector<Term>& extra_witnesses = {});

// Tetration: supexp(0) = 1, supexp(n+1) = 2^supexp(n). ResourceError once the
// result would not fit max_bits bits.
Nat supexp(unsigned long n, unsigned long max_bits = 1ul << 22);

// Versioned JSON payloads (enveloped by the artifact module).
std::string proof_to_json(const ProofTree& proof, const std::vector<Formula>& assumptions,
                          const Formula& goal, Sig sig);
struct ProofFile {
  Sig sig = Sig::Set;
  std::vector<Formula> assumptions;
  Formula goal;
  ProofTree tree;
};
ProofFile proof_from_json(const std::string& payload);

}  // namespace hflab

#endif  // HFLAB_PROOFS_HPP
