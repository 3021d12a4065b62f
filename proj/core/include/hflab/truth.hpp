#ifndef HFLAB_TRUTH_HPP
#define HFLAB_TRUTH_HPP

#include <memory>
#include <string>
#include <vector>

#include "hflab/eval.hpp"
#include "hflab/formula.hpp"
#include "hflab/structure.hpp"

namespace hflab {

namespace detail {
struct LevelChain;
}

// Read-only membership oracle for a depth-bounded truth class. Implemented by
// the tower levels and by the external / fault-injected classes the audits
// accept.
class TruthOracle {
 public:
  virtual ~TruthOracle() = default;
  virtual uint32_t level() const = 0;  // decides sentences of depth ≤ level()
  virtual bool contains(const Formula& sentence) const = 0;
};

// One stratum of the construction. Level 1 is the atomic diagram of the
// structure (c_a = c_b iff a = b, c_a ∈ c_b iff the bit holds); level k+1
// answers depth-(k+1) sentences through one connective layer over level k and
// delegates deeper-down sentences to it.
//
// Queries are memoized per level; the memo is mutex-serialized, answers are
// deterministic regardless of query interleaving.
class TruthLevel : public TruthOracle {
 public:
  uint32_t level() const override;
  bool contains(const Formula& sentence) const override;
  const FiniteStructure& structure() const;

 private:
  explicit TruthLevel(std::shared_ptr<const detail::LevelChain> chain)
      : chain_(std::move(chain)) {}
  std::shared_ptr<const detail::LevelChain> chain_;
  friend TruthLevel atomic_level(std::shared_ptr<const FiniteStructure> s);
  friend TruthLevel extend_level(const TruthLevel& t);
};

TruthLevel atomic_level(std::shared_ptr<const FiniteStructure> s);
TruthLevel extend_level(const TruthLevel& t);

// The depth-stratified truth predicate over one finite structure, levels
// 1..reach. reach is a resource bound, not a logical one: in this finite
// standard setting every depth admits a truth class, construction simply
// stops where told. Reports label it accordingly.
class TruthTower {
 public:
  TruthTower(const DomainSpec& spec, uint32_t reach, uint64_t node_budget = 7,
             unsigned long domain_budget = kDefaultDomainBudget);

  const FiniteStructure& structure() const { return *structure_; }
  std::shared_ptr<const FiniteStructure> structure_ptr() const { return structure_; }
  const DomainSpec& spec() const { return spec_; }
  uint32_t reach() const { return static_cast<uint32_t>(levels_.size()); }
  uint64_t node_budget() const { return node_budget_; }
  const TruthLevel& level(uint32_t k) const;  // 1-based

  struct Membership {
    bool member;
    uint32_t certificate;  // the witnessing stratum depth, minimal
  };

  // Membership in the union predicate: the depth(φ) level answers and is the
  // certificate. ReachExceededError when depth(φ) > reach — the query falls
  // outside the constructed stratification.
  Membership query(const Formula& sentence) const;
  bool member(const Formula& sentence) const { return query(sentence).member; }

 private:
  DomainSpec spec_;
  uint64_t node_budget_;
  std::shared_ptr<const FiniteStructure> structure_;
  std::vector<TruthLevel> levels_;
};

// All closed sentences over the structure's constants with at most
// node_budget tree nodes (formula and term nodes both count). Binders use
// canonical indices: the quantifier at nesting depth d binds v_d. Ascending
// deterministic order. ResourceError when the count would exceed max_count.
std::vector<Formula> enumerate_sentences(const FiniteStructure& s, uint64_t node_budget,
                                         uint64_t max_count = 1ull << 22);

struct Disagreement {
  Formula sentence;
  bool in_a, in_b;
};

struct AgreementReport {
  uint32_t common_depth = 0;
  uint64_t compared = 0;
  std::vector<Disagreement> disagreements;
  bool ok() const { return disagreements.empty(); }
};

// Compares two truth classes on every budget sentence of depth ≤ min of the
// two levels (Remark-style agreement: distinct strata cannot disagree on the
// sentences both decide).
AgreementReport check_agreement(const TruthOracle& a, const TruthOracle& b,
                                const FiniteStructure& s, uint64_t node_budget);

struct CtViolation {
  int clause;  // 1..5
  Formula sentence;
  bool in_t;
  bool expected;
  std::string detail;
};

struct CtReport {
  uint32_t family_depth = 0;
  uint64_t sentences_enumerated = 0;
  uint64_t clause_checks[6] = {0, 0, 0, 0, 0, 0};
  std::vector<CtViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive compositional-truth verification of an oracle against the five
// clauses: (1) members are F-sentences and the family is closed under
// immediate subformulas, (2) atomic sentences match the structure, (3)
// negation flips membership, (4) a disjunction is in T iff one disjunct is,
// (5) an existential is in T iff some constant instance is. Violations are
// data, not errors.
CtReport verify_ct(const TruthOracle& t, const FiniteStructure& s, uint32_t family_depth,
                   uint64_t node_budget);

struct FacesReport {
  uint64_t seed = 0;
  uint64_t dc_checked = 0;
  uint64_t dc_failures = 0;       // membership ≠ exists-true-disjunct oracle
  uint64_t dc_out_failures = 0;   // member but no true disjunct
  uint64_t closure_checked = 0;
  uint64_t closure_failures = 0;  // ψ, ¬ψ∨χ in T but χ not in T
  std::vector<std::string> failures;
  bool ok() const { return dc_failures == 0 && dc_out_failures == 0 && closure_failures == 0; }
};

// Disjunctive correctness against the exists-true-disjunct oracle (balanced
// seeded disjunctions of atomic sentences up to max_width wide) plus
// sentential modus-ponens closure on sampled triples.
FacesReport faces_audit(const TruthTower& tower, uint32_t max_width, uint32_t closure_samples,
                        uint64_t seed);

// Bits 0..m-1 of the result: bit x is set iff x is the code of a sentence of
// the structure's language and that sentence is in the truth class. Codes of
// non-sentences (junk values, open formulas, constants outside the domain)
// are zero bits. ReachExceededError if some coded sentence below m has depth
// beyond the tower's reach.
Nat piecewise_code(const TruthTower& tower, const Nat& m);

// φ must have exactly one free variable; returns the codes of the elements a
// with φ(c_a) in the truth class (the truth-definable subset φ^T).
std::vector<Nat> definable_set(const Formula& phi, const TruthTower& tower);

}  // namespace hflab

#endif  // HFLAB_TRUTH_HPP
