#ifndef HFLAB_SCHEMES_HPP
#define HFLAB_SCHEMES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hflab/formula.hpp"
#include "hflab/truth.hpp"

namespace hflab {

enum class SchemeKind : uint8_t { Induction, Replacement, Reflection };

// One generated axiom-scheme instance. Regeneration from (kind, generator)
// is deterministic. Reflection instances keep their provability predicate at
// the meta level, so `instance` is empty for them and `rendered` carries the
// `(refl <theory> <formula>)` extension syntax instead.
struct SchemeInstance {
  SchemeKind kind;
  Formula generator;
  Formula instance;
  std::string theory;
  std::string rendered;
};

// A finitely axiomatized theory plus the reflection pseudo-axioms layered on
// top of it by the tower construction. Only `axioms` take part in proof
// search; reflection instances are bookkeeping (their provability predicate
// is the meta-level searcher, not an object symbol).
struct TheorySpec {
  std::string label;
  Sig sig = Sig::Arith;
  std::vector<Formula> axioms;
  std::vector<SchemeInstance> reflection_axioms;

  size_t axiom_count() const { return axioms.size() + reflection_axioms.size(); }
};

// φ(0) ∧ ∀x(φ(x) → φ(Sx)) → ∀x φ(x), desugared to the primitives.
// ArityError unless φ is arithmetic with exactly one free variable.
Formula induction_instance(const Formula& phi);

// Variable convention for replacement batteries: x = v0, y = v1, z = v2
// (z optional, and y may be unconstrained). ArityError on other variables.
//
// The conditional instance, universally closed over the parameter:
//   ∀z [ ∀x∃!y φ(x,y,z) → ∀v ∃w ∀y (y ∈ w ↔ ∃x(x ∈ v ∧ φ(x,y,z))) ]
Formula replacement_instance(const Formula& phi);
// The unconditional image-existence part alone — at finite scale this is the
// informative sentence, since rank overflow falsifies it while leaving the
// conditional form vacuously true.
Formula replacement_consequent(const Formula& phi);

SchemeInstance make_induction(const Formula& phi);
SchemeInstance make_replacement(const Formula& phi);
SchemeInstance make_reflection(const std::string& theory_label, const Formula& phi);

// ------------------------------------------------------------- reflection

struct ReflectionVerdict {
  SchemeInstance instance;
  unsigned long values_tested = 0;
  unsigned long provable = 0;           // how many φ(n̄) the searcher proved
  std::vector<unsigned long> failures;  // n with φ(n̄) provable but false
  bool vacuous() const { return provable == 0; }
  bool pass() const { return failures.empty(); }
};

// For each battery formula φ(x): emits REF_U's instance for φ and audits it
// semantically — whenever bounded search proves φ(n̄) from U's axioms within
// the size ceiling, evaluation must confirm φ(n). Battery formulas must be
// quantifier-free apart from their one free variable.
std::vector<ReflectionVerdict> reflection_instances(const TheorySpec& u,
                                                    const std::vector<Formula>& battery,
                                                    uint64_t size_ceiling,
                                                    unsigned long max_value = 5);

// REF^0(U) = U; each next level adds the battery's reflection instances to
// the axiom list (as pseudo-axioms; see TheorySpec).
std::vector<TheorySpec> ref_tower(const TheorySpec& u, const std::vector<Formula>& battery,
                                  uint32_t levels);

// --------------------------------------------------------- internal audits

enum class ReplacementStatus : uint8_t { Holds, Boundary, ReachExceeded, Mismatch };

struct ReplacementVerdict {
  Formula generator;
  std::optional<bool> conditional_member;  // conditional instance in the truth class
  std::optional<bool> image_member;  // unconditional image-existence sentence
  std::optional<uint32_t> overflow_rank;  // set-level oracle, when images escape
  ReplacementStatus status = ReplacementStatus::Mismatch;
};

// Replacement audit over the tower: the conditional conditional instances are
// expected in the truth class without exception; the unconditional image
// sentences fail exactly at the domain boundary, flagged with the offending
// rank by an independent set-level image oracle.
std::vector<ReplacementVerdict> audit_replacement(const TruthTower& tower,
                                                  const std::vector<Formula>& battery);

struct InductionVerdict {
  Formula generator;
  Formula translated;  // the set-signature image of the induction instance
  std::optional<bool> member;
  bool agrees_with_eval = false;
};

// Internal-induction analog: induction instances travel through the
// arithmetic→set translation and their tower membership is checked against
// direct evaluation.
std::vector<InductionVerdict> audit_induction(const TruthTower& tower,
                                              const std::vector<Formula>& battery);

// -------------------------------------------------------------- artifacts

std::string theory_to_json(const TheorySpec& t);
TheorySpec theory_from_json(const std::string& payload);
std::string battery_to_json(Sig sig, const std::vector<Formula>& battery);
std::pair<Sig, std::vector<Formula>> battery_from_json(const std::string& payload);

// The documented sample theories the CLI and the test batteries use.
TheorySpec sample_sound_theory();
TheorySpec sample_unsound_theory();
std::vector<Formula> sample_reflection_battery();
std::vector<Formula> sample_replacement_battery();

}  // namespace hflab

#endif  // HFLAB_SCHEMES_HPP
