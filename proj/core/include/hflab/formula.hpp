#ifndef HFLAB_FORMULA_HPP
#define HFLAB_FORMULA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hflab/errors.hpp"
#include "hflab/nat.hpp"

namespace hflab {

// Three term/formula languages share one syntax tree:
//   Arith  - 0, S, +, * and equality; numerals are S^n(0).
//   Set    - equality, membership, and one constant c_a per set code a.
//   NatRel - the relational image of Set under the bit-membership
//            translation: equality, AckMem, variables and numerals.
enum class Sig : uint8_t { Arith = 0, Set = 1, NatRel = 2 };

enum class TermKind : uint8_t { Var, Const, Zero, Succ, Add, Mul };

// Primitive connectives are exactly ¬, ∨, ∃; ∧, ∀, → are parse-time sugar.
enum class FormulaKind : uint8_t { Eq, In, AckMem, Not, Or, Exists };

namespace detail {
struct TermNode;
struct FormulaNode;
}  // namespace detail

// Immutable, hash-consed term. Copies are pointer copies; == is identity,
// which coincides with structural equality because of interning.
class Term {
 public:
  Term() : node_(nullptr) {}

  static Term var(uint32_t index);
  static Term constant(const Nat& code);  // Set signature constant c_a
  static Term zero();
  static Term succ(Term t);
  static Term add(Term a, Term b);
  static Term mul(Term a, Term b);
  static Term numeral(const Nat& n);  // S^n(0); n must fit in unsigned long

  TermKind kind() const;
  uint32_t var_index() const;
  const Nat& const_code() const;
  Term child(int i) const;
  int arity() const;

  uint32_t node_count() const;
  bool closed() const;
  const std::vector<uint32_t>& free_vars() const;  // sorted, unique
  uint32_t max_var_excl() const;                   // 1 + largest index, 0 if none
  bool valid_in(Sig sig) const;

  bool operator==(const Term& o) const { return node_ == o.node_; }
  bool operator!=(const Term& o) const { return node_ != o.node_; }
  explicit operator bool() const { return node_ != nullptr; }
  const detail::TermNode* raw() const { return node_; }

 private:
  explicit Term(const detail::TermNode* n) : node_(n) {}
  const detail::TermNode* node_;
  friend class Formula;
  friend struct detail::FormulaNode;
  friend Term intern_term(detail::TermNode&&);
};

// Immutable, hash-consed first-order formula over one signature.
//
// Invariants enforced at construction:
//   - In only under Set, AckMem only under NatRel, Const only under Set,
//     0/S under Arith or NatRel, +/* only under Arith.
//   - Both children of a connective carry the same signature.
class Formula {
 public:
  Formula() : node_(nullptr) {}

  static Formula eq(Term a, Term b, Sig sig);
  static Formula in(Term a, Term b);
  static Formula ack_mem(Term a, Term b);
  static Formula lnot(Formula f);
  static Formula lor(Formula a, Formula b);
  static Formula exists(uint32_t var, Formula body);

  // Sugar, expanded immediately:
  //   a∧b = ¬(¬a∨¬b),  a→b = ¬a∨b,  ∀v.f = ¬∃v¬f,  a↔b = (a→b)∧(b→a).
  static Formula land(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula forall(uint32_t var, Formula body);
  static Formula iff(Formula a, Formula b);

  FormulaKind kind() const;
  Sig sig() const;
  bool atomic() const;
  Term term(int i) const;        // atoms
  Formula child(int i) const;    // Not/Or/Exists
  uint32_t bound_var() const;    // Exists

  // Length of the longest path in the parsing tree: atoms have depth 1,
  // Not/Exists add 1, Or adds 1 over the max of its children. Terms do not
  // contribute.
  uint32_t depth() const;
  // Total tree size, formula nodes plus term nodes.
  uint64_t node_count() const;
  bool closed() const;
  const std::vector<uint32_t>& free_vars() const;
  uint32_t max_var_excl() const;

  std::vector<Formula> immediate_subformulas() const;

  bool operator==(const Formula& o) const { return node_ == o.node_; }
  bool operator!=(const Formula& o) const { return node_ != o.node_; }
  explicit operator bool() const { return node_ != nullptr; }
  const detail::FormulaNode* raw() const { return node_; }

 private:
  explicit Formula(const detail::FormulaNode* n) : node_(n) {}
  const detail::FormulaNode* node_;
  friend Formula intern_formula(detail::FormulaNode&&);
};

struct TermHash {
  size_t operator()(const Term& t) const { return std::hash<const void*>{}(t.raw()); }
};
struct FormulaHash {
  size_t operator()(const Formula& f) const { return std::hash<const void*>{}(f.raw()); }
};

// Deterministic structural total order (independent of interning addresses);
// used wherever reproducible iteration order matters.
int compare(const Term& a, const Term& b);
int compare(const Formula& a, const Formula& b);
struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};

// S-expression front end. Grammar:
//   <f> ::= (= <t> <t>) | (in <t> <t>) | (ackmem <t> <t>) | (not <f>)
//         | (or <f> <f>) | (exists vN <f>)
//         | (and <f> <f>) | (imp <f> <f>) | (forall vN <f>)     [sugar]
//   <t> ::= vN | (c <nat>) | (num 0) | (S <t>) | (+ <t> <t>) | (* <t> <t>)
// Whitespace-insensitive; errors carry byte offsets.
Formula parse_formula(const std::string& text, Sig sig);
Term parse_term(const std::string& text, Sig sig);
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

// Replaces every free occurrence of `var` by the closed term `t`; bound
// occurrences are untouched. Throws DomainError if t is open.
Formula substitute(const Formula& f, uint32_t var, const Term& t);

// Proof-kernel variant: t may contain variables. Capture is checked, not
// avoided; substituting under a binder that would capture a variable of t
// throws SignatureError.
Formula instantiate(const Formula& f, uint32_t var, const Term& t);

// A decidable formula family closed under immediate subformulas: formulas of
// one signature with depth ≤ bound and, optionally, at most one free
// variable. Families of this shape contain every closed formula they admit.
class FormulaFamily {
 public:
  static FormulaFamily depth_family(Sig sig, uint32_t depth_bound);
  static FormulaFamily unary_depth_family(Sig sig, uint32_t depth_bound);

  bool contains(const Formula& f) const;
  uint32_t depth_bound() const { return depth_bound_; }
  Sig sig() const { return sig_; }

 private:
  FormulaFamily(Sig sig, uint32_t depth_bound, bool unary)
      : sig_(sig), depth_bound_(depth_bound), unary_(unary) {}
  Sig sig_;
  uint32_t depth_bound_;
  bool unary_;
};

// True iff f is a sentence obtained by substituting closed terms (Arith) or
// constants c_a (Set) into some member of the family. Because the families
// used here contain all closed formulas they admit, this reduces to: f is
// closed and f itself is in the family.
bool is_fsent(const Formula& f, const FormulaFamily& family);

}  // namespace hflab

#endif  // HFLAB_FORMULA_HPP
