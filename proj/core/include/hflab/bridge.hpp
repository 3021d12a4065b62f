#ifndef HFLAB_BRIDGE_HPP
#define HFLAB_BRIDGE_HPP

#include <string>
#include <vector>

#include "hflab/eval.hpp"
#include "hflab/formula.hpp"
#include "hflab/structure.hpp"

namespace hflab {

// Structural von Neumann ordinal n (0 = ∅, n+1 = n ∪ {n}).
HFSet ordinal_set(unsigned long n);

// Its Ackermann code: 0, 1, 3, 11, 2059, ... The code of the 6th ordinal has
// 2^2059 bits and cannot be materialized; ResourceError past that point.
Nat nat_to_ordinal(unsigned long n);

// Set-signature defining formulas for the arithmetic primitives over
// hereditarily finite sets. Addition and multiplication graphs assert the
// existence of a finite recursion function (itself an HF set); the embedded
// quantifier machinery (Kuratowski pairs, function application) keeps every
// other variable bounded. Validated empirically, not quoted from anywhere.
class TranslationTable {
 public:
  static constexpr int kVersion = 1;
  // designated free variables of the defining formulas
  static constexpr uint32_t kX = 100;
  static constexpr uint32_t kY = 101;
  static constexpr uint32_t kZ = 102;

  static const TranslationTable& standard();

  const Formula& is_ordinal() const { return is_ordinal_; }  // free: X
  const Formula& is_zero() const { return is_zero_; }        // free: X
  const Formula& succ_graph() const { return succ_graph_; }  // free: X, Y; Y = S(X)
  const Formula& add_graph() const { return add_graph_; }    // free: X, Y, Z; X+Y=Z
  const Formula& mul_graph() const { return mul_graph_; }    // free: X, Y, Z; X*Y=Z
  int version() const { return version_; }

  std::string to_sexp_file() const;
  static TranslationTable from_sexp_file(const std::string& text);

 private:
  TranslationTable() = default;
  int version_ = kVersion;
  Formula is_ordinal_, is_zero_, succ_graph_, add_graph_, mul_graph_;
};

// Set → relational-arithmetic: every x∈y atom becomes the designated AckMem
// relation, = is untouched, constants c_a are carried through as the numeral
// of a's code, quantifiers range over naturals.
Formula zf_to_pa(const Formula& set_formula);

// Evaluation of the relational image with quantifiers bounded below `bound`.
bool eval_relational(const Formula& f, const Nat& bound);

// Arithmetic → set: terms are flattened to relational form (each compound
// subterm introduces an existentially quantified variable constrained by its
// graph formula), quantifiers are relativized to "is a finite ordinal", and
// numerals of value ≤ kMaxOrdinalConstant short-circuit to the constant
// c_{ordinal code}.
inline constexpr unsigned long kMaxOrdinalConstant = 5;
Formula pa_to_zf(const Formula& arith_formula,
                 const TranslationTable& table = TranslationTable::standard());

// Finite transitive structure that contains the von Neumann ordinals up to
// max_value together with every recursion-function witness the graph
// formulas can call for at those values. pa_to_zf images of sentences with
// values ≤ max_value evaluate exactly over this structure; no rank cap that
// contains even the 6th ordinal is enumerable.
FiniteStructure bridge_structure(unsigned long max_value);

struct TableReport {
  uint64_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Brute-force validation of the table against ordinal arithmetic with all
// arguments ≤ max_value.
TableReport validate_table(const TranslationTable& table, unsigned long max_value,
                           EvalCache* cache = nullptr);

}  // namespace hflab

#endif  // HFLAB_BRIDGE_HPP
