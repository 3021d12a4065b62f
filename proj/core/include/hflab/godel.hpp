#ifndef HFLAB_GODEL_HPP
#define HFLAB_GODEL_HPP

#include <optional>

#include "hflab/formula.hpp"
#include "hflab/nat.hpp"

namespace hflab {

// Injective formula numbering with the two dominance properties everything
// downstream relies on:
//   - code(ψ) < code(φ) whenever ψ is an immediate subformula of φ,
//   - depth(φ) ≤ code(φ).
//
// The scheme reads the preorder token stream of the tree as one number in a
// mixed-radix system (each grammar position has its own radix), then folds
// the signature into the bottom: code = 3·value + sig + 1. Small sentences
// get small codes, which keeps bit-table prefixes over codes informative.
Nat godel_code(const Formula& f);

// Inverse: full round trip godel_decode(godel_code(f)) == f. Values that are
// not codes of well-formed formulas yield nullopt.
std::optional<Formula> godel_decode(const Nat& code);

}  // namespace hflab

#endif  // HFLAB_GODEL_HPP
