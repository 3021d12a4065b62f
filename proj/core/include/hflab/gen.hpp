#ifndef HFLAB_GEN_HPP
#define HFLAB_GEN_HPP

#include <vector>

#include "hflab/formula.hpp"
#include "hflab/rng.hpp"

namespace hflab {

struct FormulaGenOptions {
  Sig sig = Sig::Set;
  uint32_t max_depth = 6;
  uint64_t max_nodes = 48;
  std::vector<Nat> constants;  // constant pool (Set); defaults to codes 0..15
  uint32_t max_numeral = 4;    // Arith numerals 0..max
};

// Seeded random formulas. Binders use canonical indices (the quantifier at
// nesting level d binds v_d); bodies pick among the variables in scope.
class FormulaGen {
 public:
  FormulaGen(FormulaGenOptions opt, uint64_t seed) : opt_(std::move(opt)), rng_(seed) {
    if (opt_.sig == Sig::Set && opt_.constants.empty())
      for (unsigned long i = 0; i < 16; ++i) opt_.constants.emplace_back(i);
  }

  Formula sentence() { return gen(opt_.max_depth, 0); }

  Formula open_formula(uint32_t scope) { return gen(opt_.max_depth, scope); }

 private:
  Term gen_set_term(uint32_t scope) {
    if (scope > 0 && rng_.chance(1, 3)) return Term::var(rng_.below(scope));
    return Term::constant(opt_.constants[rng_.below(opt_.constants.size())]);
  }

  Term gen_arith_term(uint32_t scope, uint32_t size_left) {
    if (size_left <= 1 || rng_.chance(1, 2)) {
      if (scope > 0 && rng_.chance(1, 3)) return Term::var(rng_.below(scope));
      return Term::numeral(rng_.below(opt_.max_numeral + 1));
    }
    switch (rng_.below(3)) {
      case 0: return Term::succ(gen_arith_term(scope, size_left - 1));
      case 1: return Term::add(gen_arith_term(scope, size_left / 2), gen_arith_term(scope, size_left / 2));
      default:
        return Term::mul(gen_arith_term(scope, size_left / 2), gen_arith_term(scope, size_left / 2));
    }
  }

  Formula gen_atom(uint32_t scope) {
    if (opt_.sig == Sig::Set) {
      Term a = gen_set_term(scope);
      Term b = gen_set_term(scope);
      return rng_.chance(1, 2) ? Formula::eq(a, b, Sig::Set) : Formula::in(a, b);
    }
    Term a = gen_arith_term(scope, 4);
    Term b = gen_arith_term(scope, 4);
    return Formula::eq(a, b, Sig::Arith);
  }

  Formula gen(uint32_t depth_left, uint32_t scope) {
    if (depth_left <= 1) return gen_atom(scope);
    switch (rng_.below(10)) {
      case 0:
      case 1:
      case 2: return gen_atom(scope);
      case 3:
      case 4: return Formula::lnot(gen(depth_left - 1, scope));
      case 5:
      case 6: {
        Formula a = gen(depth_left - 1, scope);
        Formula b = gen(depth_left - 1, scope);
        return Formula::lor(a, b);
      }
      default: return Formula::exists(scope, gen(depth_left - 1, scope + 1));
    }
  }

  FormulaGenOptions opt_;
  Rng rng_;
};

}  // namespace hflab

#endif  // HFLAB_GEN_HPP
