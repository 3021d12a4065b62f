#include <doctest.h>

#include <algorithm>

#include "hflab/formula.hpp"
#include "hflab/gen.hpp"
#include "hflab/godel.hpp"

using namespace hflab;

namespace {

Term c(unsigned long n) { return Term::constant(Nat(n)); }
Term v(uint32_t i) { return Term::var(i); }

}  // namespace

TEST_CASE("parse builds the expected trees") {
  Formula f = parse_formula("(in (c 0) (c 1))", Sig::Set);
  CHECK(f == Formula::in(c(0), c(1)));

  // ∀v φ expands to ¬∃v¬φ
  Formula g = parse_formula("(forall v0 (= v0 v0))", Sig::Set);
  CHECK(g == Formula::lnot(Formula::exists(0, Formula::lnot(Formula::eq(v(0), v(0), Sig::Set)))));

  Formula h = parse_formula("(= (S (num 0)) (+ (num 0) (S (num 0))))", Sig::Arith);
  Term one = Term::succ(Term::zero());
  CHECK(h == Formula::eq(one, Term::add(Term::zero(), one), Sig::Arith));

  // remaining sugar
  CHECK(parse_formula("(and (= v0 v0) (= v1 v1))", Sig::Set) ==
        Formula::land(Formula::eq(v(0), v(0), Sig::Set), Formula::eq(v(1), v(1), Sig::Set)));
  CHECK(parse_formula("(imp (= v0 v0) (= v1 v1))", Sig::Set) ==
        Formula::imp(Formula::eq(v(0), v(0), Sig::Set), Formula::eq(v(1), v(1), Sig::Set)));
}

TEST_CASE("parse reports positions and signature violations") {
  CHECK_THROWS_AS(parse_formula("(in (c 0)", Sig::Set), ParseError);
  CHECK_THROWS_AS(parse_formula("(bogus v0 v0)", Sig::Set), ParseError);
  CHECK_THROWS_AS(parse_formula("(in v0 v1)", Sig::Arith), SignatureError);
  CHECK_THROWS_AS(parse_formula("(= (c 0) (c 0))", Sig::Arith), SignatureError);
  CHECK_THROWS_AS(parse_formula("(= (num 0) (num 0))", Sig::Set), SignatureError);
  CHECK_THROWS_AS(parse_formula("(ackmem v0 v1)", Sig::Set), SignatureError);

  try {
    parse_formula("(or (= v0 v0) (= v0 v0)   extra", Sig::Set);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("depth follows the parsing tree, terms contribute nothing") {
  CHECK(Formula::eq(c(0), c(1), Sig::Set).depth() == 1);
  CHECK(Formula::lnot(Formula::eq(c(0), c(1), Sig::Set)).depth() == 2);
  Formula f = Formula::lor(Formula::lnot(Formula::in(v(0), v(1))),
                           Formula::eq(v(0), v(1), Sig::Set));
  CHECK(f.depth() == 3);

  // deep terms, still an atom
  Formula g = parse_formula("(= (S (S (S (num 0)))) (num 0))", Sig::Arith);
  CHECK(g.depth() == 1);
}

TEST_CASE("depth recursion invariant on random formulas") {
  FormulaGen gen({}, 0xD5EED01u);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.sentence();
    uint32_t max_child = 0;
    for (const auto& sub : f.immediate_subformulas()) max_child = std::max(max_child, sub.depth());
    CHECK(f.depth() == 1 + max_child);
  }
}

TEST_CASE("immediate subformulas") {
  Formula a = Formula::eq(c(0), c(1), Sig::Set);
  CHECK(a.immediate_subformulas().empty());
  Formula b = Formula::in(v(0), c(3));
  Formula o = Formula::lor(a, b);
  REQUIRE(o.immediate_subformulas().size() == 2);
  CHECK(o.immediate_subformulas()[0] == a);
  CHECK(o.immediate_subformulas()[1] == b);
  Formula e = Formula::exists(0, b);
  REQUIRE(e.immediate_subformulas().size() == 1);
  CHECK(e.immediate_subformulas()[0] == b);
}

TEST_CASE("print then parse is the identity") {
  FormulaGenOptions set_opt;
  FormulaGen set_gen(set_opt, 0x5EED1);
  for (int i = 0; i < 500; ++i) {
    Formula f = set_gen.sentence();
    CHECK(parse_formula(print_formula(f), Sig::Set) == f);
  }
  FormulaGenOptions arith_opt;
  arith_opt.sig = Sig::Arith;
  FormulaGen arith_gen(arith_opt, 0x5EED2);
  for (int i = 0; i < 200; ++i) {
    Formula f = arith_gen.sentence();
    CHECK(parse_formula(print_formula(f), Sig::Arith) == f);
  }
}

TEST_CASE("godel codes: monotone, depth-dominating, invertible") {
  FormulaGen gen({}, 0x60D31);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen.sentence();
    Nat code = godel_code(f);
    CHECK(code >= f.depth());
    for (const auto& sub : f.immediate_subformulas()) CHECK(godel_code(sub) < code);
    auto back = godel_decode(code);
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  // code(ψ) < code(¬ψ) in particular
  Formula atom = Formula::eq(c(2), c(2), Sig::Set);
  CHECK(godel_code(atom) < godel_code(Formula::lnot(atom)));
}

TEST_CASE("godel decode rejects junk and distinguishes signatures") {
  int valid = 0;
  for (unsigned long x = 0; x < 4000; ++x) {
    auto f = godel_decode(Nat(x));
    if (f) {
      ++valid;
      CHECK(godel_code(*f) == x);
    }
  }
  CHECK(valid > 0);

  Formula set_refl = Formula::eq(v(0), v(0), Sig::Set);
  Formula arith_refl = Formula::eq(v(0), v(0), Sig::Arith);
  CHECK(godel_code(set_refl) != godel_code(arith_refl));
  CHECK(*godel_decode(godel_code(set_refl)) == set_refl);
  CHECK(*godel_decode(godel_code(arith_refl)) == arith_refl);
}

TEST_CASE("substitute replaces free occurrences only") {
  Formula f = Formula::in(v(0), c(3));
  CHECK(substitute(f, 0, c(1)) == Formula::in(c(1), c(3)));

  Formula g = Formula::exists(0, Formula::eq(v(0), v(1), Sig::Set));
  CHECK(substitute(g, 0, c(2)) == g);  // v0 is bound

  Formula h = Formula::eq(v(0), v(0), Sig::Arith);
  Term two = Term::numeral(2);
  CHECK(substitute(h, 0, two) == Formula::eq(two, two, Sig::Arith));

  CHECK_THROWS_AS(substitute(f, 0, v(5)), DomainError);  // open replacement
}

TEST_CASE("substitution preserves depth") {
  FormulaGen gen({}, 0x5B5B);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.open_formula(1);
    Formula g = substitute(f, 0, c(7));
    CHECK(g.depth() == f.depth());
  }
}

TEST_CASE("is_fsent") {
  auto depth1 = FormulaFamily::depth_family(Sig::Set, 1);
  CHECK(is_fsent(Formula::in(c(0), c(1)), depth1));
  CHECK_FALSE(is_fsent(Formula::in(v(0), c(1)), depth1));  // free variable
  CHECK_FALSE(is_fsent(Formula::lnot(Formula::in(c(0), c(0))), depth1));  // depth 2

  auto unary3 = FormulaFamily::unary_depth_family(Sig::Set, 3);
  CHECK(unary3.contains(Formula::in(v(0), c(1))));
  CHECK_FALSE(unary3.contains(Formula::eq(v(0), v(1), Sig::Set)));  // two free vars
}
