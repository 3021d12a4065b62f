#include <doctest.h>

#include "hflab/godel.hpp"
#include "hflab/proofs.hpp"

using namespace hflab;

namespace {

Formula fs(const std::string& text) { return parse_formula(text, Sig::Set); }

// ⊢ ¬A ∨ A for atomic A, the 2-node derivation
ProofTree excluded_middle(const Formula& a) {
  Formula na = Formula::lnot(a);
  Formula em = Formula::lor(na, a);
  ProofTree leaf = ProofTree::ax(Sequent({a, na}));
  return ProofTree::or_intro(Sequent({em}), em, leaf);
}

// χ from Φ = {ψ, ¬ψ∨χ} with one cut; 6 nodes
ProofTree modus_ponens(const Formula& psi, const Formula& chi) {
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  Formula not_p2 = Formula::lnot(premise2);
  Formula nn_psi = Formula::lnot(Formula::lnot(psi));

  ProofTree use_p2 = ProofTree::assumption(Sequent({chi, premise2}), premise2);
  ProofTree use_psi = ProofTree::assumption(Sequent({chi, psi}), psi);
  ProofTree left = ProofTree::not_not(Sequent({chi, nn_psi}), nn_psi, use_psi);
  ProofTree right = ProofTree::ax(Sequent({chi, Formula::lnot(chi)}));
  ProofTree split = ProofTree::and_split(Sequent({chi, not_p2}), not_p2, left, right);
  return ProofTree::cut(Sequent({chi}), premise2, use_p2, split);
}

}  // namespace

TEST_CASE("check_proof accepts the excluded-middle derivation") {
  Formula a = fs("(in (c 0) (c 1))");
  ProofTree em = excluded_middle(a);
  CHECK(em.node_count() == 2);
  CHECK(check_proof(em, {}, Formula::lor(Formula::lnot(a), a)));

  // same tree against the wrong goal
  std::string why;
  CHECK_FALSE(check_proof(em, {}, a, &why));
  CHECK(why.find("root sequent") != std::string::npos);
}

TEST_CASE("check_proof validates the modus ponens fixture") {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  ProofTree mp = modus_ponens(psi, chi);
  CHECK(mp.node_count() == 6);
  CHECK(mp.cut_count() == 1);
  CHECK(check_proof(mp, {psi, premise2}, chi));

  // assumption set without ψ invalidates the leaf
  std::string why;
  CHECK_FALSE(check_proof(mp, {premise2}, chi, &why));
  CHECK(why.find("assumption") != std::string::npos);
}

TEST_CASE("cut elimination on the fixtures") {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  std::vector<Formula> phi = {psi, premise2};

  // cut-free input is returned unchanged
  ProofTree em = excluded_middle(psi);
  CHECK(eliminate_cuts(em).raw() == em.raw());

  ProofTree mp = modus_ponens(psi, chi);
  BlowupStats stats;
  ProofTree clean = eliminate_cuts(mp, &stats);
  CHECK(clean.cut_count() == 0);
  CHECK(check_proof(clean, phi, chi));
  CHECK(has_subformula_property(clean, phi, chi));
  CHECK(stats.input_nodes == 6);
  CHECK(stats.output_nodes == clean.node_count());
  CHECK(stats.max_cut_rank == premise2.depth());
  // the rank-3 reference curve is already beyond materialization; the
  // comparison applies whenever the bound can be written down
  CHECK((stats.astronomical || Nat(stats.output_nodes) <= stats.reference_bound));
}

TEST_CASE("three stacked cuts eliminate and respect the reference curve") {
  Formula psi = fs("(= (c 2) (c 2))");
  Formula chi = fs("(in (c 0) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  std::vector<Formula> phi = {psi, premise2};

  ProofTree inner = modus_ponens(psi, chi);
  Formula theta = Formula::lor(psi, chi);
  ProofTree tree3 = ProofTree::cut(Sequent({chi}), theta, inner, inner);
  CHECK(tree3.cut_count() == 3);
  CHECK(check_proof(tree3, phi, chi));

  BlowupStats stats;
  ProofTree clean = eliminate_cuts(tree3, &stats);
  CHECK(clean.cut_count() == 0);
  CHECK(check_proof(clean, phi, chi));
  CHECK(has_subformula_property(clean, phi, chi));
  CHECK((stats.astronomical || Nat(stats.output_nodes) <= stats.reference_bound));
}

TEST_CASE("an atomic-rank cut stays under its materializable reference bound") {
  Formula a = fs("(in (c 0) (c 1))");
  Formula b = fs("(= (c 2) (c 3))");
  Formula em = Formula::lor(Formula::lnot(a), a);
  ProofTree left = ProofTree::or_intro(Sequent({em, b}), em,
                                       ProofTree::ax(Sequent({a, Formula::lnot(a), b})));
  ProofTree right = ProofTree::or_intro(
      Sequent({em, Formula::lnot(b)}), em,
      ProofTree::ax(Sequent({a, Formula::lnot(a), Formula::lnot(b)})));
  ProofTree cut = ProofTree::cut(Sequent({em}), b, left, right);
  CHECK(check_proof(cut, {}, em));

  BlowupStats stats;
  ProofTree clean = eliminate_cuts(cut, &stats);
  CHECK(clean.cut_count() == 0);
  CHECK(check_proof(clean, {}, em));
  CHECK(stats.max_cut_rank == 1);
  CHECK_FALSE(stats.astronomical);
  CHECK(stats.reference_bound == nat_pow2(stats.input_nodes));
  CHECK(Nat(stats.output_nodes) <= stats.reference_bound);
}

TEST_CASE("subformula property detects foreign cuts") {
  Formula a = fs("(in (c 0) (c 1))");
  Formula em = Formula::lor(Formula::lnot(a), a);
  ProofTree base = excluded_middle(a);
  CHECK(has_subformula_property(base, {}, em));

  // a cut on a formula foreign to Φ ∪ {ψ}
  Formula foreign = fs("(= (c 5) (c 7))");
  ProofTree lhs = ProofTree::or_intro(Sequent({em, foreign}), em,
                                      ProofTree::ax(Sequent({a, Formula::lnot(a), foreign})));
  ProofTree rhs = ProofTree::or_intro(Sequent({em, Formula::lnot(foreign)}), em,
                                      ProofTree::ax(Sequent({a, Formula::lnot(a),
                                                             Formula::lnot(foreign)})));
  ProofTree cut = ProofTree::cut(Sequent({em}), foreign, lhs, rhs);
  CHECK(check_proof(cut, {}, em));
  CHECK_FALSE(has_subformula_property(cut, {}, em));
  // and the eliminated form regains it
  ProofTree clean = eliminate_cuts(cut);
  CHECK(has_subformula_property(clean, {}, em));
}

TEST_CASE("instances count as subformulas") {
  // ∃-witness premises are substitution instances of the matrix
  Formula body = fs("(in v0 (c 3))");
  Formula ex = Formula::exists(0, body);
  Formula inst = fs("(in (c 1) (c 3))");
  ProofTree leaf = ProofTree::ax(Sequent({inst, Formula::lnot(inst), ex}));
  ProofTree witness = ProofTree::exists_witness(
      Sequent({ex, Formula::lnot(inst)}), ex, parse_term("(c 1)", Sig::Set), leaf);
  CHECK(has_subformula_property(witness, {Formula::lnot(inst)}, ex));
}

TEST_CASE("bounded search finds the classics") {
  Formula a = fs("(in (c 0) (c 1))");
  Formula em = Formula::lor(Formula::lnot(a), a);
  auto found = bounded_search({}, em, 4);
  REQUIRE(found.has_value());
  CHECK(found->node_count() <= 4);
  CHECK(check_proof(*found, {}, em));

  // unrelated atomic goal is not provable at any size
  Formula b = fs("(in (c 2) (c 3))");
  CHECK_FALSE(bounded_search({a}, b, 12).has_value());

  // modus ponens through the wrapped sequent
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  auto mp = bounded_search({psi, premise2}, chi, 8);
  REQUIRE(mp.has_value());
  CHECK(mp->cut_count() == 0);
  CHECK(check_proof(*mp, {psi, premise2}, chi));
  CHECK(has_subformula_property(*mp, {psi, premise2}, chi));

  // a universally quantified tautology, needs the eigen rule
  Formula taut = parse_formula("(forall v0 (imp (= v0 v0) (= v0 v0)))", Sig::Set);
  auto deep = bounded_search({}, taut, 6);
  REQUIRE(deep.has_value());
  CHECK(check_proof(*deep, {}, taut));

  // an existential tautology instance, needs the witness pool
  Formula ext = parse_formula("(exists v0 (or (not (in v0 (c 1))) (in v0 (c 1))))", Sig::Set);
  auto wit = bounded_search({}, ext, 5);
  REQUIRE(wit.has_value());
  CHECK(check_proof(*wit, {}, ext));

  CHECK_THROWS_AS(bounded_search({}, em, 1000), ResourceError);
}

TEST_CASE("search is deterministic") {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  auto a = bounded_search({psi, premise2}, chi, 10);
  auto b = bounded_search({psi, premise2}, chi, 10);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(proof_to_json(*a, {psi, premise2}, chi, Sig::Set) ==
        proof_to_json(*b, {psi, premise2}, chi, Sig::Set));
}

TEST_CASE("supexp") {
  CHECK(supexp(0) == 1);
  CHECK(supexp(1) == 2);
  CHECK(supexp(2) == 4);
  CHECK(supexp(3) == 16);
  CHECK(supexp(4) == 65536);
  CHECK(nat_bit_length(supexp(5)) == 65537);  // 2^65536
  CHECK_THROWS_AS(supexp(6), ResourceError);
}

TEST_CASE("proof codes dominate the codes of the assumptions used") {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  ProofTree mp = modus_ponens(psi, chi);
  Nat code = proof_code(mp);
  CHECK(code > godel_code(psi));
  CHECK(code > godel_code(premise2));
  CHECK(code > godel_code(chi));
}

TEST_CASE("proof JSON round trip") {
  Formula psi = fs("(in (c 0) (c 1))");
  Formula chi = fs("(in (c 1) (c 3))");
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  ProofTree mp = modus_ponens(psi, chi);

  std::string payload = proof_to_json(mp, {psi, premise2}, chi, Sig::Set);
  ProofFile file = proof_from_json(payload);
  CHECK(file.sig == Sig::Set);
  CHECK(file.goal == chi);
  REQUIRE(file.assumptions.size() == 2);
  CHECK(check_proof(file.tree, file.assumptions, file.goal));
  CHECK(proof_to_json(file.tree, file.assumptions, file.goal, file.sig) == payload);

  CHECK_THROWS_AS(proof_from_json("{ not json"), ArtifactError);
  CHECK_THROWS_AS(proof_from_json("{\"signature\":\"set\"}"), ArtifactError);
}

TEST_CASE("eigencondition violations are rejected") {
  // ∃v1∀v0(v0 = v1) "proved" by taking the existential witness to be the
  // very variable the eigen rule then generalizes — a classic bogus proof.
  Formula goal = parse_formula("(exists v1 (forall v0 (= v0 v1)))", Sig::Set);
  Formula instance = instantiate(goal.child(0), goal.bound_var(), Term::var(9999));
  // instance = ¬∃v0¬(v0 = v9999)
  Formula ex = instance.child(0);
  Formula premise_formula =
      Formula::lnot(instantiate(ex.child(0), ex.bound_var(), Term::var(9999)));

  Sequent mid = Sequent({goal, instance});
  ProofTree leaf = ProofTree::ax(mid.with(premise_formula));
  ProofTree eigen_node = ProofTree::forall_eigen(mid, instance, 9999, leaf);
  ProofTree bogus =
      ProofTree::exists_witness(Sequent({goal}), goal, Term::var(9999), eigen_node);

  std::string why;
  CHECK_FALSE(check_proof(bogus, {}, goal, &why));
  CHECK(why.find("eigenvariable") != std::string::npos);
}
