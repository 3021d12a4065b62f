// Acceptance suite. Each criterion prints exactly one PASS/FAIL line with
// its wall time; tolerances, budgets and deadlines are pinned here. The
// binary exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hflab/artifact.hpp"
#include "hflab/bridge.hpp"
#include "hflab/gen.hpp"
#include "hflab/godel.hpp"
#include "hflab/proofs.hpp"
#include "hflab/schemes.hpp"
#include "hflab/truth.hpp"

using namespace hflab;

namespace {

constexpr uint64_t kSeed = 0xACCE97ull;  // fixed; all randomized parts derive from it

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int g_failures = 0;

void criterion(int id, const std::string& label, double deadline_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (deadline_s > 0 && secs > deadline_s)
    out.require(false, "deadline " + std::to_string(deadline_s) + "s exceeded");
  std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, label.c_str(),
              secs, out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++g_failures;
}

// set-level membership oracle, independent of the bit relation
bool set_level_mem(const Nat& x, const Nat& c) {
  HFSet sx = ack_decode(x);
  for (const auto& ch : ack_decode(c).children())
    if (ch == sx) return true;
  return false;
}

Formula fset(const std::string& text) { return parse_formula(text, Sig::Set); }

// ------------------------------------------------------ proof fixtures

struct Fixture {
  std::string name;
  std::vector<Formula> assumptions;
  Formula goal;
  ProofTree tree;
};

ProofTree mp_tree(const Formula& psi, const Formula& chi) {
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

Fixture make_mp(const std::string& name, const Formula& psi, const Formula& chi) {
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  return {name, {psi, premise2}, chi, mp_tree(psi, chi)};
}

Fixture make_stacked(const std::string& name, const Formula& psi, const Formula& chi) {
  Formula premise2 = Formula::lor(Formula::lnot(psi), chi);
  ProofTree inner = mp_tree(psi, chi);
  Formula theta = Formula::lor(psi, chi);
  ProofTree tree = ProofTree::cut(Sequent({chi}), theta, inner, inner);
  return {name, {psi, premise2}, chi, tree};
}

Fixture make_atomic_cut(const std::string& name, const Formula& a, const Formula& b) {
  Formula em = Formula::lor(Formula::lnot(a), a);
  ProofTree left = ProofTree::or_intro(Sequent({em, b}), em,
                                       ProofTree::ax(Sequent({a, Formula::lnot(a), b})));
  ProofTree right = ProofTree::or_intro(
      Sequent({em, Formula::lnot(b)}), em,
      ProofTree::ax(Sequent({a, Formula::lnot(a), Formula::lnot(b)})));
  return {name, {}, em, ProofTree::cut(Sequent({em}), b, left, right)};
}

// cut on an existential tautology, proved outright on the left
Fixture make_exists_cut(const std::string& name, const Formula& chi) {
  Formula atom = fset("(in v0 (c 1))");
  Formula taut = Formula::lor(Formula::lnot(atom), atom);
  Formula theta = Formula::exists(0, taut);
  Term witness = parse_term("(c 1)", Sig::Set);
  Formula inst = substitute(taut, 0, witness);
  Sequent mid({chi, theta, inst});
  ProofTree ax = ProofTree::ax(Sequent(
      {chi, theta, inst, inst.child(0), inst.child(1)}));
  ProofTree orx = ProofTree::or_intro(mid, inst, ax);
  ProofTree left = ProofTree::exists_witness(Sequent({chi, theta}), theta, witness, orx);
  ProofTree right = ProofTree::assumption(Sequent({chi, Formula::lnot(theta)}), chi);
  return {name, {chi}, chi, ProofTree::cut(Sequent({chi}), theta, left, right)};
}

// cut on a universally-shaped true sentence pulled from the assumptions
Fixture make_forall_cut(const std::string& name, const Formula& chi) {
  Formula theta = fset("(not (exists v0 (in v0 (c 0))))");
  ProofTree left = ProofTree::assumption(Sequent({chi, theta}), theta);
  ProofTree right = ProofTree::assumption(Sequent({chi, Formula::lnot(theta)}), chi);
  return {name, {chi, theta}, chi, ProofTree::cut(Sequent({chi}), theta, left, right)};
}

}  // namespace

int main() {
  std::printf("acceptance suite, seed %llu\n", static_cast<unsigned long long>(kSeed));

  // shared structures
  TruthTower tower(DomainSpec::rank_cap(4), 6, 7);
  const FiniteStructure& v4 = tower.structure();

  criterion(1, "Ackermann bijection on codes < 2^16 and sets of rank <= 4", 10, [&](Outcome& o) {
    for (unsigned long n = 0; n < (1ul << 16); ++n) {
      HFSet s = ack_decode(Nat(n));
      if (ack_encode(s) != n) {
        o.require(false, "encode(decode(" + std::to_string(n) + ")) mismatch");
        return;
      }
      if (s.rank() > 4) {
        o.require(false, "decode(" + std::to_string(n) + ") has rank > 4");
        return;
      }
    }
    // the slice is exactly the rank-<=4 stage: the next code leaves it
    o.require(ack_decode(Nat(1ul << 16)).rank() == 5, "code 2^16 should have rank 5");
  });

  criterion(2, "membership transport vs the set level on all code pairs < 2^12", 30,
            [&](Outcome& o) {
              for (unsigned long b = 0; b < (1ul << 12); ++b)
                for (unsigned long a = 0; a < (1ul << 12); ++a)
                  if (ack_mem(Nat(a), Nat(b)) != set_level_mem(Nat(a), Nat(b))) {
                    o.require(false, "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
                    return;
                  }
            });

  criterion(3, "Tarski biconditional: tower membership equals evaluation", 120, [&](Outcome& o) {
    EvalCache cache;
    uint64_t checked = 0;
    for (const auto& f : enumerate_sentences(v4, 7)) {
      if (tower.member(f) != eval_sentence(f, v4, &cache)) {
        o.require(false, "exhaustive disagreement on " + print_formula(f));
        return;
      }
      ++checked;
    }
    o.require(checked > 250000, "exhaustive slice unexpectedly small");
    FormulaGenOptions opt;
    opt.max_depth = 6;
    FormulaGen gen(opt, kSeed);
    for (int i = 0; i < 10000; ++i) {
      Formula f = gen.sentence();
      if (tower.member(f) != eval_sentence(f, v4, &cache)) {
        o.require(false, "random disagreement on " + print_formula(f));
        return;
      }
    }
  });

  criterion(4, "compositional truth clauses (1)-(5) verify exhaustively", 120, [&](Outcome& o) {
    CtReport r = verify_ct(tower.level(6), v4, 6, 7);
    o.require(r.sentences_enumerated > 250000, "enumeration unexpectedly small");
    o.require(r.ok(), r.violations.empty()
                          ? ""
                          : std::to_string(r.violations.size()) + " violations, first: clause " +
                                std::to_string(r.violations[0].clause) + " on " +
                                print_formula(r.violations[0].sentence));
  });

  criterion(5, "independently built level-3 and level-6 strata agree", 60, [&](Outcome& o) {
    TruthTower t3(DomainSpec::rank_cap(4), 3, 7);
    AgreementReport r = check_agreement(t3.level(3), tower.level(6), v4, 7);
    o.require(r.common_depth == 3, "unexpected common depth");
    o.require(r.compared > 0, "nothing compared");
    o.require(r.ok(), std::to_string(r.disagreements.size()) + " disagreements");
  });

  criterion(6, "negation totality: exactly one of each sentence/negation pair", 60,
            [&](Outcome& o) {
              uint64_t checked = 0;
              for (const auto& f : enumerate_sentences(v4, 7)) {
                if (f.depth() + 1 > tower.reach()) continue;
                if (tower.member(f) == tower.member(Formula::lnot(f))) {
                  o.require(false, "both or neither for " + print_formula(f));
                  return;
                }
                ++checked;
              }
              o.require(checked > 0, "nothing checked");
            });

  criterion(7, "faces: disjunctive correctness (width <= 32) and 500 closure triples", 60,
            [&](Outcome& o) {
              TruthTower deep(DomainSpec::rank_cap(4), 8, 5);
              FacesReport r = faces_audit(deep, 32, 500, kSeed);
              o.require(r.dc_checked >= 200, "too few disjunctions audited");
              o.require(r.dc_failures == 0, "DC failures: " + std::to_string(r.dc_failures));
              o.require(r.dc_out_failures == 0,
                        "DC_out failures: " + std::to_string(r.dc_out_failures));
              o.require(r.closure_checked == 500, "closure sample shortfall");
              o.require(r.closure_failures == 0,
                        "closure failures: " + std::to_string(r.closure_failures));
            });

  criterion(8, "piecewise coding agrees with membership below m = 2^14", 60, [&](Outcome& o) {
    const unsigned long m = 1ul << 14;
    Nat table = piecewise_code(tower, Nat(m));
    uint64_t coded = 0;
    for (unsigned long x = 0; x < m; ++x) {
      bool expected = false;
      auto f = godel_decode(Nat(x));
      if (f && f->sig() == Sig::Set && f->closed()) {
        try {
          expected = tower.member(*f);
          ++coded;
        } catch (const DomainError&) {
          expected = false;  // constants outside the structure's language
        }
      }
      if (nat_bit(table, Nat(x)) != expected) {
        o.require(false, "bit " + std::to_string(x) + " disagrees");
        return;
      }
    }
    o.require(coded > 100, "too few coded sentences below 2^14: " + std::to_string(coded));
  });

  criterion(9, "proof pipeline: 12 fixtures eliminate, check, stay true", 120, [&](Outcome& o) {
    std::vector<Fixture> fixtures;
    fixtures.push_back(make_mp("mp-1", fset("(in (c 0) (c 1))"), fset("(in (c 1) (c 3))")));
    fixtures.push_back(make_mp("mp-2", fset("(= (c 2) (c 2))"), fset("(in (c 1) (c 2))")));
    fixtures.push_back(
        make_mp("mp-3", fset("(exists v0 (in v0 (c 3)))"), fset("(in (c 1) (c 3))")));
    fixtures.push_back(
        make_mp("mp-4", fset("(not (in (c 1) (c 0)))"), fset("(= (c 3) (c 3))")));
    fixtures.push_back(
        make_mp("mp-5", fset("(or (in (c 0) (c 1)) (in (c 1) (c 0)))"), fset("(in (c 0) (c 3))")));
    fixtures.push_back(
        make_stacked("stack-1", fset("(in (c 0) (c 1))"), fset("(in (c 1) (c 3))")));
    fixtures.push_back(
        make_stacked("stack-2", fset("(= (c 1) (c 1))"), fset("(in (c 0) (c 3))")));
    fixtures.push_back(
        make_atomic_cut("atomic-1", fset("(in (c 0) (c 1))"), fset("(= (c 2) (c 3))")));
    fixtures.push_back(
        make_atomic_cut("atomic-2", fset("(in (c 1) (c 3))"), fset("(in (c 2) (c 0))")));
    fixtures.push_back(make_exists_cut("exists-1", fset("(in (c 0) (c 1))")));
    fixtures.push_back(make_exists_cut("exists-2", fset("(= (c 0) (c 0))")));
    fixtures.push_back(make_forall_cut("forall-1", fset("(in (c 1) (c 3))")));
    o.require(fixtures.size() >= 10, "fixture corpus too small");

    for (const auto& fx : fixtures) {
      for (const auto& a : fx.assumptions)
        if (!tower.member(a)) {
          o.require(false, fx.name + ": premise not in the truth class");
          return;
        }
      std::string reason;
      if (!check_proof(fx.tree, fx.assumptions, fx.goal, &reason)) {
        o.require(false, fx.name + ": input does not check: " + reason);
        return;
      }
      BlowupStats stats;
      ProofTree clean = eliminate_cuts(fx.tree, &stats);
      if (clean.cut_count() != 0) {
        o.require(false, fx.name + ": cuts remain");
        return;
      }
      if (!check_proof(clean, fx.assumptions, fx.goal, &reason)) {
        o.require(false, fx.name + ": output does not check: " + reason);
        return;
      }
      if (!has_subformula_property(clean, fx.assumptions, fx.goal)) {
        o.require(false, fx.name + ": subformula property lost");
        return;
      }
      if (!tower.member(fx.goal)) {
        o.require(false, fx.name + ": conclusion not in the truth class");
        return;
      }
      if (!stats.astronomical && Nat(stats.output_nodes) > stats.reference_bound) {
        o.require(false, fx.name + ": blow-up exceeds the supexp reference");
        return;
      }
      std::printf("       %-9s in=%3llu out=%4llu rank=%u ref=%s\n", fx.name.c_str(),
                  static_cast<unsigned long long>(stats.input_nodes),
                  static_cast<unsigned long long>(stats.output_nodes), stats.max_cut_rank,
                  stats.astronomical ? "(beyond materialization)"
                                     : nat_str(stats.reference_bound).c_str());
    }
  });

  criterion(10, "consistency probe: no proof of a contradiction at size <= 20", 300,
            [&](Outcome& o) {
              std::vector<Formula> battery;
              // true atomic facts over the first four codes
              for (unsigned long a = 0; a < 4; ++a)
                for (unsigned long b = 0; b < 4; ++b) {
                  Formula eq = fset("(= (c " + std::to_string(a) + ") (c " + std::to_string(b) +
                                    "))");
                  Formula in = fset("(in (c " + std::to_string(a) + ") (c " + std::to_string(b) +
                                    "))");
                  if (a == b) battery.push_back(eq);
                  if (ack_mem(Nat(a), Nat(b))) battery.push_back(in);
                }
              // replacement instances valid in the structure
              battery.push_back(replacement_instance(fset("(= v1 v0)")));
              battery.push_back(replacement_instance(fset("(not (exists v3 (in v3 v1)))")));
              for (const auto& a : battery)
                if (!eval_sentence(a, v4)) {
                  o.require(false, "battery axiom is not true: " + print_formula(a));
                  return;
                }
              Formula falsum = fset("(exists v0 (not (= v0 v0)))");
              auto proof = bounded_search(battery, falsum, 20);
              o.require(!proof.has_value(), "found a proof of the contradiction");
            });

  criterion(11, "bridge transport preserves truth in both directions", 600, [&](Outcome& o) {
    // arithmetic → set: a 50-sentence corpus with values ≤ 8
    FiniteStructure bs = bridge_structure(12);
    EvalCache cache;
    std::vector<std::string> corpus;
    for (unsigned long a = 0; a <= 4; ++a)
      for (unsigned long b = 0; b <= 4; ++b) {
        std::string na = print_term(Term::numeral(a));
        std::string nb = print_term(Term::numeral(b));
        corpus.push_back("(= (+ " + na + " " + nb + ") " + print_term(Term::numeral(a + b)) + ")");
        if (corpus.size() < 46 && a * b <= 8)
          corpus.push_back("(= (* " + na + " " + nb + ") " + print_term(Term::numeral(a * b)) +
                           ")");
      }
    corpus.push_back("(not (= (num 0) (S (num 0))))");
    corpus.push_back("(= (+ (S (num 0)) (S (num 0))) (* (S (num 0)) (S (S (num 0)))))");
    corpus.push_back("(not (= (+ (S (num 0)) (S (num 0))) (S (num 0))))");
    corpus.push_back("(or (= (num 0) (S (num 0))) (= (S (S (num 0))) (S (S (num 0)))))");
    o.require(corpus.size() >= 50, "corpus too small: " + std::to_string(corpus.size()));
    for (const auto& text : corpus) {
      Formula phi = parse_formula(text, Sig::Arith);
      if (eval_qf_arith(phi) != eval_sentence(pa_to_zf(phi), bs, &cache)) {
        o.require(false, "arith->set mismatch on " + text);
        return;
      }
    }
    // quantified spot checks whose witnesses stay below the seeded range
    std::vector<std::pair<std::string, bool>> quantified = {
        {"(exists v0 (= (+ v0 v0) (S (S (num 0)))))", true},
        {"(exists v0 (= (+ v0 v0) (S (num 0))))", false},
        {"(exists v0 (= (* v0 v0) (S (S (S (S (num 0)))))))", true},
    };
    for (const auto& [text, expected] : quantified) {
      Formula phi = parse_formula(text, Sig::Arith);
      if (eval_sentence(pa_to_zf(phi), bs, &cache) != expected) {
        o.require(false, "arith->set mismatch on " + text);
        return;
      }
    }

    // set → arith: exhaustive over code_cap(16) within the node budget
    FiniteStructure s16 = FiniteStructure::from_spec(DomainSpec::code_cap(Nat(16)));
    EvalCache cache16;
    for (const auto& phi : enumerate_sentences(s16, 6)) {
      if (eval_sentence(phi, s16, &cache16) != eval_relational(zf_to_pa(phi), Nat(16))) {
        o.require(false, "set->arith mismatch on " + print_formula(phi));
        return;
      }
    }
    // sampled at code_cap(256)
    FiniteStructure s256 = FiniteStructure::from_spec(DomainSpec::code_cap(Nat(256)));
    EvalCache cache256;
    FormulaGenOptions opt;
    opt.max_depth = 3;
    for (unsigned long c = 0; c < 256; ++c) opt.constants.emplace_back(c);
    FormulaGen gen(opt, kSeed ^ 0xB51D6Eull);
    for (int i = 0; i < 200; ++i) {
      Formula phi = gen.sentence();
      if (eval_sentence(phi, s256, &cache256) != eval_relational(zf_to_pa(phi), Nat(256))) {
        o.require(false, "sampled set->arith mismatch on " + print_formula(phi));
        return;
      }
    }
  });

  criterion(12, "schemes: replacement ranks flagged, reflection sound vs faulted", 600,
            [&](Outcome& o) {
              auto battery = sample_replacement_battery();
              uint32_t reach = 1;
              for (const auto& phi : battery)
                reach = std::max(reach, replacement_instance(phi).depth());
              TruthTower deep(DomainSpec::rank_cap(4), reach, 5);
              auto verdicts = audit_replacement(deep, battery);
              for (const auto& v : verdicts) {
                if (v.conditional_member != true) {
                  o.require(false, "conditional instance not in the truth class for " +
                                       print_formula(v.generator));
                  return;
                }
              }
              o.require(verdicts[0].status == ReplacementStatus::Holds, "identity map should hold");
              o.require(verdicts[1].status == ReplacementStatus::Boundary,
                        "singleton map should fail at the boundary");
              o.require(verdicts[1].overflow_rank && *verdicts[1].overflow_rank == 4,
                        "singleton overflow should be rank 4");
              o.require(verdicts[2].status == ReplacementStatus::Holds,
                        "constant-empty map should hold");

              auto sound = reflection_instances(sample_sound_theory(),
                                                sample_reflection_battery(), 12);
              for (const auto& v : sound)
                if (!v.pass()) {
                  o.require(false, "sound theory failed reflection");
                  return;
                }
              o.require(sound[0].provable > 0, "sound audit is vacuous");
              auto faulted = reflection_instances(sample_unsound_theory(),
                                                  sample_reflection_battery(), 12);
              bool caught = false;
              for (const auto& v : faulted) caught = caught || !v.pass();
              o.require(caught, "fault-injected theory was not caught");
            });

  std::printf("%d of 12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
