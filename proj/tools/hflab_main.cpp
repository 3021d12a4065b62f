// hflab: a desk-scale workbench for stratified truth classes over the
// hereditarily finite sets, with an Ackermann-coded universe, a two-way
// arithmetic/set-theory translation, a cut-eliminating sequent prover and
// axiom-scheme auditors. All commands are deterministic given identical
// inputs and flags; randomized audits take an explicit seed that is echoed
// in their reports.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hflab/artifact.hpp"
#include "hflab/bridge.hpp"
#include "hflab/eval.hpp"
#include "hflab/godel.hpp"
#include "hflab/proofs.hpp"
#include "hflab/report.hpp"
#include "hflab/schemes.hpp"
#include "hflab/truth.hpp"

using namespace hflab;

namespace {

constexpr uint64_t kDefaultSeed = 0xD15C0B01ull;

void emit(const Report& report, const std::string& out_path) {
  std::cout << render_text(report);
  if (!out_path.empty()) save_artifact(out_path, "report", render_machine(report));
}

int report_exit(const Report& report) {
  return report.all_pass() ? exit_code::kOk : exit_code::kViolations;
}


TruthTower load_tower(const std::string& path) {
  return tower_from_payload(load_artifact(path, "tower"), /*verify_table=*/true);
}

const char* repl_status_name(ReplacementStatus s) {
  switch (s) {
    case ReplacementStatus::Holds: return "holds";
    case ReplacementStatus::Boundary: return "fails at boundary";
    case ReplacementStatus::ReachExceeded: return "reach-exceeded";
    case ReplacementStatus::Mismatch: return "mismatch";
  }
  return "?";
}

// ------------------------------------------------------------------ hf

int run_hf(const std::string& op, const std::string& arg) {
  if (op == "encode") {
    std::cout << nat_str(ack_encode(parse_set_literal(arg))) << "\n";
  } else if (op == "decode") {
    std::cout << print_set(ack_decode(Nat(arg))) << "\n";
  } else if (op == "tc") {
    std::cout << nat_str(transitive_closure_code(Nat(arg))) << "\n";
  } else if (op == "rank") {
    std::cout << ack_decode(Nat(arg)).rank() << "\n";
  } else {
    throw UsageError("unknown hf operation '" + op + "'");
  }
  return exit_code::kOk;
}

// ----------------------------------------------------------------- eval

int run_eval(const std::string& text, const std::string& domain, bool delta0, bool term) {
  if (term) {
    std::cout << nat_str(eval_term(parse_term(text, Sig::Arith))) << "\n";
    return exit_code::kOk;
  }
  bool value;
  if (delta0) {
    value = eval_delta0(parse_formula(text, Sig::Set));
  } else if (!domain.empty()) {
    FiniteStructure s = FiniteStructure::from_spec(DomainSpec::parse(domain));
    EvalCache cache;
    value = eval_sentence(parse_formula(text, Sig::Set), s, &cache);
  } else {
    throw UsageError("eval needs one of --domain, --delta0 or --term");
  }
  std::cout << (value ? "true" : "false") << "\n";
  return value ? exit_code::kOk : exit_code::kFalse;
}

// --------------------------------------------------------------- bridge

int run_bridge_validate(unsigned long max_value, const std::string& out) {
  TableReport tr = validate_table(TranslationTable::standard(), max_value);
  Report report;
  report.title = "translation table vs ordinal arithmetic (values <= " +
                 std::to_string(max_value) + ")";
  report.meta["checks"] = std::to_string(tr.checks);
  report.violations = tr.violations;
  if (tr.ok())
    report.pass("table agrees with brute-force arithmetic");
  else
    report.fail("table disagrees with brute-force arithmetic");
  emit(report, out);
  return report_exit(report);
}

// ---------------------------------------------------------------- truth

int run_truth_build(const std::string& domain, uint32_t depth, uint64_t node_budget,
                    const std::string& out) {
  TruthTower tower(DomainSpec::parse(domain), depth, node_budget);
  save_artifact(out, "tower", tower_to_payload(tower));
  Report report;
  report.title = "stratified truth class construction";
  report.meta["domain"] = tower.structure().describe();
  report.meta["reach"] = std::to_string(tower.reach()) + " (resource bound, not logical)";
  report.meta["node_budget"] = std::to_string(tower.node_budget());
  for (uint32_t k = 1; k <= tower.reach(); ++k)
    report.pass("depth-" + std::to_string(k) + " truth class exists",
                "level " + std::to_string(k) + " constructed");
  report.meta["artifact"] = out;
  emit(report, "");
  return exit_code::kOk;
}

int run_truth_query(const std::string& path, const std::string& text) {
  TruthTower tower = load_tower(path);
  auto r = tower.query(parse_formula(text, Sig::Set));
  std::cout << (r.member ? "true" : "false") << " (certificate depth " << r.certificate << ")\n";
  return r.member ? exit_code::kOk : exit_code::kFalse;
}

int run_truth_verify_ct(const std::string& path, uint64_t nodes, uint32_t family_depth,
                        const std::string& out) {
  TruthTower tower = load_tower(path);
  uint32_t fd = family_depth == 0 ? tower.reach() : family_depth;
  CtReport ct = verify_ct(tower.level(std::min(fd, tower.reach())), tower.structure(), fd, nodes);
  Report report;
  report.title = "compositional truth clauses (1)-(5)";
  report.meta["family_depth"] = std::to_string(ct.family_depth);
  report.meta["sentences_enumerated"] = std::to_string(ct.sentences_enumerated);
  for (int clause = 1; clause <= 5; ++clause)
    report.info("clause " + std::to_string(clause) + " checks",
                std::to_string(ct.clause_checks[clause]));
  for (const auto& v : ct.violations)
    report.violations.push_back("clause " + std::to_string(v.clause) + " on " +
                                print_formula(v.sentence) + " (" + v.detail + ")");
  if (ct.ok())
    report.pass("all clauses verified");
  else
    report.fail("clause violations found");
  emit(report, out);
  return report_exit(report);
}

int run_truth_faces(const std::string& path, uint32_t width, uint32_t samples, uint64_t seed,
                    const std::string& out) {
  TruthTower tower = load_tower(path);
  FacesReport fr = faces_audit(tower, width, samples, seed);
  Report report;
  report.title = "many-faces audit: disjunctive correctness and sentential closure";
  report.seed = fr.seed;
  auto face = [&](const std::string& name, uint64_t checked, uint64_t failures) {
    if (failures == 0)
      report.pass(name, std::to_string(checked) + " checks");
    else
      report.fail(name, std::to_string(failures) + " of " + std::to_string(checked) + " failed");
  };
  face("DC: disjunction true iff some disjunct true", fr.dc_checked, fr.dc_failures);
  face("DC_out: true disjunction has a true disjunct", fr.dc_checked, fr.dc_out_failures);
  face("sentential modus-ponens closure", fr.closure_checked, fr.closure_failures);
  report.violations = fr.failures;
  emit(report, out);
  return report_exit(report);
}

int run_truth_defset(const std::string& path, const std::string& text) {
  TruthTower tower = load_tower(path);
  auto codes = definable_set(parse_formula(text, Sig::Set), tower);
  std::cout << "{";
  for (size_t i = 0; i < codes.size(); ++i) std::cout << (i ? "," : "") << nat_str(codes[i]);
  std::cout << "}\n";
  return exit_code::kOk;
}

int run_truth_piecewise(const std::string& path, const std::string& m) {
  TruthTower tower = load_tower(path);
  std::cout << nat_str(piecewise_code(tower, Nat(m))) << "\n";
  return exit_code::kOk;
}

// ---------------------------------------------------------------- proof

int run_proof_check(const std::string& path) {
  ProofFile pf = proof_from_json(load_artifact(path, "proof"));
  std::string reason;
  bool ok = check_proof(pf.tree, pf.assumptions, pf.goal, &reason);
  if (ok) {
    std::cout << "valid proof of " << print_formula(pf.goal) << " from "
              << pf.assumptions.size() << " assumptions (" << pf.tree.node_count() << " nodes, "
              << pf.tree.cut_count() << " cuts)\n";
    return exit_code::kOk;
  }
  std::cout << "INVALID: " << reason << "\n";
  return exit_code::kViolations;
}

int run_proof_cutelim(const std::string& path, bool stats, const std::string& out) {
  ProofFile pf = proof_from_json(load_artifact(path, "proof"));
  std::string reason;
  if (!check_proof(pf.tree, pf.assumptions, pf.goal, &reason))
    throw StructuralError("input proof does not check: " + reason, "root");
  BlowupStats bs;
  ProofTree clean = eliminate_cuts(pf.tree, &bs);
  if (!check_proof(clean, pf.assumptions, pf.goal, &reason))
    throw StructuralError("internal: eliminated proof does not check: " + reason, "root");
  std::cout << "cut-free: " << (clean.cut_count() == 0 ? "yes" : "no") << "\n";
  std::cout << "subformula property: "
            << (has_subformula_property(clean, pf.assumptions, pf.goal) ? "yes" : "no") << "\n";
  if (stats) {
    std::cout << "input nodes: " << bs.input_nodes << "\n";
    std::cout << "output nodes: " << bs.output_nodes << "\n";
    std::cout << "max cut rank: " << bs.max_cut_rank << "\n";
    std::cout << "supexp reference bound: "
              << (bs.astronomical ? "beyond materialization" : nat_str(bs.reference_bound))
              << "\n";
  }
  if (!out.empty())
    save_artifact(out, "proof", proof_to_json(clean, pf.assumptions, pf.goal, pf.sig));
  return exit_code::kOk;
}

int run_proof_search(const std::string& theory_path, const std::string& goal_text, uint64_t size,
                     const std::string& out) {
  TheorySpec theory = theory_from_json(load_artifact(theory_path, "theory"));
  Formula goal = parse_formula(goal_text, theory.sig);
  auto found = bounded_search(theory.axioms, goal, size);
  if (!found) {
    std::cout << "no proof of size <= " << size << "\n";
    return exit_code::kFalse;
  }
  std::cout << "proof found: " << found->node_count() << " nodes\n";
  if (!out.empty())
    save_artifact(out, "proof", proof_to_json(*found, theory.axioms, goal, theory.sig));
  return exit_code::kOk;
}

// -------------------------------------------------------------- schemes

int run_schemes_ref(const std::string& theory_path, const std::string& battery_path,
                    uint32_t levels, uint64_t size, const std::string& out) {
  TheorySpec theory = theory_from_json(load_artifact(theory_path, "theory"));
  auto [sig, battery] = battery_from_json(load_artifact(battery_path, "battery"));
  if (sig != theory.sig) throw SignatureError("battery and theory signatures differ");
  auto tower = ref_tower(theory, battery, levels);
  Report report;
  report.title = "uniform reflection over " + theory.label;
  report.meta["levels"] = std::to_string(levels);
  report.meta["note"] =
      "provability is the meta-level bounded searcher; reflection instances are pseudo-axioms";
  for (size_t k = 0; k < tower.size(); ++k)
    report.info("level " + std::to_string(k) + " (" + tower[k].label + ")",
                std::to_string(tower[k].axiom_count()) + " axioms");
  for (const auto& v : reflection_instances(theory, battery, size)) {
    std::string name = "reflection for " + print_formula(v.instance.generator);
    std::string detail = std::to_string(v.provable) + "/" + std::to_string(v.values_tested) +
                         " instances provable" + (v.vacuous() ? " (vacuous)" : "");
    if (v.pass())
      report.pass(name, detail);
    else
      report.fail(name, detail + ", unsound at n=" + std::to_string(v.failures[0]));
    for (unsigned long n : v.failures)
      report.violations.push_back("provable but false: " +
                                  print_formula(substitute(v.instance.generator,
                                                           v.instance.generator.free_vars()[0],
                                                           Term::numeral(n))));
  }
  emit(report, out);
  return report_exit(report);
}

int run_schemes_audit(const std::string& tower_path, const std::string& kind,
                      const std::string& battery_path, const std::string& out) {
  TruthTower tower = load_tower(tower_path);
  auto [sig, battery] = battery_from_json(load_artifact(battery_path, "battery"));
  Report report;
  if (kind == "repl") {
    if (sig != Sig::Set) throw SignatureError("replacement batteries are set-signature");
    report.title = "internal replacement audit";
    for (const auto& v : audit_replacement(tower, battery)) {
      std::string name = "replacement for " + print_formula(v.generator);
      std::string detail = std::string(repl_status_name(v.status));
      if (v.overflow_rank)
        detail += " (images reach rank " + std::to_string(*v.overflow_rank) + ")";
      if (v.status == ReplacementStatus::Mismatch)
        report.fail(name, detail);
      else if (v.status == ReplacementStatus::ReachExceeded)
        report.info(name, detail);
      else
        report.pass(name, detail);
    }
  } else if (kind == "ind") {
    if (sig != Sig::Arith) throw SignatureError("induction batteries are arithmetic");
    report.title = "internal induction audit (through the set-theory translation)";
    for (const auto& v : audit_induction(tower, battery)) {
      std::string name = "induction for " + print_formula(v.generator);
      if (!v.member)
        report.info(name, "reach-exceeded");
      else if (v.agrees_with_eval)
        report.pass(name, std::string("member=") + (*v.member ? "true" : "false") +
                              ", agrees with evaluation");
      else
        report.fail(name, "tower and evaluator disagree");
    }
  } else {
    throw UsageError("audit kind must be repl or ind");
  }
  emit(report, out);
  return report_exit(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hflab - truth-class, proof and coding experiments over hereditarily finite sets"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::function<int()> action;

  uint64_t seed = kDefaultSeed;
  uint64_t budget_nodes = 7;
  std::string out_path;
  app.add_option("--seed", seed, "seed for randomized audits (echoed in reports)");
  app.add_option("--budget-nodes", budget_nodes, "node budget for exhaustive enumerations");
  app.add_option("--out", out_path, "write the machine-readable artifact here");

  // hf
  auto* hf = app.add_subcommand("hf", "Ackermann-coded hereditarily finite sets");
  for (const char* op : {"encode", "decode", "tc", "rank"}) {
    auto* sub = hf->add_subcommand(op);
    auto arg = std::make_shared<std::string>();
    sub->add_option("value", *arg, "set literal or code")->required();
    std::string opname = op;
    sub->callback([&action, opname, arg] {
      action = [opname, arg] { return run_hf(opname, *arg); };
    });
  }
  hf->require_subcommand(1);

  // eval
  auto* ev = app.add_subcommand("eval", "exact evaluation of sentences and terms");
  {
    auto text = std::make_shared<std::string>();
    auto domain = std::make_shared<std::string>();
    auto delta0 = std::make_shared<bool>(false);
    auto term = std::make_shared<bool>(false);
    ev->add_option("formula", *text, "s-expression")->required();
    ev->add_option("--domain", *domain, "rank:N or code:N structure");
    ev->add_flag("--delta0", *delta0, "bounded-fragment truth over the full universe");
    ev->add_flag("--term", *term, "closed arithmetic term value");
    ev->callback([&action, text, domain, delta0, term] {
      action = [text, domain, delta0, term] {
        return run_eval(*text, *domain, *delta0, *term);
      };
    });
  }

  // bridge
  auto* br = app.add_subcommand("bridge", "arithmetic <-> finite set theory translation");
  {
    auto* pa2zf_cmd = br->add_subcommand("pa2zf", "translate an arithmetic formula");
    auto text1 = std::make_shared<std::string>();
    pa2zf_cmd->add_option("formula", *text1)->required();
    pa2zf_cmd->callback([&action, text1] {
      action = [text1] {
        std::cout << print_formula(pa_to_zf(parse_formula(*text1, Sig::Arith))) << "\n";
        return exit_code::kOk;
      };
    });

    auto* zf2pa_cmd = br->add_subcommand("zf2pa", "translate a set formula");
    auto text2 = std::make_shared<std::string>();
    zf2pa_cmd->add_option("formula", *text2)->required();
    zf2pa_cmd->callback([&action, text2] {
      action = [text2] {
        std::cout << print_formula(zf_to_pa(parse_formula(*text2, Sig::Set))) << "\n";
        return exit_code::kOk;
      };
    });

    auto* ord_cmd = br->add_subcommand("ordinal", "code of the n-th von Neumann ordinal");
    auto n = std::make_shared<unsigned long>();
    ord_cmd->add_option("n", *n)->required();
    ord_cmd->callback([&action, n] {
      action = [n] {
        std::cout << nat_str(nat_to_ordinal(*n)) << "\n";
        return exit_code::kOk;
      };
    });

    auto* table_cmd = br->add_subcommand("table", "print the versioned translation table");
    table_cmd->callback([&action, &out_path] {
      action = [&out_path] {
        std::string text = TranslationTable::standard().to_sexp_file();
        if (out_path.empty())
          std::cout << text;
        else {
          std::ofstream f(out_path);
          f << text;
        }
        return exit_code::kOk;
      };
    });

    auto* val_cmd = br->add_subcommand("validate", "brute-force check of the table");
    auto maxv = std::make_shared<unsigned long>(12);
    val_cmd->add_option("--max", *maxv, "largest ordinal value (default 12)");
    val_cmd->callback([&action, maxv, &out_path] {
      action = [maxv, &out_path] { return run_bridge_validate(*maxv, out_path); };
    });
  }
  br->require_subcommand(1);

  // truth
  auto* tr = app.add_subcommand("truth", "depth-stratified truth classes");
  {
    auto* build = tr->add_subcommand("build", "construct a tower and write its artifact");
    auto domain = std::make_shared<std::string>("rank:4");
    auto depth = std::make_shared<uint32_t>(6);
    auto file = std::make_shared<std::string>("tower.json");
    auto budget = std::make_shared<uint64_t>(5);
    build->add_option("--domain", *domain, "rank:N or code:N (default rank:4)");
    build->add_option("--depth", *depth, "reach of the construction (default 6)");
    build->add_option("--budget-nodes", *budget, "node budget of the stored table (default 5)");
    build->add_option("--out", *file, "artifact path (default tower.json)");
    build->callback([&action, domain, depth, budget, file] {
      action = [domain, depth, budget, file] {
        return run_truth_build(*domain, *depth, *budget, *file);
      };
    });

    auto* query = tr->add_subcommand("query", "membership in the union truth predicate");
    auto qfile = std::make_shared<std::string>();
    auto qtext = std::make_shared<std::string>();
    query->add_option("tower", *qfile)->required();
    query->add_option("formula", *qtext)->required();
    query->callback([&action, qfile, qtext] {
      action = [qfile, qtext] { return run_truth_query(*qfile, *qtext); };
    });

    auto* vct = tr->add_subcommand("verify-ct", "exhaustive compositional clause check");
    auto vfile = std::make_shared<std::string>();
    auto vnodes = std::make_shared<uint64_t>(7);
    auto vfam = std::make_shared<uint32_t>(0);
    vct->add_option("tower", *vfile)->required();
    vct->add_option("--nodes", *vnodes, "sentence node budget (default 7)");
    vct->add_option("--family-depth", *vfam, "family depth bound (default: tower reach)");
    vct->callback([&action, vfile, vnodes, vfam, &out_path] {
      action = [vfile, vnodes, vfam, &out_path] {
        return run_truth_verify_ct(*vfile, *vnodes, *vfam, out_path);
      };
    });

    auto* faces = tr->add_subcommand("faces", "disjunctive correctness and closure audit");
    auto ffile = std::make_shared<std::string>();
    auto fwidth = std::make_shared<uint32_t>(32);
    auto fsamples = std::make_shared<uint32_t>(500);
    faces->add_option("tower", *ffile)->required();
    faces->add_option("--width", *fwidth, "max disjunction width (default 32)");
    faces->add_option("--samples", *fsamples, "closure samples (default 500)");
    faces->callback([&action, ffile, fwidth, fsamples, &seed, &out_path] {
      action = [ffile, fwidth, fsamples, &seed, &out_path] {
        return run_truth_faces(*ffile, *fwidth, *fsamples, seed, out_path);
      };
    });

    auto* defset = tr->add_subcommand("defset", "truth-definable subset of the domain");
    auto dfile = std::make_shared<std::string>();
    auto dtext = std::make_shared<std::string>();
    defset->add_option("tower", *dfile)->required();
    defset->add_option("formula", *dtext, "one free variable")->required();
    defset->callback([&action, dfile, dtext] {
      action = [dfile, dtext] { return run_truth_defset(*dfile, *dtext); };
    });

    auto* pw = tr->add_subcommand("piecewise", "bit table of the truth class below m");
    auto pfile = std::make_shared<std::string>();
    auto pm = std::make_shared<std::string>();
    pw->add_option("tower", *pfile)->required();
    pw->add_option("--m", *pm, "prefix length")->required();
    pw->callback([&action, pfile, pm] {
      action = [pfile, pm] { return run_truth_piecewise(*pfile, *pm); };
    });
  }
  tr->require_subcommand(1);

  // proof
  auto* pr = app.add_subcommand("proof", "one-sided sequent calculus");
  {
    auto* check = pr->add_subcommand("check", "validate a proof artifact");
    auto cfile = std::make_shared<std::string>();
    check->add_option("proof", *cfile)->required();
    check->callback([&action, cfile] {
      action = [cfile] { return run_proof_check(*cfile); };
    });

    auto* ce = pr->add_subcommand("cutelim", "eliminate cuts");
    auto cefile = std::make_shared<std::string>();
    auto cestats = std::make_shared<bool>(false);
    ce->add_option("proof", *cefile)->required();
    ce->add_flag("--stats", *cestats, "print blow-up statistics");
    ce->callback([&action, cefile, cestats, &out_path] {
      action = [cefile, cestats, &out_path] {
        return run_proof_cutelim(*cefile, *cestats, out_path);
      };
    });

    auto* se = pr->add_subcommand("search", "bounded cut-free proof search");
    auto sphi = std::make_shared<std::string>();
    auto sgoal = std::make_shared<std::string>();
    auto ssize = std::make_shared<uint64_t>(20);
    se->add_option("--phi", *sphi, "theory artifact with the assumptions")->required();
    se->add_option("--goal", *sgoal, "goal s-expression")->required();
    se->add_option("--size", *ssize, "node-count ceiling (default 20)");
    se->callback([&action, sphi, sgoal, ssize, &out_path] {
      action = [sphi, sgoal, ssize, &out_path] {
        return run_proof_search(*sphi, *sgoal, *ssize, out_path);
      };
    });
  }
  pr->require_subcommand(1);

  // schemes
  auto* sc = app.add_subcommand("schemes", "axiom scheme generators and audits");
  {
    auto* ind = sc->add_subcommand("ind", "induction instance for a unary formula");
    auto itext = std::make_shared<std::string>();
    ind->add_option("formula", *itext)->required();
    ind->callback([&action, itext] {
      action = [itext] {
        std::cout << print_formula(induction_instance(parse_formula(*itext, Sig::Arith)))
                  << "\n";
        return exit_code::kOk;
      };
    });

    auto* repl = sc->add_subcommand("repl", "replacement instance (x=v0, y=v1, z=v2)");
    auto rtext = std::make_shared<std::string>();
    repl->add_option("formula", *rtext)->required();
    repl->callback([&action, rtext] {
      action = [rtext] {
        std::cout << print_formula(replacement_instance(parse_formula(*rtext, Sig::Set)))
                  << "\n";
        return exit_code::kOk;
      };
    });

    auto* ref = sc->add_subcommand("ref", "finite uniform-reflection tower with audits");
    auto rtheory = std::make_shared<std::string>();
    auto rbattery = std::make_shared<std::string>();
    auto rlevels = std::make_shared<uint32_t>(1);
    auto rsize = std::make_shared<uint64_t>(20);
    ref->add_option("--theory", *rtheory)->required();
    ref->add_option("--battery", *rbattery)->required();
    ref->add_option("--levels", *rlevels, "tower height (default 1)");
    ref->add_option("--size", *rsize, "proof search ceiling (default 20)");
    ref->callback([&action, rtheory, rbattery, rlevels, rsize, &out_path] {
      action = [rtheory, rbattery, rlevels, rsize, &out_path] {
        return run_schemes_ref(*rtheory, *rbattery, *rlevels, *rsize, out_path);
      };
    });

    auto* mkt = sc->add_subcommand("mk-theory", "write a theory artifact");
    auto tlabel = std::make_shared<std::string>("theory");
    auto tsig = std::make_shared<std::string>("arith");
    auto taxioms = std::make_shared<std::vector<std::string>>();
    auto tout = std::make_shared<std::string>("theory.json");
    mkt->add_option("--label", *tlabel);
    mkt->add_option("--sig", *tsig, "arith or set");
    mkt->add_option("--axiom", *taxioms, "axiom s-expression (repeatable)")->required();
    mkt->add_option("--out", *tout, "artifact path (default theory.json)");
    mkt->callback([&action, tlabel, tsig, taxioms, tout] {
      action = [tlabel, tsig, taxioms, tout] {
        TheorySpec t;
        t.label = *tlabel;
        t.sig = *tsig == "arith" ? Sig::Arith
                : *tsig == "set" ? Sig::Set
                                 : throw UsageError("--sig must be arith or set");
        for (const auto& a : *taxioms) t.axioms.push_back(parse_formula(a, t.sig));
        save_artifact(*tout, "theory", theory_to_json(t));
        std::cout << "wrote " << *tout << "\n";
        return exit_code::kOk;
      };
    });

    auto* mkb = sc->add_subcommand("mk-battery", "write a battery artifact");
    auto bsig = std::make_shared<std::string>("arith");
    auto bforms = std::make_shared<std::vector<std::string>>();
    auto bout = std::make_shared<std::string>("battery.json");
    mkb->add_option("--sig", *bsig, "arith or set");
    mkb->add_option("--formula", *bforms, "formula s-expression (repeatable)")->required();
    mkb->add_option("--out", *bout, "artifact path (default battery.json)");
    mkb->callback([&action, bsig, bforms, bout] {
      action = [bsig, bforms, bout] {
        Sig sig = *bsig == "arith" ? Sig::Arith
                  : *bsig == "set" ? Sig::Set
                                   : throw UsageError("--sig must be arith or set");
        std::vector<Formula> fs;
        for (const auto& f : *bforms) fs.push_back(parse_formula(f, sig));
        save_artifact(*bout, "battery", battery_to_json(sig, fs));
        std::cout << "wrote " << *bout << "\n";
        return exit_code::kOk;
      };
    });

    auto* audit = sc->add_subcommand("audit", "internal scheme audit over a tower");
    auto afile = std::make_shared<std::string>();
    auto akind = std::make_shared<std::string>("repl");
    auto abattery = std::make_shared<std::string>();
    audit->add_option("tower", *afile)->required();
    audit->add_option("--kind", *akind, "repl or ind");
    audit->add_option("--battery", *abattery)->required();
    audit->callback([&action, afile, akind, abattery, &out_path] {
      action = [afile, akind, abattery, &out_path] {
        return run_schemes_audit(*afile, *akind, *abattery, out_path);
      };
    });
  }
  sc->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    return action ? action() : exit_code::kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code::kInternal;
  }
}
