#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "hflab/artifact.hpp"
#include "hflab/proofs.hpp"
#include "hflab/schemes.hpp"

using namespace hflab;

namespace {

#ifndef HFLAB_CLI_PATH
#define HFLAB_CLI_PATH "hflab"
#endif

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(HFLAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("hf and eval commands with exit code contract") {
  CHECK(run_cli("hf encode '{0,1}'").output == "3\n");
  CHECK(run_cli("hf decode 2").output == "{1}\n");
  CHECK(run_cli("hf tc 6").output == "7\n");
  CHECK(run_cli("hf rank 3").output == "2\n");

  auto t = run_cli("eval --domain rank:3 '(in (c 0) (c 1))'");
  CHECK(t.exit_code == 0);
  CHECK(t.output == "true\n");
  auto f = run_cli("eval --domain rank:3 '(in (c 1) (c 0))'");
  CHECK(f.exit_code == 1);
  CHECK(f.output == "false\n");
  CHECK(run_cli("eval --term '(+ (S (num 0)) (S (num 0)))'").output == "2\n");

  // errors carry distinct exit codes
  CHECK(run_cli("nonsense").exit_code == 3);
  CHECK(run_cli("eval --domain rank:3 '(in (c 0)'").exit_code == 6);   // parse error
  CHECK(run_cli("eval --domain rank:3 '(in (c 0) (c 99))'").exit_code == 7);  // domain error
  CHECK(run_cli("hf encode '{'").exit_code == 6);
}

TEST_CASE("tower pipeline through the CLI") {
  std::string tower = "/tmp/hflab_cli_tower.json";
  auto build = run_cli("truth build --domain rank:3 --depth 4 --out " + tower);
  CHECK(build.exit_code == 0);
  CHECK(build.output.find("depth-4 truth class exists") != std::string::npos);
  CHECK(build.output.find("resource bound") != std::string::npos);

  auto q = run_cli("truth query " + tower + " '(exists v0 (in v0 (c 3)))'");
  CHECK(q.exit_code == 0);
  CHECK(q.output.find("true (certificate depth 2)") != std::string::npos);
  CHECK(run_cli("truth query " + tower + " '(in (c 1) (c 0))'").exit_code == 1);

  CHECK(run_cli("truth verify-ct " + tower + " --nodes 5").exit_code == 0);
  CHECK(run_cli("truth faces " + tower + " --width 8 --samples 40").exit_code == 0);
  CHECK(run_cli("truth defset " + tower + " '(in v0 (c 3))'").output == "{0,1}\n");
  CHECK(run_cli("truth piecewise " + tower + " --m 32").exit_code == 0);

  // a reach-exceeded query is an error, exit 8
  CHECK(run_cli("truth query " + tower +
                " '(not (not (not (not (not (in (c 0) (c 1)))))))'")
            .exit_code == 8);

  // corrupting the artifact is caught by the digest
  {
    std::ifstream in(tower);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = text.find("rank:3");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 6, "rank:4");
    std::ofstream out(tower);
    out << text;
  }
  CHECK(run_cli("truth query " + tower + " '(in (c 0) (c 1))'").exit_code == 4);
  std::remove(tower.c_str());
}

TEST_CASE("proof pipeline through the CLI") {
  // theory artifact for the searcher
  std::string theory = "/tmp/hflab_cli_theory.json";
  TheorySpec t;
  t.label = "mp";
  t.sig = Sig::Set;
  t.axioms = {parse_formula("(in (c 0) (c 1))", Sig::Set),
              parse_formula("(or (not (in (c 0) (c 1))) (in (c 1) (c 3)))", Sig::Set)};
  save_artifact(theory, "theory", theory_to_json(t));

  std::string proof = "/tmp/hflab_cli_proof.json";
  auto found = run_cli("--out " + proof + " proof search --phi " + theory +
                       " --goal '(in (c 1) (c 3))' --size 10");
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("proof found") != std::string::npos);

  auto checked = run_cli("proof check " + proof);
  CHECK(checked.exit_code == 0);
  CHECK(checked.output.find("valid proof") != std::string::npos);

  auto elim = run_cli("proof cutelim " + proof + " --stats");
  CHECK(elim.exit_code == 0);
  CHECK(elim.output.find("cut-free: yes") != std::string::npos);
  CHECK(elim.output.find("subformula property: yes") != std::string::npos);

  auto none = run_cli("proof search --phi " + theory + " --goal '(in (c 3) (c 0))' --size 6");
  CHECK(none.exit_code == 1);

  CHECK(run_cli("proof check /tmp/does_not_exist.json").exit_code == 4);
  std::remove(theory.c_str());
  std::remove(proof.c_str());
}

TEST_CASE("theory and battery artifacts can be authored from the CLI") {
  std::string theory = "/tmp/hflab_cli_mk_theory.json";
  std::string battery = "/tmp/hflab_cli_mk_battery.json";
  CHECK(run_cli("schemes mk-theory --label t --sig set --axiom '(in (c 0) (c 1))' --out " +
                theory)
            .exit_code == 0);
  CHECK(run_cli("schemes mk-battery --sig arith --formula '(= v0 v0)' --out " + battery)
            .exit_code == 0);
  TheorySpec t = theory_from_json(load_artifact(theory, "theory"));
  CHECK(t.label == "t");
  CHECK(t.axioms.size() == 1);
  auto [sig, fs] = battery_from_json(load_artifact(battery, "battery"));
  CHECK(sig == Sig::Arith);
  CHECK(fs.size() == 1);
  CHECK(run_cli("schemes mk-theory --sig junk --axiom '(= v0 v0)' --out " + theory).exit_code ==
        3);
  std::remove(theory.c_str());
  std::remove(battery.c_str());
}

TEST_CASE("schemes pipeline through the CLI") {
  CHECK(run_cli("schemes ind '(= v0 v0)'").exit_code == 0);
  CHECK(run_cli("schemes repl '(= v1 v0)'").exit_code == 0);
  CHECK(run_cli("schemes ind '(= v0 v1)'").exit_code == 7);  // arity

  std::string theory = "/tmp/hflab_cli_sound.json";
  std::string bad_theory = "/tmp/hflab_cli_unsound.json";
  std::string battery = "/tmp/hflab_cli_battery.json";
  save_artifact(theory, "theory", theory_to_json(sample_sound_theory()));
  save_artifact(bad_theory, "theory", theory_to_json(sample_unsound_theory()));
  save_artifact(battery, "battery", battery_to_json(Sig::Arith, sample_reflection_battery()));

  auto sound = run_cli("schemes ref --theory " + theory + " --battery " + battery +
                       " --levels 2 --size 12");
  CHECK(sound.exit_code == 0);
  CHECK(sound.output.find("pseudo-axioms") != std::string::npos);

  auto unsound = run_cli("schemes ref --theory " + bad_theory + " --battery " + battery +
                         " --levels 1 --size 12");
  CHECK(unsound.exit_code == 2);
  CHECK(unsound.output.find("provable but false") != std::string::npos);

  std::string tower = "/tmp/hflab_cli_audit_tower.json";
  std::string repl_battery = "/tmp/hflab_cli_repl.json";
  // a small battery whose instances fit a modest reach
  std::vector<Formula> small = {parse_formula("(= v1 v0)", Sig::Set)};
  save_artifact(repl_battery, "battery", battery_to_json(Sig::Set, small));
  uint32_t reach = replacement_instance(small[0]).depth();
  REQUIRE(run_cli("truth build --domain rank:3 --depth " + std::to_string(reach) + " --out " +
                  tower)
              .exit_code == 0);
  auto audit = run_cli("schemes audit " + tower + " --kind repl --battery " + repl_battery);
  CHECK(audit.exit_code == 0);
  CHECK(audit.output.find("holds") != std::string::npos);

  for (const auto& p : {theory, bad_theory, battery, tower, repl_battery})
    std::remove(p.c_str());
}
