#include <doctest.h>

#include <cstdio>

#include "hflab/artifact.hpp"
#include "hflab/report.hpp"

using namespace hflab;

TEST_CASE("envelope round trip, digest and version gating") {
  ArtifactEnvelope e;
  e.kind = "report";
  e.payload = "{\"x\": 1}";
  std::string text = envelope_to_string(e);
  ArtifactEnvelope back = envelope_from_string(text);
  CHECK(back.kind == "report");
  CHECK(back.payload == e.payload);

  // tampered payload is rejected
  std::string corrupted = text;
  auto pos = corrupted.find("\\\"x\\\": 1");
  REQUIRE(pos != std::string::npos);
  corrupted.replace(pos, 8, "\\\"x\\\": 2");
  CHECK_THROWS_AS(envelope_from_string(corrupted), ArtifactError);

  // other versions are rejected loudly, never reinterpreted
  std::string other = text;
  auto vpos = other.find("\"format_version\": 1");
  REQUIRE(vpos != std::string::npos);
  other.replace(vpos, 19, "\"format_version\": 2");
  CHECK_THROWS_AS(envelope_from_string(other), VersionError);

  CHECK_THROWS_AS(envelope_from_string("not json at all"), ArtifactError);
}

TEST_CASE("artifact files") {
  std::string path = "/tmp/hflab_test_artifact.json";
  save_artifact(path, "battery", "{\"signature\":\"set\",\"formulas\":[]}");
  std::string payload = load_artifact(path, "battery");
  CHECK(payload.find("formulas") != std::string::npos);
  CHECK_THROWS_AS(load_artifact(path, "tower"), ArtifactError);
  CHECK_THROWS_AS(load_artifact("/tmp/does_not_exist_hflab.json", "tower"), ArtifactError);
  std::remove(path.c_str());
}

TEST_CASE("tower payload rebuilds and verifies") {
  TruthTower tower(DomainSpec::rank_cap(3), 4, 5);
  std::string payload = tower_to_payload(tower);
  TruthTower back = tower_from_payload(payload, true);
  CHECK(back.reach() == 4);
  CHECK(back.spec() == DomainSpec::rank_cap(3));
  CHECK(back.node_budget() == 5);

  // a tampered level table is caught by verification
  auto pos = payload.find("\"true_codes\":[\"");
  REQUIRE(pos != std::string::npos);
  std::string tampered = payload.substr(0, pos) + "\"true_codes\":[\"99999\"," +
                         payload.substr(pos + 15);
  CHECK_THROWS_AS(tower_from_payload(tampered, true), ArtifactError);
}

TEST_CASE("report renderings come from one value and round trip") {
  Report r;
  r.title = "sample audit";
  r.seed = 42;
  r.pass("first check", "looks fine");
  r.fail("second check", "looks off");
  r.info("note");
  r.violations.push_back("clause 3 on (in (c 0) (c 0))");
  r.meta["domain"] = "rank:4";

  std::string text = render_text(r);
  CHECK(text.find("sample audit") != std::string::npos);
  CHECK(text.find("[pass] first check") != std::string::npos);
  CHECK(text.find("1 violations") != std::string::npos);

  Report back = report_from_machine(render_machine(r));
  CHECK(back == r);
  CHECK_FALSE(back.all_pass());

  Report empty;
  empty.title = "empty";
  CHECK(render_text(empty).find("0 violations") != std::string::npos);
  CHECK(report_from_machine(render_machine(empty)) == empty);
  CHECK(empty.all_pass());
}
