#include "hflab/artifact.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hflab/godel.hpp"

namespace hflab {

using nlohmann::json;

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string envelope_to_string(const ArtifactEnvelope& e) {
  json j;
  j["format_version"] = e.format_version;
  j["kind"] = e.kind;
  j["payload"] = e.payload;
  char buf[32];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(e.payload)));
  j["digest"] = buf;
  return j.dump(2);
}

ArtifactEnvelope envelope_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("artifact is not valid JSON: ") + e.what());
  }
  ArtifactEnvelope e;
  try {
    e.format_version = j.at("format_version").get<int>();
    e.kind = j.at("kind").get<std::string>();
    e.payload = j.at("payload").get<std::string>();
    std::string digest = j.at("digest").get<std::string>();
    char buf[32];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(e.payload)));
    if (digest != buf)
      throw ArtifactError("artifact digest mismatch: payload corrupted or edited");
    e.digest = fnv1a64(e.payload);
  } catch (const json::exception& ex) {
    throw ArtifactError(std::string("artifact envelope is missing fields: ") + ex.what());
  }
  if (e.format_version != ArtifactEnvelope::kFormatVersion)
    throw VersionError("artifact format version " + std::to_string(e.format_version) +
                       " is not supported (this build reads version " +
                       std::to_string(ArtifactEnvelope::kFormatVersion) + ")");
  return e;
}

void save_artifact(const std::string& path, const std::string& kind, const std::string& payload) {
  ArtifactEnvelope e;
  e.kind = kind;
  e.payload = payload;
  std::ofstream out(path);
  if (!out) throw ArtifactError("cannot write artifact file '" + path + "'");
  out << envelope_to_string(e) << "\n";
}

std::string load_artifact(const std::string& path, const std::string& expected_kind) {
  std::ifstream in(path);
  if (!in) throw ArtifactError("cannot read artifact file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  ArtifactEnvelope e = envelope_from_string(buf.str());
  if (e.kind != expected_kind)
    throw ArtifactError("artifact kind is '" + e.kind + "', expected '" + expected_kind + "'");
  return e.payload;
}

// ------------------------------------------------------------------ tower

std::string tower_to_payload(const TruthTower& tower) {
  json j;
  j["domain"] = tower.spec().str();
  j["reach"] = tower.reach();
  j["reach_note"] = "resource bound of the construction, not a logical ceiling";
  j["node_budget"] = tower.node_budget();
  json levels = json::array();
  auto sentences = enumerate_sentences(tower.structure(), tower.node_budget());
  for (uint32_t k = 1; k <= tower.reach(); ++k) {
    json level;
    level["depth"] = k;
    json codes = json::array();
    for (const auto& f : sentences)
      if (f.depth() == k && tower.member(f)) codes.push_back(nat_str(godel_code(f)));
    level["true_codes"] = codes;
    levels.push_back(level);
  }
  j["levels"] = levels;
  return j.dump();
}

TruthTower tower_from_payload(const std::string& payload, bool verify_table) {
  json j;
  try {
    j = json::parse(payload);
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("tower payload is not valid JSON: ") + e.what());
  }
  try {
    DomainSpec spec = DomainSpec::parse(j.at("domain").get<std::string>());
    uint32_t reach = j.at("reach").get<uint32_t>();
    uint64_t budget = j.at("node_budget").get<uint64_t>();
    TruthTower tower(spec, reach, budget);
    if (verify_table) {
      std::string expected = tower_to_payload(tower);
      json back = json::parse(expected);
      if (back.at("levels") != j.at("levels"))
        throw ArtifactError("tower table does not match its domain and reach; file corrupted");
    }
    return tower;
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("tower payload is missing fields: ") + e.what());
  }
}

}  // namespace hflab
