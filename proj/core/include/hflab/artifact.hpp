#ifndef HFLAB_ARTIFACT_HPP
#define HFLAB_ARTIFACT_HPP

#include <string>

#include "hflab/truth.hpp"

namespace hflab {

// Envelope wrapped around every document the CLI reads or writes. Parsing is
// version-gated and the digest must validate; artifacts from other versions
// are rejected loudly, never reinterpreted.
struct ArtifactEnvelope {
  static constexpr int kFormatVersion = 1;
  int format_version = kFormatVersion;
  std::string kind;     // tower | proof | theory | battery | report
  std::string payload;  // JSON text
  uint64_t digest = 0;  // fnv1a64 of the payload
};

uint64_t fnv1a64(const std::string& data);

std::string envelope_to_string(const ArtifactEnvelope& e);
ArtifactEnvelope envelope_from_string(const std::string& text);

void save_artifact(const std::string& path, const std::string& kind, const std::string& payload);
// Loads, validates digest and version, and checks the kind.
std::string load_artifact(const std::string& path, const std::string& expected_kind);

// Tower payloads record the domain, reach (a resource bound), the node
// budget, and the enumerated true-sentence code table per level for
// sentences within the budget. Loading rebuilds the tower from the domain
// spec; verify_table recomputes the stored table and cross-checks it.
std::string tower_to_payload(const TruthTower& tower);
TruthTower tower_from_payload(const std::string& payload, bool verify_table = true);

}  // namespace hflab

#endif  // HFLAB_ARTIFACT_HPP
