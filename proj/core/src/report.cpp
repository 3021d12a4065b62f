#include "hflab/report.hpp"

#include <sstream>

#include <json.hpp>

#include "hflab/errors.hpp"

namespace hflab {

using nlohmann::json;

void Report::pass(const std::string& name, const std::string& detail) {
  rows.push_back({name, "pass", detail});
}

void Report::fail(const std::string& name, const std::string& detail) {
  rows.push_back({name, "fail", detail});
}

void Report::info(const std::string& name, const std::string& detail) {
  rows.push_back({name, "info", detail});
}

bool Report::all_pass() const {
  if (!violations.empty()) return false;
  for (const auto& r : rows)
    if (r.status == "fail") return false;
  return true;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "== " << r.title << " ==\n";
  if (r.seed) out << "seed: " << *r.seed << "\n";
  for (const auto& [k, v] : r.meta) out << k << ": " << v << "\n";
  for (const auto& row : r.rows) {
    out << "[" << row.status << "] " << row.name;
    if (!row.detail.empty()) out << " -- " << row.detail;
    out << "\n";
  }
  if (r.violations.empty()) {
    out << "0 violations\n";
  } else {
    out << r.violations.size() << " violations:\n";
    for (const auto& v : r.violations) out << "  ! " << v << "\n";
  }
  return out.str();
}

std::string render_machine(const Report& r) {
  json j;
  j["title"] = r.title;
  if (r.seed) j["seed"] = *r.seed;
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"name", row.name}, {"status", row.status}, {"detail", row.detail}});
  j["rows"] = rows;
  j["violations"] = r.violations;
  j["meta"] = r.meta;
  return j.dump(2);
}

Report report_from_machine(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("report is not valid JSON: ") + e.what());
  }
  Report r;
  try {
    r.title = j.at("title").get<std::string>();
    if (j.contains("seed")) r.seed = j.at("seed").get<uint64_t>();
    for (const auto& row : j.at("rows"))
      r.rows.push_back({row.at("name").get<std::string>(), row.at("status").get<std::string>(),
                        row.at("detail").get<std::string>()});
    for (const auto& v : j.at("violations")) r.violations.push_back(v.get<std::string>());
    for (auto it = j.at("meta").begin(); it != j.at("meta").end(); ++it)
      r.meta[it.key()] = it.value().get<std::string>();
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("report is missing fields: ") + e.what());
  }
  return r;
}

}  // namespace hflab
