#ifndef HFLAB_REPORT_HPP
#define HFLAB_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hflab {

// A flat check report: one row per audited fact plus a violation list. The
// human rendering and the machine rendering come from the same value and the
// machine form round-trips losslessly.
struct ReportRow {
  std::string name;
  std::string status;  // "pass" | "fail" | "info"
  std::string detail;

  bool operator==(const ReportRow& o) const {
    return name == o.name && status == o.status && detail == o.detail;
  }
};

struct Report {
  std::string title;
  std::optional<uint64_t> seed;
  std::vector<ReportRow> rows;
  std::vector<std::string> violations;
  std::map<std::string, std::string> meta;

  void pass(const std::string& name, const std::string& detail = "");
  void fail(const std::string& name, const std::string& detail = "");
  void info(const std::string& name, const std::string& detail = "");
  bool all_pass() const;

  bool operator==(const Report& o) const {
    return title == o.title && seed == o.seed && rows == o.rows && violations == o.violations &&
           meta == o.meta;
  }
};

std::string render_text(const Report& r);
std::string render_machine(const Report& r);
Report report_from_machine(const std::string& text);

}  // namespace hflab

#endif  // HFLAB_REPORT_HPP
