#ifndef HFLAB_ERRORS_HPP
#define HFLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hflab {

// Exit codes used by the CLI. 0 = success / all checks pass, 1 = a query
// evaluated to false, 2 = an audit found violations; 3+ are errors, one code
// per error family so scripts can tell them apart.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kViolations = 2;
inline constexpr int kUsage = 3;
inline constexpr int kArtifactUnreadable = 4;
inline constexpr int kVersionMismatch = 5;
inline constexpr int kParse = 6;
inline constexpr int kBadInput = 7;  // signature / domain / fragment / arity
inline constexpr int kReachExceeded = 8;
inline constexpr int kResource = 9;
inline constexpr int kStructural = 10;
inline constexpr int kInternal = 11;
}  // namespace exit_code

class Error : public std::runtime_error {
 public:
  Error(std::string msg, int code) : std::runtime_error(std::move(msg)), code_(code) {}
  int exit_code() const { return code_; }

 private:
  int code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, size_t position)
      : Error(msg + " (at offset " + std::to_string(position) + ")", exit_code::kParse),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

struct SignatureError : Error {
  explicit SignatureError(const std::string& msg) : Error(msg, exit_code::kBadInput) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg, exit_code::kBadInput) {}
};

struct FragmentError : Error {
  explicit FragmentError(const std::string& msg) : Error(msg, exit_code::kBadInput) {}
};

struct ArityError : Error {
  explicit ArityError(const std::string& msg) : Error(msg, exit_code::kBadInput) {}
};

struct ReachExceededError : Error {
  explicit ReachExceededError(const std::string& msg) : Error(msg, exit_code::kReachExceeded) {}
};

struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error(msg, exit_code::kResource) {}
};

// Malformed proof trees; `path` locates the offending node ("root.1.0").
class StructuralError : public Error {
 public:
  StructuralError(const std::string& msg, std::string path)
      : Error(msg + " [node " + path + "]", exit_code::kStructural), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ArtifactError : Error {
  explicit ArtifactError(const std::string& msg) : Error(msg, exit_code::kArtifactUnreadable) {}
};

struct VersionError : Error {
  explicit VersionError(const std::string& msg) : Error(msg, exit_code::kVersionMismatch) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error(msg, exit_code::kUsage) {}
};

}  // namespace hflab

#endif  // HFLAB_ERRORS_HPP
