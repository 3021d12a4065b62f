#ifndef HFLAB_STRUCTURE_HPP
#define HFLAB_STRUCTURE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hflab/hf.hpp"

namespace hflab {

// An enumerated, ∈-transitive fragment of (V_ω, ∈). Membership is the
// Ackermann bit relation, equality is code equality, and every element a is
// named by the constant c_a. Immutable once built.
//
// Two flavors:
//   - from_spec: rank- or code-capped contiguous domains (codes 0..N-1);
//   - from_seeds: the ∈-downward closure of explicit sets, for structures
//     whose elements live far beyond any enumerable rank cap (the bridge's
//     recursion-function witnesses).
class FiniteStructure {
 public:
  static FiniteStructure from_spec(const DomainSpec& d,
                                   unsigned long budget = kDefaultDomainBudget);
  static FiniteStructure from_seeds(const std::vector<HFSet>& seeds);

  size_t size() const { return sets_.size(); }
  bool contiguous() const { return contiguous_; }
  bool has_spec() const { return spec_.has_value(); }
  const DomainSpec& spec() const;

  // Elements in ascending code order; for contiguous structures element i
  // has code i.
  const HFSet& set_at(size_t i) const { return sets_[i]; }
  std::optional<size_t> find_code(const Nat& code) const;
  std::optional<size_t> find_set(const HFSet& s) const;

  bool mem(size_t a, size_t b) const;  // element a ∈ element b

  std::string describe() const;

 private:
  FiniteStructure() = default;
  bool contiguous_ = false;
  std::optional<DomainSpec> spec_;
  std::vector<HFSet> sets_;
  std::unordered_map<const detail::HFNode*, size_t> index_;
};

}  // namespace hflab

#endif  // HFLAB_STRUCTURE_HPP
