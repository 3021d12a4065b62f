#include "hflab/structure.hpp"

#include <algorithm>

namespace hflab {

FiniteStructure FiniteStructure::from_spec(const DomainSpec& d, unsigned long budget) {
  FiniteStructure s;
  s.contiguous_ = true;
  s.spec_ = d;
  auto codes = enumerate_domain(d, budget);
  s.sets_.reserve(codes.size());
  for (const auto& c : codes) s.sets_.push_back(ack_decode(c));
  for (size_t i = 0; i < s.sets_.size(); ++i) s.index_[s.sets_[i].raw()] = i;
  return s;
}

FiniteStructure FiniteStructure::from_seeds(const std::vector<HFSet>& seeds) {
  FiniteStructure s;
  s.contiguous_ = false;
  // downward closure under ∈
  std::vector<HFSet> work = seeds;
  std::unordered_map<const detail::HFNode*, bool> seen;
  while (!work.empty()) {
    HFSet x = work.back();
    work.pop_back();
    if (seen.count(x.raw())) continue;
    seen[x.raw()] = true;
    s.sets_.push_back(x);
    for (const auto& c : x.children()) work.push_back(c);
  }
  std::sort(s.sets_.begin(), s.sets_.end(),
            [](const HFSet& a, const HFSet& b) { return HFSet::cmp(a, b) < 0; });
  for (size_t i = 0; i < s.sets_.size(); ++i) s.index_[s.sets_[i].raw()] = i;
  return s;
}

const DomainSpec& FiniteStructure::spec() const {
  if (!spec_) throw UsageError("structure was built from seeds, not from a domain spec");
  return *spec_;
}

std::optional<size_t> FiniteStructure::find_code(const Nat& code) const {
  if (contiguous_) {
    if (code < static_cast<unsigned long>(sets_.size())) return code.get_ui();
    return std::nullopt;
  }
  return find_set(ack_decode(code));
}

std::optional<size_t> FiniteStructure::find_set(const HFSet& s) const {
  auto it = index_.find(s.raw());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteStructure::mem(size_t a, size_t b) const {
  if (contiguous_) return a < 64 && ((b >> a) & 1ul);
  return sets_[b].contains(sets_[a]);
}

std::string FiniteStructure::describe() const {
  if (spec_) return spec_->str() + " (" + std::to_string(sets_.size()) + " elements)";
  return "seeded transitive domain (" + std::to_string(sets_.size()) + " elements)";
}

}  // namespace hflab
