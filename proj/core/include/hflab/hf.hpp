#ifndef HFLAB_HF_HPP
#define HFLAB_HF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hflab/errors.hpp"
#include "hflab/nat.hpp"

namespace hflab {

namespace detail {
struct HFNode;
}

// A hereditarily finite set: immutable, hash-consed, extensional by
// construction (children deduplicated, sorted descending in code order).
// The canonical name of a set is its Ackermann code, Σ 2^code(child); codes
// are materialized at construction whenever the bit positions stay within
// kMaxCodeBits, and are absent for monsters like the 6th von Neumann ordinal.
class HFSet {
 public:
  // Largest bit index a materialized code may use. Rank ≤ 5 ordinals and all
  // of V5 stay far below this; anything beyond cannot be written down.
  static constexpr unsigned long kMaxCodeBits = 1ul << 20;

  HFSet() : node_(nullptr) {}

  static HFSet empty();
  static HFSet from_children(std::vector<HFSet> children);

  const std::vector<HFSet>& children() const;
  uint32_t rank() const;

  bool has_code() const;
  const Nat& code() const;  // ResourceError when not materializable

  bool contains(const HFSet& x) const;  // set-level membership

  bool operator==(const HFSet& o) const { return node_ == o.node_; }
  bool operator!=(const HFSet& o) const { return node_ != o.node_; }
  explicit operator bool() const { return node_ != nullptr; }
  const detail::HFNode* raw() const { return node_; }

  // Total order agreeing with code order, computed structurally so it also
  // covers sets whose codes cannot be materialized.
  static int cmp(const HFSet& a, const HFSet& b);

 private:
  explicit HFSet(const detail::HFNode* n) : node_(n) {}
  const detail::HFNode* node_;
  friend HFSet intern_hfset(std::vector<HFSet>&&);
};

struct HFSetHash {
  size_t operator()(const HFSet& s) const { return std::hash<const void*>{}(s.raw()); }
};

Nat ack_encode(const HFSet& s);
HFSet ack_decode(const Nat& n);  // memoized across calls

// x ∈_Ack c iff bit x of c's binary expansion is 1.
inline bool ack_mem(const Nat& x, const Nat& c) { return nat_bit(c, x); }

// Smallest transitive superset of s's elements (s itself is not included).
HFSet transitive_closure(const HFSet& s);
Nat transitive_closure_code(const Nat& n);

inline uint32_t rank(const HFSet& s) { return s.rank(); }

// Enumerable fragments of the universe. Both kinds induce ∈-transitive
// domains: rank_cap(r) is all sets of rank < r, code_cap(N) all codes < N.
struct DomainSpec {
  enum class Kind : uint8_t { RankCap, CodeCap };
  Kind kind = Kind::RankCap;
  uint32_t rank = 0;  // RankCap
  Nat cap;            // CodeCap

  static DomainSpec rank_cap(uint32_t r);
  static DomainSpec code_cap(const Nat& n);
  static DomainSpec parse(const std::string& text);  // "rank:4" / "code:16"
  std::string str() const;

  bool operator==(const DomainSpec& o) const {
    return kind == o.kind && rank == o.rank && cap == o.cap;
  }
};

inline constexpr unsigned long kDefaultDomainBudget = 1ul << 16;

// Ascending codes of exactly the induced domain; rank_cap(r) yields
// 0..|V_r|-1 since the Ackermann coding enumerates the cumulative stages.
// ResourceError (naming the required size) if the domain exceeds the budget.
std::vector<Nat> enumerate_domain(const DomainSpec& d,
                                  unsigned long budget = kDefaultDomainBudget);

// Number of elements of the induced domain, as a decimal string; rank caps
// beyond the representable range come back symbolically ("2^65536").
std::string domain_size_str(const DomainSpec& d);

// Set literals for the CLI: `{}`, `{0,1}`, `{{},{0,1}}`; a bare natural N
// denotes ack_decode(N).
HFSet parse_set_literal(const std::string& text);
std::string print_set(const HFSet& s);  // codes where possible

}  // namespace hflab

#endif  // HFLAB_HF_HPP
