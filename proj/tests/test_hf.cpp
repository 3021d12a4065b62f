#include <doctest.h>

#include "hflab/hf.hpp"

using namespace hflab;

namespace {

// Independent set-level membership oracle for transport checks: decode both
// codes and compare against the structural children list.
bool set_level_mem(const Nat& x, const Nat& c) {
  HFSet sx = ack_decode(x);
  HFSet sc = ack_decode(c);
  for (const auto& ch : sc.children())
    if (ch == sx) return true;
  return false;
}

// Brute-force hereditary-member closure, the oracle for transitive_closure.
void collect_members(const HFSet& s, std::vector<HFSet>& out) {
  for (const auto& c : s.children()) {
    out.push_back(c);
    collect_members(c, out);
  }
}

HFSet tc_oracle(const HFSet& s) {
  std::vector<HFSet> members;
  collect_members(s, members);
  return HFSet::from_children(std::move(members));
}

}  // namespace

TEST_CASE("encode examples") {
  HFSet e = HFSet::empty();
  CHECK(ack_encode(e) == 0);
  HFSet one = HFSet::from_children({e});
  CHECK(ack_encode(one) == 1);  // 2^0
  HFSet pair = HFSet::from_children({e, one});
  CHECK(ack_encode(pair) == 3);  // 2^0 + 2^1
}

TEST_CASE("decode examples") {
  CHECK(ack_decode(Nat(0)) == HFSet::empty());
  HFSet two = ack_decode(Nat(2));  // {{∅}}
  REQUIRE(two.children().size() == 1);
  CHECK(two.children()[0] == ack_decode(Nat(1)));
  HFSet six = ack_decode(Nat(6));  // bits 1 and 2: {decode(1), decode(2)}
  REQUIRE(six.children().size() == 2);
  CHECK(six.contains(ack_decode(Nat(1))));
  CHECK(six.contains(ack_decode(Nat(2))));
}

TEST_CASE("ack_mem examples") {
  CHECK(ack_mem(Nat(0), Nat(1)));
  CHECK(ack_mem(Nat(1), Nat(2)));
  CHECK_FALSE(ack_mem(Nat(2), Nat(3)));
}

TEST_CASE("transitive closure") {
  CHECK(transitive_closure(HFSet::empty()) == HFSet::empty());

  // one unfolding step: TC({{∅}}) = {{∅}, ∅}
  HFSet s = ack_decode(Nat(2));
  HFSet tc = transitive_closure(s);
  CHECK(tc == ack_decode(Nat(3)));

  // oracle-derived values. decode(6) = {{∅},{{∅}}} closes to {∅,{∅},{{∅}}},
  // i.e. code 7; decode(10) = {{∅},{∅,{∅}}} closes to code 11.
  CHECK(tc_oracle(ack_decode(Nat(6))) == ack_decode(Nat(7)));
  CHECK(transitive_closure_code(Nat(6)) == 7);
  CHECK(tc_oracle(ack_decode(Nat(10))) == ack_decode(Nat(11)));
  CHECK(transitive_closure_code(Nat(10)) == 11);

  for (unsigned long n = 0; n < 2048; ++n) {
    HFSet x = ack_decode(Nat(n));
    CHECK(transitive_closure(x) == tc_oracle(x));
  }

  // result is transitive
  HFSet t = transitive_closure(ack_decode(Nat(1234)));
  for (const auto& a : t.children())
    for (const auto& b : a.children()) CHECK(t.contains(b));
}

TEST_CASE("rank") {
  CHECK(rank(HFSet::empty()) == 0);
  CHECK(rank(ack_decode(Nat(2))) == 2);  // {{∅}}
  CHECK(rank(ack_decode(Nat(3))) == 2);  // {∅,{∅}}
  // V4 boundary: codes 0..15 have rank ≤ 3, code 16 has rank 4
  for (unsigned long n = 0; n < 16; ++n) CHECK(ack_decode(Nat(n)).rank() <= 3);
  CHECK(ack_decode(Nat(16)).rank() == 4);
}

TEST_CASE("bijection on a 2^12 slice") {
  for (unsigned long n = 0; n < (1ul << 12); ++n) {
    HFSet s = ack_decode(Nat(n));
    CHECK(ack_encode(s) == n);
  }
}

TEST_CASE("membership transport on a slice") {
  for (unsigned long b = 0; b < 512; ++b)
    for (unsigned long a = 0; a < 16; ++a)
      CHECK(ack_mem(Nat(a), Nat(b)) == set_level_mem(Nat(a), Nat(b)));
}

TEST_CASE("code is monotone along membership") {
  for (unsigned long c = 1; c < 4096; ++c)
    nat_for_each_bit(Nat(c), [&](unsigned long x) { CHECK(x < c); });
}

TEST_CASE("domain enumeration") {
  auto v3 = enumerate_domain(DomainSpec::rank_cap(3));
  REQUIRE(v3.size() == 4);
  for (unsigned long i = 0; i < 4; ++i) CHECK(v3[i] == i);

  auto v4 = enumerate_domain(DomainSpec::rank_cap(4));
  CHECK(v4.size() == 16);

  auto c5 = enumerate_domain(DomainSpec::code_cap(Nat(5)));
  REQUIRE(c5.size() == 5);
  CHECK(c5[4] == 4);

  CHECK(enumerate_domain(DomainSpec::rank_cap(5)).size() == 65536);
  CHECK_THROWS_AS(enumerate_domain(DomainSpec::rank_cap(6)), ResourceError);
  CHECK_THROWS_AS(enumerate_domain(DomainSpec::code_cap(Nat(1) << 20)), ResourceError);

  // rank(s) < r  ⟺  encode(s) ∈ enumerate_domain(rank_cap(r))
  for (unsigned long n = 0; n < 64; ++n) {
    bool in_v4 = n < 16;
    CHECK((ack_decode(Nat(n)).rank() < 4) == in_v4);
  }
}

TEST_CASE("domain spec parsing") {
  CHECK(DomainSpec::parse("rank:4") == DomainSpec::rank_cap(4));
  CHECK(DomainSpec::parse("code:16") == DomainSpec::code_cap(Nat(16)));
  CHECK_THROWS_AS(DomainSpec::parse("weird"), UsageError);
  CHECK_THROWS_AS(DomainSpec::parse("rank:x"), UsageError);
}

TEST_CASE("set literals") {
  CHECK(ack_encode(parse_set_literal("{}")) == 0);
  CHECK(ack_encode(parse_set_literal("{0,1}")) == 3);
  CHECK(ack_encode(parse_set_literal("{{},{0,1}}")) == 9);  // 2^0 + 2^3
  CHECK(ack_encode(parse_set_literal("6")) == 6);
  CHECK(ack_encode(parse_set_literal("{0,0,1}")) == 3);  // duplicates collapse
  CHECK_THROWS_AS(parse_set_literal("{0,1"), ParseError);
  CHECK(print_set(parse_set_literal("{0,1}")) == "{0,1}");
}

TEST_CASE("structural order agrees with code order") {
  for (unsigned long a = 0; a < 128; ++a)
    for (unsigned long b = 0; b < 128; ++b) {
      int c = HFSet::cmp(ack_decode(Nat(a)), ack_decode(Nat(b)));
      int expect = a < b ? -1 : a > b ? 1 : 0;
      CHECK(c == expect);
    }
}
