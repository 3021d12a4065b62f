#include "hflab/hf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace hflab {
namespace detail {

struct HFNode {
  std::vector<HFSet> children;  // descending code order, no duplicates
  uint32_t rank = 0;
  bool has_code = false;
  Nat code;
  size_t hash = 0;
};

namespace {

size_t hf_hash(const std::vector<HFSet>& children) {
  size_t h = 0x2545f4914f6cdd1dull;
  for (const auto& c : children) {
    h ^= std::hash<const void*>{}(c.raw()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

struct Table {
  struct H {
    size_t operator()(const HFNode* n) const { return n->hash; }
  };
  struct E {
    bool operator()(const HFNode* a, const HFNode* b) const { return a->children == b->children; }
  };
  std::mutex mu;
  std::unordered_set<const HFNode*, H, E> set;
  std::vector<std::unique_ptr<HFNode>> storage;
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace
}  // namespace detail

using detail::HFNode;

int HFSet::cmp(const HFSet& a, const HFSet& b) {
  if (a == b) return 0;
  if (a.has_code() && b.has_code()) {
    int c = ::cmp(a.code(), b.code());
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  // Descending children lists compare like binary numbers written msb-first;
  // a proper prefix is the smaller number.
  const auto& x = a.children();
  const auto& y = b.children();
  size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    if (int c = cmp(x[i], y[i])) return c;
  }
  if (x.size() == y.size()) return 0;
  return x.size() < y.size() ? -1 : 1;
}

HFSet intern_hfset(std::vector<HFSet>&& children) {
  std::sort(children.begin(), children.end(),
            [](const HFSet& a, const HFSet& b) { return HFSet::cmp(a, b) > 0; });
  children.erase(std::unique(children.begin(), children.end()), children.end());

  HFNode proto;
  proto.children = std::move(children);
  proto.hash = detail::hf_hash(proto.children);

  auto& tab = detail::table();
  std::lock_guard<std::mutex> lock(tab.mu);
  auto it = tab.set.find(&proto);
  if (it != tab.set.end()) return HFSet(*it);

  uint32_t rk = 0;
  bool codeable = true;
  for (const auto& c : proto.children) {
    rk = std::max(rk, c.rank() + 1);
    if (!c.has_code() || !c.code().fits_ulong_p() || c.code().get_ui() >= HFSet::kMaxCodeBits)
      codeable = false;
  }
  proto.rank = rk;
  if (codeable) {
    proto.has_code = true;
    for (const auto& c : proto.children) nat_set_bit(proto.code, c.code().get_ui());
  }

  auto owned = std::make_unique<HFNode>(std::move(proto));
  const HFNode* p = owned.get();
  tab.storage.push_back(std::move(owned));
  tab.set.insert(p);
  return HFSet(p);
}

HFSet HFSet::empty() { return intern_hfset({}); }

HFSet HFSet::from_children(std::vector<HFSet> children) {
  return intern_hfset(std::move(children));
}

const std::vector<HFSet>& HFSet::children() const { return node_->children; }
uint32_t HFSet::rank() const { return node_->rank; }
bool HFSet::has_code() const { return node_->has_code; }

const Nat& HFSet::code() const {
  if (!node_->has_code)
    throw ResourceError("set code exceeds " + std::to_string(kMaxCodeBits) +
                        " bits and cannot be materialized");
  return node_->code;
}

bool HFSet::contains(const HFSet& x) const {
  // children are sorted descending in code order
  const auto& cs = node_->children;
  auto it = std::lower_bound(cs.begin(), cs.end(), x,
                             [](const HFSet& a, const HFSet& b) { return cmp(a, b) > 0; });
  return it != cs.end() && *it == x;
}

Nat ack_encode(const HFSet& s) { return s.code(); }

namespace {

std::mutex decode_mu;
std::map<Nat, HFSet>& decode_memo() {
  static std::map<Nat, HFSet> m;
  return m;
}

HFSet decode_inner(const Nat& n) {
  {
    std::lock_guard<std::mutex> lock(decode_mu);
    auto it = decode_memo().find(n);
    if (it != decode_memo().end()) return it->second;
  }
  std::vector<HFSet> children;
  nat_for_each_bit(n, [&](unsigned long pos) { children.push_back(decode_inner(Nat(pos))); });
  HFSet s = intern_hfset(std::move(children));
  std::lock_guard<std::mutex> lock(decode_mu);
  decode_memo().emplace(n, s);
  return s;
}

}  // namespace

HFSet ack_decode(const Nat& n) { return decode_inner(n); }

namespace {

std::mutex tc_mu;
std::unordered_map<const HFNode*, HFSet>& tc_memo() {
  static std::unordered_map<const HFNode*, HFSet> m;
  return m;
}

}  // namespace

HFSet transitive_closure(const HFSet& s) {
  {
    std::lock_guard<std::mutex> lock(tc_mu);
    auto it = tc_memo().find(s.raw());
    if (it != tc_memo().end()) return it->second;
  }
  std::vector<HFSet> members;
  for (const auto& c : s.children()) {
    members.push_back(c);
    for (const auto& m : transitive_closure(c).children()) members.push_back(m);
  }
  HFSet out = HFSet::from_children(std::move(members));
  std::lock_guard<std::mutex> lock(tc_mu);
  tc_memo().emplace(s.raw(), out);
  return out;
}

Nat transitive_closure_code(const Nat& n) { return ack_encode(transitive_closure(ack_decode(n))); }

// -------------------------------------------------------------- domains

DomainSpec DomainSpec::rank_cap(uint32_t r) {
  DomainSpec d;
  d.kind = Kind::RankCap;
  d.rank = r;
  return d;
}

DomainSpec DomainSpec::code_cap(const Nat& n) {
  DomainSpec d;
  d.kind = Kind::CodeCap;
  d.cap = n;
  return d;
}

DomainSpec DomainSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("domain spec must look like rank:4 or code:16, got '" + text + "'");
  std::string head = text.substr(0, colon);
  std::string arg = text.substr(colon + 1);
  for (char c : arg)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw UsageError("domain spec argument must be a natural, got '" + arg + "'");
  if (arg.empty()) throw UsageError("domain spec argument missing in '" + text + "'");
  if (head == "rank") return rank_cap(static_cast<uint32_t>(std::stoul(arg)));
  if (head == "code") return code_cap(Nat(arg));
  throw UsageError("unknown domain kind '" + head + "'");
}

std::string DomainSpec::str() const {
  if (kind == Kind::RankCap) return "rank:" + std::to_string(rank);
  return "code:" + nat_str(cap);
}

namespace {

// |V_r| for the cumulative stages; |V_{n+1}| = 2^|V_n| overflows machine
// range at r = 6 (2^65536 elements).
bool stage_size(uint32_t r, unsigned long& out) {
  unsigned long size = 0;
  for (uint32_t i = 0; i < r; ++i) {
    if (size >= 64) return false;
    size = 1ul << size;
  }
  out = size;
  return true;
}

}  // namespace

std::string domain_size_str(const DomainSpec& d) {
  if (d.kind == DomainSpec::Kind::CodeCap) return nat_str(d.cap);
  unsigned long n;
  if (stage_size(d.rank, n)) return std::to_string(n);
  return "2^65536 or more";
}

std::vector<Nat> enumerate_domain(const DomainSpec& d, unsigned long budget) {
  Nat size;
  if (d.kind == DomainSpec::Kind::RankCap) {
    unsigned long n;
    if (!stage_size(d.rank, n))
      throw ResourceError("rank_cap(" + std::to_string(d.rank) + ") has " + domain_size_str(d) +
                          " elements, over the budget of " + std::to_string(budget));
    size = n;
  } else {
    size = d.cap;
  }
  if (size > budget)
    throw ResourceError("domain " + d.str() + " has " + nat_str(size) +
                        " elements, over the budget of " + std::to_string(budget));
  unsigned long n = size.get_ui();
  std::vector<Nat> out;
  out.reserve(n);
  for (unsigned long i = 0; i < n; ++i) out.emplace_back(i);
  return out;
}

// ------------------------------------------------------------- literals

namespace {

struct SetLexer {
  const std::string& text;
  size_t pos = 0;
  explicit SetLexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  HFSet parse() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("expected a set literal", pos);
    if (text[pos] == '{') {
      ++pos;
      std::vector<HFSet> children;
      skip_ws();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        return HFSet::from_children({});
      }
      for (;;) {
        children.push_back(parse());
        skip_ws();
        if (pos >= text.size()) throw ParseError("unterminated set literal", pos);
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        if (text[pos] == '}') {
          ++pos;
          return HFSet::from_children(std::move(children));
        }
        throw ParseError("expected ',' or '}'", pos);
      }
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected '{' or a code", pos);
    return ack_decode(Nat(text.substr(start, pos - start)));
  }
};

}  // namespace

HFSet parse_set_literal(const std::string& text) {
  SetLexer lx(text);
  HFSet s = lx.parse();
  lx.skip_ws();
  if (lx.pos != text.size()) throw ParseError("trailing input after set literal", lx.pos);
  return s;
}

std::string print_set(const HFSet& s) {
  if (s.children().empty()) return "{}";
  std::string out = "{";
  bool first = true;
  // ascending order reads better
  for (auto it = s.children().rbegin(); it != s.children().rend(); ++it) {
    if (!first) out += ",";
    first = false;
    if (it->has_code())
      out += nat_str(it->code());
    else
      out += print_set(*it);
  }
  out += "}";
  return out;
}

}  // namespace hflab
