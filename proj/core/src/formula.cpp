#include "hflab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_set>

namespace hflab {
namespace detail {

struct TermNode {
  TermKind kind;
  uint32_t var = 0;
  Nat code;  // Const payload
  const TermNode* a = nullptr;
  const TermNode* b = nullptr;

  // cached attributes
  uint32_t node_count = 1;
  uint32_t max_var_excl = 0;
  std::vector<uint32_t> free_vars;
  size_t hash = 0;
};

struct FormulaNode {
  FormulaKind kind;
  Sig sig;
  const TermNode* t0 = nullptr;
  const TermNode* t1 = nullptr;
  const FormulaNode* f0 = nullptr;
  const FormulaNode* f1 = nullptr;
  uint32_t bound = 0;

  uint32_t depth = 1;
  uint64_t node_count = 1;
  uint32_t max_var_excl = 0;
  std::vector<uint32_t> free_vars;
  size_t hash = 0;
};

namespace {

size_t mix(size_t h, size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

size_t term_hash(const TermNode& n) {
  size_t h = static_cast<size_t>(n.kind) * 0x100000001b3ull;
  switch (n.kind) {
    case TermKind::Var: return mix(h, n.var);
    case TermKind::Const: return mix(h, nat_hash(n.code));
    case TermKind::Zero: return h;
    case TermKind::Succ: return mix(h, std::hash<const void*>{}(n.a));
    case TermKind::Add:
    case TermKind::Mul:
      return mix(mix(h, std::hash<const void*>{}(n.a)), std::hash<const void*>{}(n.b));
  }
  return h;
}

bool term_eq(const TermNode& x, const TermNode& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case TermKind::Var: return x.var == y.var;
    case TermKind::Const: return x.code == y.code;
    case TermKind::Zero: return true;
    case TermKind::Succ: return x.a == y.a;
    case TermKind::Add:
    case TermKind::Mul: return x.a == y.a && x.b == y.b;
  }
  return false;
}

size_t formula_hash(const FormulaNode& n) {
  size_t h = mix(static_cast<size_t>(n.kind) * 0x9ddfea08eb382d69ull, static_cast<size_t>(n.sig));
  h = mix(h, std::hash<const void*>{}(n.t0));
  h = mix(h, std::hash<const void*>{}(n.t1));
  h = mix(h, std::hash<const void*>{}(n.f0));
  h = mix(h, std::hash<const void*>{}(n.f1));
  return mix(h, n.bound);
}

bool formula_eq(const FormulaNode& x, const FormulaNode& y) {
  return x.kind == y.kind && x.sig == y.sig && x.t0 == y.t0 && x.t1 == y.t1 && x.f0 == y.f0 &&
         x.f1 == y.f1 && x.bound == y.bound;
}

std::vector<uint32_t> merge_vars(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct TermTable {
  struct H {
    size_t operator()(const TermNode* n) const { return n->hash; }
  };
  struct E {
    bool operator()(const TermNode* a, const TermNode* b) const { return term_eq(*a, *b); }
  };
  std::mutex mu;
  std::unordered_set<const TermNode*, H, E> set;
  std::vector<std::unique_ptr<TermNode>> storage;
};

struct FormulaTable {
  struct H {
    size_t operator()(const FormulaNode* n) const { return n->hash; }
  };
  struct E {
    bool operator()(const FormulaNode* a, const FormulaNode* b) const {
      return formula_eq(*a, *b);
    }
  };
  std::mutex mu;
  std::unordered_set<const FormulaNode*, H, E> set;
  std::vector<std::unique_ptr<FormulaNode>> storage;
};

TermTable& term_table() {
  static TermTable t;
  return t;
}
FormulaTable& formula_table() {
  static FormulaTable t;
  return t;
}

}  // namespace
}  // namespace detail

using detail::FormulaNode;
using detail::TermNode;

Term intern_term(TermNode&& proto) {
  proto.hash = detail::term_hash(proto);
  auto& tab = detail::term_table();
  std::lock_guard<std::mutex> lock(tab.mu);
  auto it = tab.set.find(&proto);
  if (it != tab.set.end()) return Term(*it);
  auto owned = std::make_unique<TermNode>(std::move(proto));
  const TermNode* p = owned.get();
  tab.storage.push_back(std::move(owned));
  tab.set.insert(p);
  return Term(p);
}

Formula intern_formula(FormulaNode&& proto) {
  proto.hash = detail::formula_hash(proto);
  auto& tab = detail::formula_table();
  std::lock_guard<std::mutex> lock(tab.mu);
  auto it = tab.set.find(&proto);
  if (it != tab.set.end()) return Formula(*it);
  auto owned = std::make_unique<FormulaNode>(std::move(proto));
  const FormulaNode* p = owned.get();
  tab.storage.push_back(std::move(owned));
  tab.set.insert(p);
  return Formula(p);
}

// ---------------------------------------------------------------- terms

Term Term::var(uint32_t index) {
  TermNode n;
  n.kind = TermKind::Var;
  n.var = index;
  n.max_var_excl = index + 1;
  n.free_vars = {index};
  return intern_term(std::move(n));
}

Term Term::constant(const Nat& code) {
  TermNode n;
  n.kind = TermKind::Const;
  n.code = code;
  return intern_term(std::move(n));
}

Term Term::zero() {
  TermNode n;
  n.kind = TermKind::Zero;
  return intern_term(std::move(n));
}

Term Term::succ(Term t) {
  TermNode n;
  n.kind = TermKind::Succ;
  n.a = t.node_;
  n.node_count = 1 + t.node_count();
  n.max_var_excl = t.max_var_excl();
  n.free_vars = t.free_vars();
  return intern_term(std::move(n));
}

static Term binary_term(TermKind kind, Term a, Term b) {
  TermNode n;
  n.kind = kind;
  n.a = a.raw();
  n.b = b.raw();
  n.node_count = 1 + a.node_count() + b.node_count();
  n.max_var_excl = std::max(a.max_var_excl(), b.max_var_excl());
  n.free_vars = detail::merge_vars(a.free_vars(), b.free_vars());
  return intern_term(std::move(n));
}

Term Term::add(Term a, Term b) { return binary_term(TermKind::Add, a, b); }
Term Term::mul(Term a, Term b) { return binary_term(TermKind::Mul, a, b); }

Term Term::numeral(const Nat& n) {
  if (!n.fits_ulong_p())
    throw ResourceError("numeral: value too large to spell as S^n(0): " + nat_str(n));
  Term t = Term::zero();
  for (unsigned long i = 0, k = n.get_ui(); i < k; ++i) t = Term::succ(t);
  return t;
}

TermKind Term::kind() const { return node_->kind; }
uint32_t Term::var_index() const { return node_->var; }
const Nat& Term::const_code() const { return node_->code; }

Term Term::child(int i) const { return Term(i == 0 ? node_->a : node_->b); }

int Term::arity() const {
  switch (node_->kind) {
    case TermKind::Var:
    case TermKind::Const:
    case TermKind::Zero: return 0;
    case TermKind::Succ: return 1;
    case TermKind::Add:
    case TermKind::Mul: return 2;
  }
  return 0;
}

uint32_t Term::node_count() const { return node_->node_count; }
bool Term::closed() const { return node_->free_vars.empty(); }
const std::vector<uint32_t>& Term::free_vars() const { return node_->free_vars; }
uint32_t Term::max_var_excl() const { return node_->max_var_excl; }

bool Term::valid_in(Sig sig) const {
  switch (node_->kind) {
    case TermKind::Var: return true;
    case TermKind::Const: return sig == Sig::Set;
    case TermKind::Zero:
    case TermKind::Succ:
      if (sig == Sig::Set) return false;
      break;
    case TermKind::Add:
    case TermKind::Mul:
      if (sig != Sig::Arith) return false;
      break;
  }
  for (int i = 0; i < arity(); ++i)
    if (!child(i).valid_in(sig)) return false;
  return true;
}

// ------------------------------------------------------------- formulas

static void require_term_sig(const Term& t, Sig sig, const char* what) {
  if (!t.valid_in(sig))
    throw SignatureError(std::string(what) + ": term " + print_term(t) +
                         " is not well-formed under the requested signature");
}

static Formula make_atom(FormulaKind kind, Term a, Term b, Sig sig) {
  FormulaNode n;
  n.kind = kind;
  n.sig = sig;
  n.t0 = a.raw();
  n.t1 = b.raw();
  n.depth = 1;
  n.node_count = 1 + a.node_count() + b.node_count();
  n.max_var_excl = std::max(a.max_var_excl(), b.max_var_excl());
  n.free_vars = detail::merge_vars(a.free_vars(), b.free_vars());
  return intern_formula(std::move(n));
}

Formula Formula::eq(Term a, Term b, Sig sig) {
  require_term_sig(a, sig, "eq");
  require_term_sig(b, sig, "eq");
  return make_atom(FormulaKind::Eq, a, b, sig);
}

Formula Formula::in(Term a, Term b) {
  require_term_sig(a, Sig::Set, "in");
  require_term_sig(b, Sig::Set, "in");
  return make_atom(FormulaKind::In, a, b, Sig::Set);
}

Formula Formula::ack_mem(Term a, Term b) {
  require_term_sig(a, Sig::NatRel, "ackmem");
  require_term_sig(b, Sig::NatRel, "ackmem");
  return make_atom(FormulaKind::AckMem, a, b, Sig::NatRel);
}

Formula Formula::lnot(Formula f) {
  FormulaNode n;
  n.kind = FormulaKind::Not;
  n.sig = f.sig();
  n.f0 = f.raw();
  n.depth = f.depth() + 1;
  n.node_count = f.node_count() + 1;
  n.max_var_excl = f.max_var_excl();
  n.free_vars = f.free_vars();
  return intern_formula(std::move(n));
}

Formula Formula::lor(Formula a, Formula b) {
  if (a.sig() != b.sig()) throw SignatureError("or: mixed signatures");
  FormulaNode n;
  n.kind = FormulaKind::Or;
  n.sig = a.sig();
  n.f0 = a.raw();
  n.f1 = b.raw();
  n.depth = std::max(a.depth(), b.depth()) + 1;
  n.node_count = a.node_count() + b.node_count() + 1;
  n.max_var_excl = std::max(a.max_var_excl(), b.max_var_excl());
  n.free_vars = detail::merge_vars(a.free_vars(), b.free_vars());
  return intern_formula(std::move(n));
}

Formula Formula::exists(uint32_t var, Formula body) {
  FormulaNode n;
  n.kind = FormulaKind::Exists;
  n.sig = body.sig();
  n.f0 = body.raw();
  n.bound = var;
  n.depth = body.depth() + 1;
  n.node_count = body.node_count() + 1;
  n.max_var_excl = std::max(body.max_var_excl(), var + 1);
  n.free_vars = body.free_vars();
  n.free_vars.erase(std::remove(n.free_vars.begin(), n.free_vars.end(), var),
                    n.free_vars.end());
  return intern_formula(std::move(n));
}

Formula Formula::land(Formula a, Formula b) { return lnot(lor(lnot(a), lnot(b))); }
Formula Formula::imp(Formula a, Formula b) { return lor(lnot(a), b); }
Formula Formula::forall(uint32_t var, Formula body) { return lnot(exists(var, lnot(body))); }
Formula Formula::iff(Formula a, Formula b) { return land(imp(a, b), imp(b, a)); }

FormulaKind Formula::kind() const { return node_->kind; }
Sig Formula::sig() const { return node_->sig; }

bool Formula::atomic() const {
  return node_->kind == FormulaKind::Eq || node_->kind == FormulaKind::In ||
         node_->kind == FormulaKind::AckMem;
}

Term Formula::term(int i) const { return Term(i == 0 ? node_->t0 : node_->t1); }
Formula Formula::child(int i) const { return Formula(i == 0 ? node_->f0 : node_->f1); }
uint32_t Formula::bound_var() const { return node_->bound; }
uint32_t Formula::depth() const { return node_->depth; }
uint64_t Formula::node_count() const { return node_->node_count; }
bool Formula::closed() const { return node_->free_vars.empty(); }
const std::vector<uint32_t>& Formula::free_vars() const { return node_->free_vars; }
uint32_t Formula::max_var_excl() const { return node_->max_var_excl; }

std::vector<Formula> Formula::immediate_subformulas() const {
  switch (node_->kind) {
    case FormulaKind::Eq:
    case FormulaKind::In:
    case FormulaKind::AckMem: return {};
    case FormulaKind::Not:
    case FormulaKind::Exists: return {child(0)};
    case FormulaKind::Or: return {child(0), child(1)};
  }
  return {};
}

// ------------------------------------------------------------ ordering

int compare(const Term& a, const Term& b) {
  if (a == b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case TermKind::Var:
      return a.var_index() < b.var_index() ? -1 : 1;
    case TermKind::Const:
      return cmp(a.const_code(), b.const_code()) < 0 ? -1 : 1;
    case TermKind::Zero: return 0;
    default: break;
  }
  for (int i = 0; i < a.arity(); ++i)
    if (int c = compare(a.child(i), b.child(i))) return c;
  return 0;
}

int compare(const Formula& a, const Formula& b) {
  if (a == b) return 0;
  if (a.sig() != b.sig()) return a.sig() < b.sig() ? -1 : 1;
  if (a.node_count() != b.node_count()) return a.node_count() < b.node_count() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.atomic()) {
    if (int c = compare(a.term(0), b.term(0))) return c;
    return compare(a.term(1), b.term(1));
  }
  if (a.kind() == FormulaKind::Exists && a.bound_var() != b.bound_var())
    return a.bound_var() < b.bound_var() ? -1 : 1;
  if (int c = compare(a.child(0), b.child(0))) return c;
  if (a.kind() == FormulaKind::Or) return compare(a.child(1), b.child(1));
  return 0;
}

// -------------------------------------------------------------- parser

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos];
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  std::string symbol() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (start == pos) throw ParseError("expected a symbol", pos);
    return text.substr(start, pos - start);
  }
};

uint32_t parse_var_symbol(const std::string& s, size_t at) {
  if (s.size() < 2 || s[0] != 'v') throw ParseError("expected a variable vN, got '" + s + "'", at);
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("malformed variable '" + s + "'", at);
  unsigned long v = std::stoul(s.substr(1));
  if (v > 0xFFFFFFFFull) throw ParseError("variable index out of range", at);
  return static_cast<uint32_t>(v);
}

Nat parse_nat_symbol(const std::string& s, size_t at) {
  if (s.empty()) throw ParseError("expected a natural number", at);
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed natural '" + s + "'", at);
  return Nat(s);
}

Term parse_term_inner(Lexer& lx, Sig sig) {
  if (lx.peek() != '(') {
    size_t at = lx.pos;
    return Term::var(parse_var_symbol(lx.symbol(), at));
  }
  lx.expect('(');
  size_t at = lx.pos;
  std::string head = lx.symbol();
  Term result;
  if (head == "c") {
    if (sig != Sig::Set) throw SignatureError("constant (c N) requires the set signature");
    size_t nat_at = lx.pos;
    result = Term::constant(parse_nat_symbol(lx.symbol(), nat_at));
  } else if (head == "num") {
    if (sig == Sig::Set) throw SignatureError("(num 0) is not a set-signature term");
    size_t nat_at = lx.pos;
    Nat z = parse_nat_symbol(lx.symbol(), nat_at);
    if (z != 0) throw ParseError("(num N) only admits 0; build S-chains for larger values", nat_at);
    result = Term::zero();
  } else if (head == "S") {
    if (sig == Sig::Set) throw SignatureError("successor is not a set-signature symbol");
    result = Term::succ(parse_term_inner(lx, sig));
  } else if (head == "+" || head == "*") {
    if (sig != Sig::Arith)
      throw SignatureError("'" + head + "' requires the arithmetic signature");
    Term a = parse_term_inner(lx, sig);
    Term b = parse_term_inner(lx, sig);
    result = head == "+" ? Term::add(a, b) : Term::mul(a, b);
  } else {
    throw ParseError("unknown term head '" + head + "'", at);
  }
  lx.expect(')');
  return result;
}

Formula parse_formula_inner(Lexer& lx, Sig sig) {
  lx.expect('(');
  size_t at = lx.pos;
  std::string head = lx.symbol();
  Formula result;
  if (head == "=" || head == "in" || head == "ackmem") {
    Term a = parse_term_inner(lx, sig);
    Term b = parse_term_inner(lx, sig);
    if (head == "=") {
      result = Formula::eq(a, b, sig);
    } else if (head == "in") {
      if (sig != Sig::Set) throw SignatureError("'in' requires the set signature");
      result = Formula::in(a, b);
    } else {
      if (sig != Sig::NatRel) throw SignatureError("'ackmem' requires the relational signature");
      result = Formula::ack_mem(a, b);
    }
  } else if (head == "not") {
    result = Formula::lnot(parse_formula_inner(lx, sig));
  } else if (head == "or" || head == "and" || head == "imp") {
    Formula a = parse_formula_inner(lx, sig);
    Formula b = parse_formula_inner(lx, sig);
    result = head == "or"    ? Formula::lor(a, b)
             : head == "and" ? Formula::land(a, b)
                             : Formula::imp(a, b);
  } else if (head == "exists" || head == "forall") {
    size_t var_at = lx.pos;
    uint32_t v = parse_var_symbol(lx.symbol(), var_at);
    Formula body = parse_formula_inner(lx, sig);
    result = head == "exists" ? Formula::exists(v, body) : Formula::forall(v, body);
  } else {
    throw ParseError("unknown formula head '" + head + "'", at);
  }
  lx.expect(')');
  return result;
}

}  // namespace

Formula parse_formula(const std::string& text, Sig sig) {
  Lexer lx(text);
  Formula f = parse_formula_inner(lx, sig);
  if (!lx.at_end()) throw ParseError("trailing input after formula", lx.pos);
  return f;
}

Term parse_term(const std::string& text, Sig sig) {
  Lexer lx(text);
  Term t = parse_term_inner(lx, sig);
  if (!lx.at_end()) throw ParseError("trailing input after term", lx.pos);
  return t;
}

// ------------------------------------------------------------- printer

static void print_term_to(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out += 'v';
      out += std::to_string(t.var_index());
      return;
    case TermKind::Const:
      out += "(c ";
      out += nat_str(t.const_code());
      out += ')';
      return;
    case TermKind::Zero:
      out += "(num 0)";
      return;
    case TermKind::Succ:
      out += "(S ";
      print_term_to(t.child(0), out);
      out += ')';
      return;
    case TermKind::Add:
    case TermKind::Mul:
      out += t.kind() == TermKind::Add ? "(+ " : "(* ";
      print_term_to(t.child(0), out);
      out += ' ';
      print_term_to(t.child(1), out);
      out += ')';
      return;
  }
}

static void print_formula_to(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::In:
    case FormulaKind::AckMem: {
      out += f.kind() == FormulaKind::Eq ? "(= " : f.kind() == FormulaKind::In ? "(in " : "(ackmem ";
      print_term_to(f.term(0), out);
      out += ' ';
      print_term_to(f.term(1), out);
      out += ')';
      return;
    }
    case FormulaKind::Not:
      out += "(not ";
      print_formula_to(f.child(0), out);
      out += ')';
      return;
    case FormulaKind::Or:
      out += "(or ";
      print_formula_to(f.child(0), out);
      out += ' ';
      print_formula_to(f.child(1), out);
      out += ')';
      return;
    case FormulaKind::Exists:
      out += "(exists v";
      out += std::to_string(f.bound_var());
      out += ' ';
      print_formula_to(f.child(0), out);
      out += ')';
      return;
  }
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_to(f, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

// -------------------------------------------------------- substitution

static Term subst_term(const Term& t, uint32_t var, const Term& repl) {
  switch (t.kind()) {
    case TermKind::Var: return t.var_index() == var ? repl : t;
    case TermKind::Const:
    case TermKind::Zero: return t;
    case TermKind::Succ: return Term::succ(subst_term(t.child(0), var, repl));
    case TermKind::Add:
      return Term::add(subst_term(t.child(0), var, repl), subst_term(t.child(1), var, repl));
    case TermKind::Mul:
      return Term::mul(subst_term(t.child(0), var, repl), subst_term(t.child(1), var, repl));
  }
  return t;
}

static Formula subst_inner(const Formula& f, uint32_t var, const Term& t) {
  const auto& fv = f.free_vars();
  if (!std::binary_search(fv.begin(), fv.end(), var)) return f;
  switch (f.kind()) {
    case FormulaKind::Eq:
      return Formula::eq(subst_term(f.term(0), var, t), subst_term(f.term(1), var, t), f.sig());
    case FormulaKind::In:
      return Formula::in(subst_term(f.term(0), var, t), subst_term(f.term(1), var, t));
    case FormulaKind::AckMem:
      return Formula::ack_mem(subst_term(f.term(0), var, t), subst_term(f.term(1), var, t));
    case FormulaKind::Not: return Formula::lnot(subst_inner(f.child(0), var, t));
    case FormulaKind::Or:
      return Formula::lor(subst_inner(f.child(0), var, t), subst_inner(f.child(1), var, t));
    case FormulaKind::Exists: {
      // var free in f and f is a binder, so bound_var() != var here.
      const auto& tv = t.free_vars();
      if (std::binary_search(tv.begin(), tv.end(), f.bound_var()))
        throw SignatureError("substitution would capture v" + std::to_string(f.bound_var()));
      return Formula::exists(f.bound_var(), subst_inner(f.child(0), var, t));
    }
  }
  return f;
}

Formula substitute(const Formula& f, uint32_t var, const Term& t) {
  if (!t.closed())
    throw DomainError("substitute: replacement term " + print_term(t) + " is not closed");
  if (!t.valid_in(f.sig())) throw SignatureError("substitute: term signature mismatch");
  return subst_inner(f, var, t);
}

Formula instantiate(const Formula& f, uint32_t var, const Term& t) {
  if (!t.valid_in(f.sig())) throw SignatureError("instantiate: term signature mismatch");
  return subst_inner(f, var, t);
}

// ------------------------------------------------------------- families

FormulaFamily FormulaFamily::depth_family(Sig sig, uint32_t depth_bound) {
  return FormulaFamily(sig, depth_bound, false);
}

FormulaFamily FormulaFamily::unary_depth_family(Sig sig, uint32_t depth_bound) {
  return FormulaFamily(sig, depth_bound, true);
}

bool FormulaFamily::contains(const Formula& f) const {
  if (!f || f.sig() != sig_) return false;
  if (f.depth() > depth_bound_) return false;
  if (unary_ && f.free_vars().size() > 1) return false;
  return true;
}

bool is_fsent(const Formula& f, const FormulaFamily& family) {
  return f && f.closed() && family.contains(f);
}

}  // namespace hflab
