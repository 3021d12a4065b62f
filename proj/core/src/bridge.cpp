#include "hflab/bridge.hpp"

#include <cctype>
#include <sstream>

namespace hflab {

HFSet ordinal_set(unsigned long n) {
  HFSet s = HFSet::empty();
  for (unsigned long i = 0; i < n; ++i) {
    std::vector<HFSet> children = s.children();
    children.push_back(s);
    s = HFSet::from_children(std::move(children));
  }
  return s;
}

Nat nat_to_ordinal(unsigned long n) { return ack_encode(ordinal_set(n)); }

// ------------------------------------------------------- table formulas
//
// All defining formulas quantify machinery variables from a reserved index
// range (20000+) so instantiating the designated x, y, z can never capture.
// Conjunct order matters operationally: the cheap discriminating clause goes
// first so that the ∃f witness scans reject junk candidates immediately.

namespace {

using F = Formula;

Term V(uint32_t i) { return Term::var(i); }
F in(uint32_t a, uint32_t b) { return F::in(V(a), V(b)); }
F eqv(uint32_t a, uint32_t b) { return F::eq(V(a), V(b), Sig::Set); }

F exists_in(uint32_t v, uint32_t bound, F body) {
  return F::exists(v, F::land(in(v, bound), std::move(body)));
}
F forall_in(uint32_t v, uint32_t bound, F body) {
  return F::forall(v, F::imp(in(v, bound), std::move(body)));
}

constexpr uint32_t B = 20000;

F build_is_zero(uint32_t x) { return F::lnot(F::exists(B + 90, in(B + 90, x))); }

F build_is_transitive(uint32_t x) {
  return forall_in(B + 0, x, forall_in(B + 1, B + 0, in(B + 1, x)));
}

// transitive and ∈-trichotomous: exactly the finite von Neumann ordinals
F build_is_ordinal(uint32_t x) {
  F tricho = forall_in(
      B + 2, x,
      forall_in(B + 3, x,
                F::lor(in(B + 2, B + 3), F::lor(in(B + 3, B + 2), eqv(B + 2, B + 3)))));
  return F::land(build_is_transitive(x), tricho);
}

// y = x ∪ {x}
F build_succ_graph(uint32_t x, uint32_t y) {
  F grow = forall_in(B + 4, y, F::lor(in(B + 4, x), eqv(B + 4, x)));
  F keep = forall_in(B + 5, x, in(B + 5, y));
  return F::land(in(x, y), F::land(grow, keep));
}

// u = {a}
F build_sing_is(uint32_t u, uint32_t a) {
  return F::land(in(a, u), forall_in(B + 6, u, eqv(B + 6, a)));
}

// w = {a, b}
F build_dub_is(uint32_t w, uint32_t a, uint32_t b) {
  return F::land(in(a, w),
                 F::land(in(b, w), forall_in(B + 7, w, F::lor(eqv(B + 7, a), eqv(B + 7, b)))));
}

// p = ⟨a, b⟩, Kuratowski
F build_pair_is(uint32_t p, uint32_t a, uint32_t b) {
  F cover = forall_in(B + 8, p, F::lor(eqv(B + 8, B + 10), eqv(B + 8, B + 11)));
  return exists_in(
      B + 10, p,
      exists_in(B + 11, p,
                F::land(build_sing_is(B + 10, a), F::land(build_dub_is(B + 11, a, b), cover))));
}

// ∃p∈f: p = ⟨i, val⟩
F build_apply(uint32_t f, uint32_t i, uint32_t val) {
  return exists_in(B + 12, f, build_pair_is(B + 12, i, val));
}

// some pair of f is ⟨0, x⟩
F build_anchor(uint32_t f, uint32_t x) {
  return exists_in(
      B + 20, f,
      exists_in(B + 21, B + 20,
                exists_in(B + 22, B + 21,
                          F::land(build_is_zero(B + 22), build_pair_is(B + 20, B + 22, x)))));
}

// some pair of f is ⟨0, 0⟩
F build_anchor_zero(uint32_t f) {
  F inner = exists_in(
      B + 23, B + 20,
      exists_in(B + 24, B + 23,
                F::land(build_is_zero(B + 24), build_pair_is(B + 20, B + 22, B + 24))));
  return exists_in(
      B + 20, f,
      exists_in(B + 21, B + 20,
                exists_in(B + 22, B + 21, F::land(build_is_zero(B + 22), std::move(inner)))));
}

// every i ∈ y has a pair of f with first component S(i)
F build_domain_cover(uint32_t f, uint32_t y) {
  F found = exists_in(
      B + 31, f,
      exists_in(B + 32, B + 31,
                exists_in(B + 33, B + 32,
                          F::land(build_succ_graph(B + 30, B + 33),
                                  exists_in(B + 34, B + 31,
                                            exists_in(B + 35, B + 34,
                                                      build_pair_is(B + 31, B + 33, B + 35)))))));
  return forall_in(B + 30, y, std::move(found));
}

// pairs of f with equal first components have equal second components
F build_functional(uint32_t f) {
  F inner = forall_in(
      B + 44, B + 40,
      forall_in(B + 45, B + 44,
                forall_in(B + 46, B + 42,
                          forall_in(B + 47, B + 46,
                                    F::imp(F::land(build_pair_is(B + 40, B + 41, B + 45),
                                                   build_pair_is(B + 42, B + 43, B + 47)),
                                           eqv(B + 45, B + 47))))));
  return forall_in(
      B + 40, f,
      forall_in(B + 48, B + 40,
                forall_in(B + 41, B + 48,
                          forall_in(B + 42, f,
                                    forall_in(B + 49, B + 42,
                                              forall_in(B + 43, B + 49,
                                                        F::imp(eqv(B + 41, B + 43), inner)))))));
}

// step_body(vi, vv, vj, vb) must hold whenever ⟨vi,vv⟩, ⟨vj,vb⟩ ∈ f and
// vj = S(vi); the successor test runs before the pair extraction.
F build_steps(uint32_t f, F step_body, uint32_t vi, uint32_t vv, uint32_t vj, uint32_t vb) {
  F inner = forall_in(
      B + 54, B + 50,
      forall_in(vv, B + 54,
                forall_in(B + 55, B + 52,
                          forall_in(vb, B + 55,
                                    F::imp(F::land(build_pair_is(B + 50, vi, vv),
                                                   build_pair_is(B + 52, vj, vb)),
                                           std::move(step_body))))));
  return forall_in(
      B + 50, f,
      forall_in(B + 56, B + 50,
                forall_in(vi, B + 56,
                          forall_in(B + 52, f,
                                    forall_in(B + 57, B + 52,
                                              forall_in(vj, B + 57,
                                                        F::imp(build_succ_graph(vi, vj),
                                                               std::move(inner))))))));
}

F ords(uint32_t x, uint32_t y, uint32_t z) {
  return F::land(build_is_ordinal(x), F::land(build_is_ordinal(y), build_is_ordinal(z)));
}

// x + y = z via a recursion function f with f(0)=x, f(S i)=S(f i), f(y)=z
F build_add_graph(uint32_t x, uint32_t y, uint32_t z) {
  uint32_t f = B + 60;
  F body = F::land(
      build_anchor(f, x),
      F::land(build_domain_cover(f, y),
              F::land(build_functional(f),
                      F::land(build_steps(f, build_succ_graph(B + 62, B + 63), B + 61, B + 62,
                                          B + 64, B + 63),
                              build_apply(f, y, z)))));
  return F::land(ords(x, y, z), F::exists(f, body));
}

// x * y = z via f(0)=0, f(S i)=f(i)+x (the addition graph inlined), f(y)=z
F build_mul_graph(uint32_t x, uint32_t y, uint32_t z) {
  uint32_t f = B + 70;
  F step = build_add_graph(B + 72, x, B + 73);
  F body = F::land(
      build_anchor_zero(f),
      F::land(build_domain_cover(f, y),
              F::land(build_functional(f),
                      F::land(build_steps(f, std::move(step), B + 71, B + 72, B + 74, B + 73),
                              build_apply(f, y, z)))));
  return F::land(ords(x, y, z), F::exists(f, body));
}

}  // namespace

const TranslationTable& TranslationTable::standard() {
  static TranslationTable t = [] {
    TranslationTable tt;
    tt.is_ordinal_ = build_is_ordinal(kX);
    tt.is_zero_ = build_is_zero(kX);
    tt.succ_graph_ = build_succ_graph(kX, kY);
    tt.add_graph_ = build_add_graph(kX, kY, kZ);
    tt.mul_graph_ = build_mul_graph(kX, kY, kZ);
    return tt;
  }();
  return t;
}

std::string TranslationTable::to_sexp_file() const {
  std::ostringstream out;
  out << "(translation-table " << version_ << "\n";
  out << "  (isord " << print_formula(is_ordinal_) << ")\n";
  out << "  (iszero " << print_formula(is_zero_) << ")\n";
  out << "  (issucc " << print_formula(succ_graph_) << ")\n";
  out << "  (addgraph " << print_formula(add_graph_) << ")\n";
  out << "  (mulgraph " << print_formula(mul_graph_) << ")\n";
  out << ")\n";
  return out.str();
}

namespace {

struct FileReader {
  const std::string& text;
  size_t pos = 0;

  void ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void expect(char c) {
    ws();
    if (pos >= text.size() || text[pos] != c)
      throw ArtifactError(std::string("translation table file: expected '") + c + "'");
    ++pos;
  }
  std::string symbol() {
    ws();
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    return text.substr(start, pos - start);
  }
  std::string balanced() {
    ws();
    size_t start = pos;
    int depth = 0;
    do {
      if (pos >= text.size()) throw ArtifactError("translation table file: unbalanced parens");
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    } while (depth > 0);
    return text.substr(start, pos - start);
  }
};

}  // namespace

TranslationTable TranslationTable::from_sexp_file(const std::string& text) {
  FileReader r{text};
  r.expect('(');
  if (r.symbol() != "translation-table") throw ArtifactError("not a translation table file");
  std::string ver = r.symbol();
  if (ver != std::to_string(kVersion))
    throw VersionError("translation table version " + ver + " is not supported (want " +
                       std::to_string(kVersion) + ")");
  TranslationTable t;
  t.version_ = kVersion;
  for (;;) {
    r.ws();
    if (r.pos >= text.size()) throw ArtifactError("translation table file: truncated");
    if (text[r.pos] == ')') break;
    r.expect('(');
    std::string key = r.symbol();
    Formula f = parse_formula(r.balanced(), Sig::Set);
    r.expect(')');
    if (key == "isord")
      t.is_ordinal_ = f;
    else if (key == "iszero")
      t.is_zero_ = f;
    else if (key == "issucc")
      t.succ_graph_ = f;
    else if (key == "addgraph")
      t.add_graph_ = f;
    else if (key == "mulgraph")
      t.mul_graph_ = f;
    else
      throw ArtifactError("translation table file: unknown key '" + key + "'");
  }
  if (!t.is_ordinal_ || !t.is_zero_ || !t.succ_graph_ || !t.add_graph_ || !t.mul_graph_)
    throw ArtifactError("translation table file: missing entries");
  return t;
}

// ------------------------------------------------------------ zf → pa

namespace {

Term zf_term_to_pa(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return t;
    case TermKind::Const: return Term::numeral(t.const_code());
    default: throw SignatureError("zf_to_pa: unexpected term kind");
  }
}

}  // namespace

Formula zf_to_pa(const Formula& f) {
  if (f.sig() != Sig::Set) throw SignatureError("zf_to_pa expects a set-signature formula");
  switch (f.kind()) {
    case FormulaKind::Eq:
      return Formula::eq(zf_term_to_pa(f.term(0)), zf_term_to_pa(f.term(1)), Sig::NatRel);
    case FormulaKind::In:
      return Formula::ack_mem(zf_term_to_pa(f.term(0)), zf_term_to_pa(f.term(1)));
    case FormulaKind::Not: return Formula::lnot(zf_to_pa(f.child(0)));
    case FormulaKind::Or: return Formula::lor(zf_to_pa(f.child(0)), zf_to_pa(f.child(1)));
    case FormulaKind::Exists: return Formula::exists(f.bound_var(), zf_to_pa(f.child(0)));
    default: throw SignatureError("zf_to_pa: unexpected atom");
  }
}

namespace {

struct RelationalEvaluator {
  const Nat& bound;
  std::vector<std::pair<uint32_t, Nat>> env;

  Nat term_value(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Var:
        for (auto it = env.rbegin(); it != env.rend(); ++it)
          if (it->first == t.var_index()) return it->second;
        throw DomainError("free variable v" + std::to_string(t.var_index()) +
                          " in relational evaluation");
      case TermKind::Zero: return 0;
      case TermKind::Succ: return term_value(t.child(0)) + 1;
      default: throw SignatureError("relational terms are variables and numerals");
    }
  }

  bool eval(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Eq: return term_value(f.term(0)) == term_value(f.term(1));
      case FormulaKind::AckMem: return ack_mem(term_value(f.term(0)), term_value(f.term(1)));
      case FormulaKind::Not: return !eval(f.child(0));
      case FormulaKind::Or: return eval(f.child(0)) || eval(f.child(1));
      case FormulaKind::Exists: {
        for (Nat n = 0; n < bound; ++n) {
          env.emplace_back(f.bound_var(), n);
          bool hit = eval(f.child(0));
          env.pop_back();
          if (hit) return true;
        }
        return false;
      }
      case FormulaKind::In: throw SignatureError("set membership atom in relational evaluation");
    }
    throw DomainError("malformed formula");
  }
};

}  // namespace

bool eval_relational(const Formula& f, const Nat& bound) {
  if (f.sig() != Sig::NatRel)
    throw SignatureError("eval_relational expects the relational signature");
  RelationalEvaluator ev{bound, {}};
  return ev.eval(f);
}

// ------------------------------------------------------------ pa → zf

namespace {

bool numeral_value(const Term& t, unsigned long& out) {
  unsigned long n = 0;
  Term cur = t;
  while (cur.kind() == TermKind::Succ) {
    ++n;
    cur = cur.child(0);
  }
  if (cur.kind() != TermKind::Zero) return false;
  out = n;
  return true;
}

struct PaToZf {
  const TranslationTable& table;
  uint32_t fresh;

  uint32_t next_fresh() {
    if (fresh >= 19000) throw ResourceError("pa_to_zf: fresh variable supply exhausted");
    return fresh++;
  }

  Formula graph(const Formula& templ,
                std::initializer_list<std::pair<uint32_t, Term>> subs) const {
    Formula g = templ;
    for (const auto& [var, term] : subs) g = instantiate(g, var, term);
    return g;
  }

  Term flatten(const Term& t, std::vector<std::pair<uint32_t, Formula>>& constraints) {
    unsigned long value;
    if (numeral_value(t, value) && value <= kMaxOrdinalConstant)
      return Term::constant(nat_to_ordinal(value));
    switch (t.kind()) {
      case TermKind::Var: return Term::var(t.var_index());
      case TermKind::Zero: return Term::constant(nat_to_ordinal(0));
      case TermKind::Succ: {
        Term arg = flatten(t.child(0), constraints);
        uint32_t u = next_fresh();
        constraints.emplace_back(u, graph(table.succ_graph(), {{TranslationTable::kX, arg},
                                                               {TranslationTable::kY,
                                                                Term::var(u)}}));
        return Term::var(u);
      }
      case TermKind::Add:
      case TermKind::Mul: {
        Term a = flatten(t.child(0), constraints);
        Term b = flatten(t.child(1), constraints);
        uint32_t u = next_fresh();
        const Formula& templ = t.kind() == TermKind::Add ? table.add_graph() : table.mul_graph();
        constraints.emplace_back(u, graph(templ, {{TranslationTable::kX, a},
                                                  {TranslationTable::kY, b},
                                                  {TranslationTable::kZ, Term::var(u)}}));
        return Term::var(u);
      }
      case TermKind::Const: throw SignatureError("pa_to_zf: set constant in arithmetic term");
    }
    throw SignatureError("pa_to_zf: malformed term");
  }

  Formula atom(const Formula& f) {
    std::vector<std::pair<uint32_t, Formula>> constraints;
    Term a = flatten(f.term(0), constraints);
    Term b = flatten(f.term(1), constraints);
    Formula out = Formula::eq(a, b, Sig::Set);
    for (auto it = constraints.rbegin(); it != constraints.rend(); ++it)
      out = Formula::exists(it->first, Formula::land(it->second, out));
    return out;
  }

  Formula go(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Eq: return atom(f);
      case FormulaKind::Not: return Formula::lnot(go(f.child(0)));
      case FormulaKind::Or: return Formula::lor(go(f.child(0)), go(f.child(1)));
      case FormulaKind::Exists: {
        Formula rel =
            graph(table.is_ordinal(), {{TranslationTable::kX, Term::var(f.bound_var())}});
        return Formula::exists(f.bound_var(), Formula::land(rel, go(f.child(0))));
      }
      default: throw SignatureError("pa_to_zf: unexpected atom kind");
    }
  }
};

}  // namespace

Formula pa_to_zf(const Formula& arith_formula, const TranslationTable& table) {
  if (arith_formula.sig() != Sig::Arith)
    throw SignatureError("pa_to_zf expects an arithmetic formula");
  if (arith_formula.max_var_excl() > TranslationTable::kX)
    throw ResourceError("pa_to_zf: input uses variable indices >= 100; rename them first");
  PaToZf tr{table, 200};
  return tr.go(arith_formula);
}

// ---------------------------------------------------- witness structure

namespace {

HFSet kuratowski(const HFSet& a, const HFSet& b) {
  HFSet sing = HFSet::from_children({a});
  HFSet dub = HFSet::from_children({a, b});
  return HFSet::from_children({sing, dub});
}

HFSet addition_witness(unsigned long start, unsigned long steps) {
  std::vector<HFSet> pairs;
  for (unsigned long i = 0; i <= steps; ++i)
    pairs.push_back(kuratowski(ordinal_set(i), ordinal_set(start + i)));
  return HFSet::from_children(std::move(pairs));
}

HFSet multiplication_witness(unsigned long factor, unsigned long steps) {
  std::vector<HFSet> pairs;
  for (unsigned long i = 0; i <= steps; ++i)
    pairs.push_back(kuratowski(ordinal_set(i), ordinal_set(factor * i)));
  return HFSet::from_children(std::move(pairs));
}

}  // namespace

FiniteStructure bridge_structure(unsigned long max_value) {
  std::vector<HFSet> seeds;
  for (unsigned long n = 0; n <= max_value; ++n) seeds.push_back(ordinal_set(n));
  for (unsigned long a = 0; a <= max_value; ++a)
    for (unsigned long b = 0; a + b <= max_value; ++b) seeds.push_back(addition_witness(a, b));
  for (unsigned long a = 1; a <= max_value; ++a)
    for (unsigned long b = 0; a * b <= max_value; ++b)
      seeds.push_back(multiplication_witness(a, b));
  // a = 0 rows: 0 * b = 0 for every b in range
  for (unsigned long b = 0; b <= max_value; ++b) seeds.push_back(multiplication_witness(0, b));
  return FiniteStructure::from_seeds(seeds);
}

TableReport validate_table(const TranslationTable& table, unsigned long max_value,
                           EvalCache* cache) {
  EvalCache local;
  if (!cache) cache = &local;
  FiniteStructure s = bridge_structure(max_value);
  TableReport report;

  std::vector<size_t> ordinal_index(max_value + 1);
  for (unsigned long n = 0; n <= max_value; ++n) {
    auto idx = s.find_set(ordinal_set(n));
    if (!idx) throw ResourceError("bridge structure is missing ordinal " + std::to_string(n));
    ordinal_index[n] = *idx;
  }

  auto check = [&](const Formula& f, std::vector<std::pair<uint32_t, size_t>> env, bool expect,
                   const std::string& what) {
    ++report.checks;
    bool got = eval_with_env(f, s, env, cache);
    if (got != expect)
      report.violations.push_back(what + ": formula says " + (got ? "true" : "false") +
                                  ", arithmetic says " + (expect ? "true" : "false"));
  };

  for (size_t i = 0; i < s.size(); ++i) {
    bool is_ord = false;
    for (unsigned long n = 0; n <= max_value + 2 && !is_ord; ++n)
      if (s.set_at(i) == ordinal_set(n)) is_ord = true;
    check(table.is_ordinal(), {{TranslationTable::kX, i}}, is_ord,
          "isord(element " + std::to_string(i) + ")");
  }

  for (unsigned long a = 0; a <= max_value; ++a) {
    check(table.is_zero(), {{TranslationTable::kX, ordinal_index[a]}}, a == 0,
          "iszero(" + std::to_string(a) + ")");
    for (unsigned long b = 0; b <= max_value; ++b)
      check(table.succ_graph(),
            {{TranslationTable::kX, ordinal_index[a]}, {TranslationTable::kY, ordinal_index[b]}},
            b == a + 1, "issucc(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }

  for (unsigned long a = 0; a <= max_value; ++a)
    for (unsigned long b = 0; b <= max_value; ++b)
      for (unsigned long c = 0; c <= max_value; ++c) {
        std::vector<std::pair<uint32_t, size_t>> env = {
            {TranslationTable::kX, ordinal_index[a]},
            {TranslationTable::kY, ordinal_index[b]},
            {TranslationTable::kZ, ordinal_index[c]}};
        check(table.add_graph(), env, a + b == c,
              "add(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                  ")");
        check(table.mul_graph(), env, a * b == c,
              "mul(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                  ")");
      }

  return report;
}

}  // namespace hflab
