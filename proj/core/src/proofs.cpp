#include "hflab/proofs.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "hflab/godel.hpp"

namespace hflab {

// -------------------------------------------------------------- sequents

Sequent::Sequent(std::vector<Formula> formulas) : formulas_(std::move(formulas)) {
  for (const auto& f : formulas_) {
    if (!f) throw StructuralError("empty formula in sequent", "?");
    if (f.sig() != formulas_.front().sig()) throw SignatureError("sequent mixes signatures");
  }
  std::sort(formulas_.begin(), formulas_.end(), FormulaLess{});
  formulas_.erase(std::unique(formulas_.begin(), formulas_.end()), formulas_.end());
}

bool Sequent::contains(const Formula& f) const {
  return std::binary_search(formulas_.begin(), formulas_.end(), f, FormulaLess{});
}

bool Sequent::subset_of(const Sequent& o) const {
  return std::includes(o.formulas_.begin(), o.formulas_.end(), formulas_.begin(),
                       formulas_.end(), FormulaLess{});
}

Sequent Sequent::with(const Formula& f) const {
  if (contains(f)) return *this;
  std::vector<Formula> fs = formulas_;
  fs.push_back(f);
  return Sequent(std::move(fs));
}

Sequent Sequent::without(const Formula& f) const {
  std::vector<Formula> fs;
  fs.reserve(formulas_.size());
  for (const auto& g : formulas_)
    if (g != f) fs.push_back(g);
  return Sequent(std::move(fs));
}

Sequent Sequent::union_with(const Sequent& o) const {
  std::vector<Formula> fs = formulas_;
  fs.insert(fs.end(), o.formulas_.begin(), o.formulas_.end());
  return Sequent(std::move(fs));
}

// ----------------------------------------------------------- proof nodes

namespace detail {

struct ProofNode {
  Rule rule;
  Sequent seq;
  Formula principal;
  Term witness;
  uint32_t eigen = 0;
  std::vector<ProofTree> children;
  uint64_t node_count = 1;
  uint64_t cut_count = 0;
  uint32_t max_cut_rank = 0;
};

namespace {
struct Arena {
  std::mutex mu;
  std::vector<std::unique_ptr<ProofNode>> storage;
};
Arena& arena() {
  static Arena a;
  return a;
}
}  // namespace

}  // namespace detail

using detail::ProofNode;

ProofTree intern_proof(ProofNode&& proto) {
  for (const auto& c : proto.children) {
    proto.node_count += c.node_count();
    proto.cut_count += c.cut_count();
    proto.max_cut_rank = std::max(proto.max_cut_rank, c.max_cut_rank());
  }
  if (proto.rule == Rule::Cut) {
    proto.cut_count += 1;
    proto.max_cut_rank = std::max(proto.max_cut_rank, proto.principal.depth());
  }
  auto& a = detail::arena();
  std::lock_guard<std::mutex> lock(a.mu);
  a.storage.push_back(std::make_unique<ProofNode>(std::move(proto)));
  return ProofTree(a.storage.back().get());
}

static void require_shape(bool ok, const char* what) {
  if (!ok) throw StructuralError(what, "construction");
}

ProofTree ProofTree::ax(Sequent s) {
  ProofNode n;
  n.rule = Rule::Ax;
  n.seq = std::move(s);
  return intern_proof(std::move(n));
}

ProofTree ProofTree::assumption(Sequent s, Formula assumed) {
  require_shape(static_cast<bool>(assumed), "assumption leaf needs its formula");
  ProofNode n;
  n.rule = Rule::Assumption;
  n.seq = std::move(s);
  n.principal = assumed;
  return intern_proof(std::move(n));
}

ProofTree ProofTree::or_intro(Sequent s, Formula principal, ProofTree child) {
  require_shape(principal.kind() == FormulaKind::Or, "or-intro principal must be a disjunction");
  ProofNode n;
  n.rule = Rule::OrIntro;
  n.seq = std::move(s);
  n.principal = principal;
  n.children = {child};
  return intern_proof(std::move(n));
}

ProofTree ProofTree::and_split(Sequent s, Formula principal, ProofTree left, ProofTree right) {
  require_shape(principal.kind() == FormulaKind::Not &&
                    principal.child(0).kind() == FormulaKind::Or,
                "and-split principal must be a negated disjunction");
  ProofNode n;
  n.rule = Rule::AndSplit;
  n.seq = std::move(s);
  n.principal = principal;
  n.children = {left, right};
  return intern_proof(std::move(n));
}

ProofTree ProofTree::not_not(Sequent s, Formula principal, ProofTree child) {
  require_shape(principal.kind() == FormulaKind::Not &&
                    principal.child(0).kind() == FormulaKind::Not,
                "not-not principal must be a double negation");
  ProofNode n;
  n.rule = Rule::NotNot;
  n.seq = std::move(s);
  n.principal = principal;
  n.children = {child};
  return intern_proof(std::move(n));
}

ProofTree ProofTree::exists_witness(Sequent s, Formula principal, Term witness, ProofTree child) {
  require_shape(principal.kind() == FormulaKind::Exists,
                "exists-witness principal must be existential");
  ProofNode n;
  n.rule = Rule::ExistsWitness;
  n.seq = std::move(s);
  n.principal = principal;
  n.witness = witness;
  n.children = {child};
  return intern_proof(std::move(n));
}

ProofTree ProofTree::forall_eigen(Sequent s, Formula principal, uint32_t eigen, ProofTree child) {
  require_shape(principal.kind() == FormulaKind::Not &&
                    principal.child(0).kind() == FormulaKind::Exists,
                "forall-eigen principal must be a negated existential");
  ProofNode n;
  n.rule = Rule::ForallEigen;
  n.seq = std::move(s);
  n.principal = principal;
  n.eigen = eigen;
  n.children = {child};
  return intern_proof(std::move(n));
}

ProofTree ProofTree::cut(Sequent s, Formula cut_formula, ProofTree left, ProofTree right) {
  require_shape(static_cast<bool>(cut_formula), "cut needs its formula");
  ProofNode n;
  n.rule = Rule::Cut;
  n.seq = std::move(s);
  n.principal = cut_formula;
  n.children = {left, right};
  return intern_proof(std::move(n));
}

Rule ProofTree::rule() const { return node_->rule; }
const Sequent& ProofTree::sequent() const { return node_->seq; }
const Formula& ProofTree::principal() const { return node_->principal; }
const Term& ProofTree::witness() const { return node_->witness; }
uint32_t ProofTree::eigen_var() const { return node_->eigen; }
size_t ProofTree::arity() const { return node_->children.size(); }
const ProofTree& ProofTree::child(size_t i) const { return node_->children[i]; }
uint64_t ProofTree::node_count() const { return node_->node_count; }
uint64_t ProofTree::cut_count() const { return node_->cut_count; }
uint32_t ProofTree::max_cut_rank() const { return node_->max_cut_rank; }

// --------------------------------------------------------------- checking

namespace {

bool free_in_sequent(uint32_t var, const Sequent& s) {
  for (const auto& f : s.formulas()) {
    const auto& fv = f.free_vars();
    if (std::binary_search(fv.begin(), fv.end(), var)) return true;
  }
  return false;
}

bool check_node(const ProofTree& t, const std::vector<Formula>& assumptions, std::string* reason,
                const std::string& path) {
  auto fail = [&](const std::string& msg) {
    if (reason) *reason = msg + " [node " + path + "]";
    return false;
  };
  if (!t) throw StructuralError("missing proof node", path);
  const Sequent& S = t.sequent();

  switch (t.rule()) {
    case Rule::Ax: {
      for (const auto& f : S.formulas())
        if (f.kind() == FormulaKind::Not && f.child(0).atomic() && S.contains(f.child(0)))
          return true;
      return fail("axiom leaf has no complementary atomic pair");
    }
    case Rule::Assumption: {
      if (!S.contains(t.principal())) return fail("assumption formula absent from its sequent");
      for (const auto& a : assumptions)
        if (a == t.principal()) return true;
      return fail("assumption '" + print_formula(t.principal()) + "' not in the declared set");
    }
    case Rule::OrIntro: {
      const Formula& p = t.principal();
      if (!S.contains(p)) return fail("or-intro principal absent");
      Sequent allowed = S.with(p.child(0)).with(p.child(1));
      if (!t.child(0).sequent().subset_of(allowed)) return fail("or-intro premise oversteps");
      return check_node(t.child(0), assumptions, reason, path + ".0");
    }
    case Rule::AndSplit: {
      const Formula& p = t.principal();
      if (!S.contains(p)) return fail("and-split principal absent");
      Formula a = p.child(0).child(0);
      Formula b = p.child(0).child(1);
      if (!t.child(0).sequent().subset_of(S.with(Formula::lnot(a))))
        return fail("and-split left premise oversteps");
      if (!t.child(1).sequent().subset_of(S.with(Formula::lnot(b))))
        return fail("and-split right premise oversteps");
      return check_node(t.child(0), assumptions, reason, path + ".0") &&
             check_node(t.child(1), assumptions, reason, path + ".1");
    }
    case Rule::NotNot: {
      const Formula& p = t.principal();
      if (!S.contains(p)) return fail("not-not principal absent");
      if (!t.child(0).sequent().subset_of(S.with(p.child(0).child(0))))
        return fail("not-not premise oversteps");
      return check_node(t.child(0), assumptions, reason, path + ".0");
    }
    case Rule::ExistsWitness: {
      const Formula& p = t.principal();
      if (!S.contains(p)) return fail("exists-witness principal absent");
      Formula instance = instantiate(p.child(0), p.bound_var(), t.witness());
      if (!t.child(0).sequent().subset_of(S.with(instance)))
        return fail("exists-witness premise oversteps");
      return check_node(t.child(0), assumptions, reason, path + ".0");
    }
    case Rule::ForallEigen: {
      const Formula& p = t.principal();
      if (!S.contains(p)) return fail("forall-eigen principal absent");
      if (free_in_sequent(t.eigen_var(), S))
        return fail("eigenvariable v" + std::to_string(t.eigen_var()) +
                    " occurs free in the conclusion");
      Formula ex = p.child(0);
      Formula instance =
          Formula::lnot(instantiate(ex.child(0), ex.bound_var(), Term::var(t.eigen_var())));
      if (!t.child(0).sequent().subset_of(S.with(instance)))
        return fail("forall-eigen premise oversteps");
      return check_node(t.child(0), assumptions, reason, path + ".0");
    }
    case Rule::Cut: {
      const Formula& p = t.principal();
      if (!t.child(0).sequent().subset_of(S.with(p))) return fail("cut left premise oversteps");
      if (!t.child(1).sequent().subset_of(S.with(Formula::lnot(p))))
        return fail("cut right premise oversteps");
      return check_node(t.child(0), assumptions, reason, path + ".0") &&
             check_node(t.child(1), assumptions, reason, path + ".1");
    }
  }
  throw StructuralError("unknown rule", path);
}

}  // namespace

bool check_proof(const ProofTree& proof, const std::vector<Formula>& assumptions,
                 const Formula& goal, std::string* reason) {
  if (!proof) throw StructuralError("empty proof", "root");
  if (proof.sequent().empty()) {
    if (reason) *reason = "root sequent is empty";
    return false;
  }
  for (const auto& f : proof.sequent().formulas()) {
    bool allowed = f == goal;
    for (const auto& a : assumptions)
      if (f == Formula::lnot(a)) allowed = true;
    if (!allowed) {
      if (reason)
        *reason = "root sequent contains '" + print_formula(f) +
                  "', which is neither the goal nor a negated assumption";
      return false;
    }
  }
  return check_node(proof, assumptions, reason, "root");
}

Nat proof_code(const ProofTree& proof) {
  Nat total = 1;
  std::vector<ProofTree> stack = {proof};
  while (!stack.empty()) {
    ProofTree t = stack.back();
    stack.pop_back();
    total += 1;
    for (const auto& f : t.sequent().formulas()) total += godel_code(f);
    for (size_t i = 0; i < t.arity(); ++i) stack.push_back(t.child(i));
  }
  return total;
}

// --------------------------------------------------- tree transformations

namespace {

std::atomic<uint32_t> g_fresh_eigen{1u << 20};
uint32_t fresh_eigen() { return g_fresh_eigen.fetch_add(1); }

Term term_substitute(const Term& t, uint32_t var, const Term& repl) {
  if (!t) return t;
  switch (t.kind()) {
    case TermKind::Var: return t.var_index() == var ? repl : t;
    case TermKind::Const:
    case TermKind::Zero: return t;
    case TermKind::Succ: return Term::succ(term_substitute(t.child(0), var, repl));
    case TermKind::Add:
      return Term::add(term_substitute(t.child(0), var, repl),
                       term_substitute(t.child(1), var, repl));
    case TermKind::Mul:
      return Term::mul(term_substitute(t.child(0), var, repl),
                       term_substitute(t.child(1), var, repl));
  }
  return t;
}

bool term_mentions(const Term& t, uint32_t var) {
  if (!t) return false;
  const auto& fv = t.free_vars();
  return std::binary_search(fv.begin(), fv.end(), var);
}

Sequent sequent_substitute(const Sequent& s, uint32_t var, const Term& repl) {
  std::vector<Formula> out;
  out.reserve(s.size());
  for (const auto& f : s.formulas()) out.push_back(instantiate(f, var, repl));
  return Sequent(std::move(out));
}

ProofTree rebuild(const ProofTree& t, Sequent seq, std::vector<ProofTree> children) {
  switch (t.rule()) {
    case Rule::Ax: return ProofTree::ax(std::move(seq));
    case Rule::Assumption: return ProofTree::assumption(std::move(seq), t.principal());
    case Rule::OrIntro: return ProofTree::or_intro(std::move(seq), t.principal(), children[0]);
    case Rule::AndSplit:
      return ProofTree::and_split(std::move(seq), t.principal(), children[0], children[1]);
    case Rule::NotNot: return ProofTree::not_not(std::move(seq), t.principal(), children[0]);
    case Rule::ExistsWitness:
      return ProofTree::exists_witness(std::move(seq), t.principal(), t.witness(), children[0]);
    case Rule::ForallEigen:
      return ProofTree::forall_eigen(std::move(seq), t.principal(), t.eigen_var(), children[0]);
    case Rule::Cut:
      return ProofTree::cut(std::move(seq), t.principal(), children[0], children[1]);
  }
  throw StructuralError("unknown rule", "rebuild");
}

// var := repl in every sequent, principal and witness. Eigen binders
// clashing with var or with repl's variables get renamed first.
ProofTree tree_substitute(const ProofTree& t, uint32_t var, const Term& repl) {
  ProofTree body = t;
  if (t.rule() == Rule::ForallEigen) {
    uint32_t y = t.eigen_var();
    if (y == var || term_mentions(repl, y)) {
      uint32_t fresh = fresh_eigen();
      ProofTree renamed_child = tree_substitute(t.child(0), y, Term::var(fresh));
      body = ProofTree::forall_eigen(t.sequent(), t.principal(), fresh, renamed_child);
    }
  }
  Sequent seq = sequent_substitute(body.sequent(), var, repl);
  Formula principal =
      body.principal() ? instantiate(body.principal(), var, repl) : body.principal();
  Term witness = body.witness() ? term_substitute(body.witness(), var, repl) : body.witness();
  std::vector<ProofTree> children;
  children.reserve(body.arity());
  for (size_t i = 0; i < body.arity(); ++i)
    children.push_back(tree_substitute(body.child(i), var, repl));
  ProofNode n;
  n.rule = body.rule();
  n.seq = std::move(seq);
  n.principal = principal;
  n.witness = witness;
  n.eigen = body.eigen_var();
  n.children = std::move(children);
  return intern_proof(std::move(n));
}

std::set<uint32_t> sequent_free_vars(const Sequent& s) {
  std::set<uint32_t> out;
  for (const auto& f : s.formulas()) out.insert(f.free_vars().begin(), f.free_vars().end());
  return out;
}

ProofTree eigen_safe(const ProofTree& t, const std::set<uint32_t>& avoid) {
  if (t.rule() == Rule::ForallEigen && avoid.count(t.eigen_var())) {
    uint32_t fresh = fresh_eigen();
    ProofTree renamed_child = tree_substitute(t.child(0), t.eigen_var(), Term::var(fresh));
    return ProofTree::forall_eigen(t.sequent(), t.principal(), fresh, renamed_child);
  }
  return t;
}

// Adds extras to every sequent, renaming eigenvariables that collide with the
// new formulas' free variables.
ProofTree weaken(const ProofTree& t, const Sequent& extras) {
  if (extras.empty() || extras.subset_of(t.sequent())) return t;
  ProofTree body = eigen_safe(t, sequent_free_vars(extras));
  std::vector<ProofTree> children;
  children.reserve(body.arity());
  for (size_t i = 0; i < body.arity(); ++i) children.push_back(weaken(body.child(i), extras));
  ProofNode n;
  n.rule = body.rule();
  n.seq = body.sequent().union_with(extras);
  n.principal = body.principal();
  n.witness = body.witness();
  n.eigen = body.eigen_var();
  n.children = std::move(children);
  return intern_proof(std::move(n));
}

// ------------------------------------------------------------- inversions
//
// All transforms below assume cut-free trees and produce cut-free trees.

// p = A∨B → adds {A,B} (OrIntro child 0), p = ¬¬A → {A} (NotNot),
// p = ¬(A∨B) → {¬A} or {¬B} (AndSplit side). Result proves (C∖p) ∪ adds.
ProofTree invert(const ProofTree& t, const Formula& p, const std::vector<Formula>& adds,
                 Rule matching_rule, int which_child) {
  if (!t.sequent().contains(p)) return weaken(t, Sequent(adds));
  if (t.rule() == matching_rule && t.principal() == p)
    return invert(t.child(which_child), p, adds, matching_rule, which_child);
  Sequent target = t.sequent().without(p);
  for (const auto& a : adds) target = target.with(a);
  if (t.arity() == 0) {
    // p is never atomic nor a negated atom, so axiom pairs survive removal
    return rebuild(t, target, {});
  }
  std::set<uint32_t> avoid;
  for (const auto& a : adds) avoid.insert(a.free_vars().begin(), a.free_vars().end());
  ProofTree body = eigen_safe(t, avoid);
  std::vector<ProofTree> children;
  for (size_t i = 0; i < body.arity(); ++i)
    children.push_back(invert(body.child(i), p, adds, matching_rule, which_child));
  return rebuild(body, target, std::move(children));
}

ProofTree invert_or(const ProofTree& t, const Formula& p) {
  return invert(t, p, {p.child(0), p.child(1)}, Rule::OrIntro, 0);
}
ProofTree invert_not_not(const ProofTree& t, const Formula& p) {
  return invert(t, p, {p.child(0).child(0)}, Rule::NotNot, 0);
}
ProofTree invert_and(const ProofTree& t, const Formula& p, int side) {
  return invert(t, p, {Formula::lnot(p.child(0).child(side))}, Rule::AndSplit, side);
}

// p = ¬∃vA at the term u: result proves (C∖p) ∪ {¬A[u/v]}.
ProofTree invert_forall(const ProofTree& t, const Formula& p, const Term& u) {
  Formula ex = p.child(0);
  Formula instance = Formula::lnot(instantiate(ex.child(0), ex.bound_var(), u));
  if (!t.sequent().contains(p)) return weaken(t, Sequent({instance}));
  if (t.rule() == Rule::ForallEigen && t.principal() == p) {
    ProofTree substituted = tree_substitute(t.child(0), t.eigen_var(), u);
    return invert_forall(substituted, p, u);
  }
  Sequent target = t.sequent().without(p).with(instance);
  if (t.arity() == 0) return rebuild(t, target, {});
  std::set<uint32_t> avoid(instance.free_vars().begin(), instance.free_vars().end());
  ProofTree body = eigen_safe(t, avoid);
  std::vector<ProofTree> children;
  for (size_t i = 0; i < body.arity(); ++i) children.push_back(invert_forall(body.child(i), p, u));
  return rebuild(body, target, std::move(children));
}

// --------------------------------------------------------- cut reduction

ProofTree cut_reduce(const ProofTree& d1, const ProofTree& d2, const Formula& phi,
                     const Sequent& target);

// d proves C with the atomic α possibly present; d_other proves ⊆ S ∪ {¬α}.
// Result proves ⊆ (C∖α) ∪ S.
ProofTree atomic_cut(const ProofTree& d, const Formula& alpha, const ProofTree& d_other,
                     const Sequent& S) {
  if (!d.sequent().contains(alpha)) return d;
  Sequent target = d.sequent().without(alpha).union_with(S);
  if (d.rule() == Rule::Ax) {
    for (const auto& f : d.sequent().formulas())
      if (f.kind() == FormulaKind::Not && f.child(0).atomic() && f.child(0) != alpha &&
          d.sequent().contains(f.child(0)))
        return ProofTree::ax(target);
    if (d.sequent().contains(Formula::lnot(alpha))) {
      // only pair was (α, ¬α); ¬α survives in the target, splice d_other
      return weaken(d_other, target);
    }
    throw StructuralError("axiom lost its pair during an atomic cut", "cut");
  }
  std::set<uint32_t> avoid = sequent_free_vars(S);
  ProofTree body = eigen_safe(d, avoid);
  std::vector<ProofTree> children;
  for (size_t i = 0; i < body.arity(); ++i)
    children.push_back(atomic_cut(body.child(i), alpha, d_other, S));
  return rebuild(body, target, std::move(children));
}

// d proves C possibly using witnesses for phi = ∃vA; d_forall proves
// ⊆ target ∪ {¬∃vA}. Result proves ⊆ (C∖phi) ∪ target.
ProofTree exists_cut(const ProofTree& d, const Formula& phi, const ProofTree& d_forall,
                     const Sequent& target) {
  if (!d.sequent().contains(phi)) return d;
  Sequent out = d.sequent().without(phi).union_with(target);
  if (d.rule() == Rule::Ax) return ProofTree::ax(out);
  if (d.rule() == Rule::ExistsWitness && d.principal() == phi) {
    Formula instance = instantiate(phi.child(0), phi.bound_var(), d.witness());
    ProofTree upper = exists_cut(d.child(0), phi, d_forall, target);  // ⊆ out ∪ {instance}
    ProofTree lower = invert_forall(d_forall, Formula::lnot(phi), d.witness());
    return cut_reduce(upper, weaken(lower, out), instance, out);
  }
  std::set<uint32_t> avoid = sequent_free_vars(target);
  ProofTree body = eigen_safe(d, avoid);
  std::vector<ProofTree> children;
  for (size_t i = 0; i < body.arity(); ++i)
    children.push_back(exists_cut(body.child(i), phi, d_forall, target));
  return rebuild(body, out, std::move(children));
}

// Both premises cut-free: d1 ⊢ ⊆ S ∪ {φ}, d2 ⊢ ⊆ S ∪ {¬φ}; the result is a
// cut-free proof of ⊆ S, by induction on the rank of φ.
ProofTree cut_reduce(const ProofTree& d1, const ProofTree& d2, const Formula& phi,
                     const Sequent& S) {
  Formula not_phi = Formula::lnot(phi);
  if (!d1.sequent().contains(phi)) return d1;
  if (!d2.sequent().contains(not_phi)) return d2;

  switch (phi.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::In:
    case FormulaKind::AckMem: return atomic_cut(d1, phi, d2, S);
    case FormulaKind::Not: {
      Formula beta = phi.child(0);
      ProofTree d2_inv = invert_not_not(d2, not_phi);  // ⊆ S ∪ {β}
      return cut_reduce(d2_inv, d1, beta, S);
    }
    case FormulaKind::Or: {
      Formula b = phi.child(1);
      ProofTree d1_inv = invert_or(d1, phi);       // ⊆ S ∪ {A, B}
      ProofTree d2a = invert_and(d2, not_phi, 0);  // ⊆ S ∪ {¬A}
      ProofTree d2b = invert_and(d2, not_phi, 1);  // ⊆ S ∪ {¬B}
      Sequent sb = S.with(b);
      ProofTree mid = cut_reduce(d1_inv, weaken(d2a, Sequent({b})), phi.child(0), sb);
      return cut_reduce(mid, d2b, b, S);
    }
    case FormulaKind::Exists: return exists_cut(d1, phi, d2, S);
  }
  throw StructuralError("unknown cut formula kind", "cut");
}

ProofTree eliminate_rec(const ProofTree& t) {
  std::vector<ProofTree> children;
  children.reserve(t.arity());
  for (size_t i = 0; i < t.arity(); ++i) children.push_back(eliminate_rec(t.child(i)));
  if (t.rule() != Rule::Cut) {
    if (t.arity() == 0) return t;
    return rebuild(t, t.sequent(), std::move(children));
  }
  return cut_reduce(children[0], children[1], t.principal(), t.sequent());
}

// Cut-free proof of {φ, ¬φ} for arbitrary φ.
ProofTree identity_expansion(const Formula& phi) {
  Formula not_phi = Formula::lnot(phi);
  Sequent goal({phi, not_phi});
  if (phi.atomic()) return ProofTree::ax(goal);
  switch (phi.kind()) {
    case FormulaKind::Not:
      return ProofTree::not_not(goal, not_phi, identity_expansion(phi.child(0)));
    case FormulaKind::Or: {
      Formula a = phi.child(0);
      Formula b = phi.child(1);
      Sequent s1 = goal.with(Formula::lnot(a));
      Sequent s2 = goal.with(Formula::lnot(b));
      ProofTree left = ProofTree::or_intro(s1, phi, weaken(identity_expansion(a), s1.with(b)));
      ProofTree right = ProofTree::or_intro(s2, phi, weaken(identity_expansion(b), s2.with(a)));
      return ProofTree::and_split(goal, not_phi, left, right);
    }
    case FormulaKind::Exists: {
      uint32_t y = fresh_eigen();
      Formula inst = instantiate(phi.child(0), phi.bound_var(), Term::var(y));
      Sequent mid({phi, Formula::lnot(inst)});
      ProofTree ew =
          ProofTree::exists_witness(mid, phi, Term::var(y), weaken(identity_expansion(inst), mid));
      return ProofTree::forall_eigen(goal, not_phi, y, ew);
    }
    default: break;
  }
  throw StructuralError("unreachable identity expansion", "id");
}

void collect_assumptions(const ProofTree& t, std::vector<Formula>& out) {
  if (t.rule() == Rule::Assumption) out.push_back(t.principal());
  for (size_t i = 0; i < t.arity(); ++i) collect_assumptions(t.child(i), out);
}

// Folds assumption leaves into the ¬φ-wrapped sequent: every sequent gains
// the negated assumptions and the leaves become identity expansions.
ProofTree purify(const ProofTree& t, const Sequent& neg) {
  if (t.rule() == Rule::Assumption) {
    ProofTree id = identity_expansion(t.principal());
    return weaken(id, t.sequent().union_with(neg));
  }
  std::vector<ProofTree> children;
  children.reserve(t.arity());
  for (size_t i = 0; i < t.arity(); ++i) children.push_back(purify(t.child(i), neg));
  if (t.arity() == 0) return rebuild(t, t.sequent().union_with(neg), {});
  return rebuild(t, t.sequent().union_with(neg), std::move(children));
}

}  // namespace

ProofTree eliminate_cuts(const ProofTree& proof, BlowupStats* stats) {
  if (stats) {
    stats->input_nodes = proof.node_count();
    stats->max_cut_rank = proof.max_cut_rank();
  }
  ProofTree result = proof;
  if (proof.cut_count() != 0) {
    std::vector<Formula> used;
    collect_assumptions(proof, used);
    std::vector<Formula> neg;
    for (const auto& f : used) {
      if (!f.closed())
        throw StructuralError("assumption with free variables cannot be folded", "purify");
      neg.push_back(Formula::lnot(f));
    }
    ProofTree pure = neg.empty() ? proof : purify(proof, Sequent(neg));
    result = eliminate_rec(pure);
  }
  if (stats) {
    stats->output_nodes = result.node_count();
    Nat bound = stats->input_nodes;
    stats->astronomical = false;
    for (uint32_t i = 0; i < stats->max_cut_rank; ++i) {
      if (!bound.fits_ulong_p() || bound.get_ui() > (1ul << 22)) {
        stats->astronomical = true;
        break;
      }
      bound = nat_pow2(bound.get_ui());
    }
    stats->reference_bound = stats->astronomical ? Nat(0) : bound;
  }
  return result;
}

// --------------------------------------------------- subformula property

namespace {

void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  for (const auto& sub : f.immediate_subformulas()) collect_subformulas(sub, out);
}

bool match_term(const Term& pattern, const Term& target, const std::set<uint32_t>& bound,
                std::map<uint32_t, Term>& binding) {
  if (pattern.kind() == TermKind::Var && !bound.count(pattern.var_index())) {
    auto it = binding.find(pattern.var_index());
    if (it != binding.end()) return it->second == target;
    binding.emplace(pattern.var_index(), target);
    return true;
  }
  if (pattern.kind() != target.kind()) return false;
  switch (pattern.kind()) {
    case TermKind::Var: return pattern.var_index() == target.var_index();
    case TermKind::Const: return pattern.const_code() == target.const_code();
    case TermKind::Zero: return true;
    default: break;
  }
  for (int i = 0; i < pattern.arity(); ++i)
    if (!match_term(pattern.child(i), target.child(i), bound, binding)) return false;
  return true;
}

bool match_formula(const Formula& pattern, const Formula& target, std::set<uint32_t>& bound,
                   std::map<uint32_t, Term>& binding) {
  if (pattern.kind() != target.kind()) return false;
  if (pattern.atomic())
    return match_term(pattern.term(0), target.term(0), bound, binding) &&
           match_term(pattern.term(1), target.term(1), bound, binding);
  if (pattern.kind() == FormulaKind::Exists) {
    if (pattern.bound_var() != target.bound_var()) return false;
    bool inserted = bound.insert(pattern.bound_var()).second;
    bool ok = match_formula(pattern.child(0), target.child(0), bound, binding);
    if (inserted) bound.erase(pattern.bound_var());
    return ok;
  }
  size_t n = pattern.kind() == FormulaKind::Or ? 2 : 1;
  for (size_t i = 0; i < n; ++i)
    if (!match_formula(pattern.child(static_cast<int>(i)), target.child(static_cast<int>(i)),
                       bound, binding))
      return false;
  return true;
}

bool is_instance_of_any(const Formula& f, const std::vector<Formula>& bases) {
  for (const auto& base : bases) {
    std::set<uint32_t> bound;
    std::map<uint32_t, Term> binding;
    if (match_formula(base, f, bound, binding)) return true;
  }
  // one negation layer: the dual rules move ¬ onto subformulas
  if (f.kind() == FormulaKind::Not) {
    const Formula& inner = f.child(0);
    for (const auto& base : bases) {
      std::set<uint32_t> bound;
      std::map<uint32_t, Term> binding;
      if (match_formula(base, inner, bound, binding)) return true;
    }
  }
  return false;
}

bool all_sequents_allowed(const ProofTree& t, const std::vector<Formula>& bases) {
  for (const auto& f : t.sequent().formulas())
    if (!is_instance_of_any(f, bases)) return false;
  for (size_t i = 0; i < t.arity(); ++i)
    if (!all_sequents_allowed(t.child(i), bases)) return false;
  return true;
}

}  // namespace

bool has_subformula_property(const ProofTree& proof, const std::vector<Formula>& assumptions,
                             const Formula& goal) {
  std::vector<Formula> bases;
  collect_subformulas(goal, bases);
  for (const auto& a : assumptions) collect_subformulas(a, bases);
  return all_sequents_allowed(proof, bases);
}

// ----------------------------------------------------------------- search

namespace {

void collect_closed_subterms(const Term& t, std::vector<Term>& out) {
  if (t.closed()) out.push_back(t);
  for (int i = 0; i < t.arity(); ++i) collect_closed_subterms(t.child(i), out);
}

void collect_closed_terms(const Formula& f, std::vector<Term>& out) {
  if (f.atomic()) {
    collect_closed_subterms(f.term(0), out);
    collect_closed_subterms(f.term(1), out);
    return;
  }
  for (const auto& sub : f.immediate_subformulas()) collect_closed_terms(sub, out);
}

struct Searcher {
  std::vector<Term> pool;
  std::map<std::vector<const void*>, uint64_t> failed;
  uint32_t next_eigen = 1u << 19;

  std::vector<const void*> key(const Sequent& s) const {
    std::vector<const void*> k;
    k.reserve(s.size());
    for (const auto& f : s.formulas()) k.push_back(f.raw());
    return k;
  }

  std::optional<ProofTree> axiom(const Sequent& s) const {
    for (const auto& f : s.formulas())
      if (f.kind() == FormulaKind::Not && f.child(0).atomic() && s.contains(f.child(0)))
        return ProofTree::ax(s);
    return std::nullopt;
  }

  std::optional<ProofTree> sized(const Sequent& s, uint64_t n) {
    if (n == 0) return std::nullopt;
    if (auto ax = axiom(s)) return ax;
    if (n == 1) return std::nullopt;
    auto k = key(s);
    if (auto it = failed.find(k); it != failed.end() && it->second >= n) return std::nullopt;

    std::vector<Term> local_pool = pool;
    {
      std::set<uint32_t> fv;
      for (const auto& f : s.formulas()) fv.insert(f.free_vars().begin(), f.free_vars().end());
      for (uint32_t v : fv) local_pool.push_back(Term::var(v));
    }

    for (const auto& p : s.formulas()) {
      switch (p.kind()) {
        case FormulaKind::Or: {
          Sequent premise = s.without(p).with(p.child(0)).with(p.child(1));
          if (auto t = sized(premise, n - 1)) return ProofTree::or_intro(s, p, *t);
          break;
        }
        case FormulaKind::Not: {
          Formula inner = p.child(0);
          if (inner.kind() == FormulaKind::Not) {
            if (auto t = sized(s.without(p).with(inner.child(0)), n - 1))
              return ProofTree::not_not(s, p, *t);
          } else if (inner.kind() == FormulaKind::Or) {
            Sequent left = s.without(p).with(Formula::lnot(inner.child(0)));
            Sequent right = s.without(p).with(Formula::lnot(inner.child(1)));
            for (uint64_t n1 = 1; n1 + 2 <= n; ++n1) {
              auto t1 = sized(left, n1);
              if (!t1) continue;
              if (auto t2 = sized(right, n - 1 - t1->node_count()))
                return ProofTree::and_split(s, p, *t1, *t2);
            }
          } else if (inner.kind() == FormulaKind::Exists) {
            uint32_t y = next_eigen++;
            Formula instance =
                Formula::lnot(instantiate(inner.child(0), inner.bound_var(), Term::var(y)));
            if (auto t = sized(s.without(p).with(instance), n - 1))
              return ProofTree::forall_eigen(s, p, y, *t);
          }
          break;
        }
        case FormulaKind::Exists: {
          for (const auto& u : local_pool) {
            if (!u.valid_in(p.sig())) continue;
            Formula instance = instantiate(p.child(0), p.bound_var(), u);
            if (s.contains(instance)) continue;  // no progress
            if (auto t = sized(s.with(instance), n - 1))
              return ProofTree::exists_witness(s, p, u, *t);
          }
          break;
        }
        default: break;
      }
    }
    auto& slot = failed[std::move(k)];
    slot = std::max(slot, n);
    return std::nullopt;
  }
};

}  // namespace

std::optional<ProofTree> bounded_search(const std::vector<Formula>& assumptions,
                                        const Formula& goal, uint64_t size_budget,
                                        const std::vector<Term>& extra_witnesses) {
  if (size_budget > kSearchSizeCeiling)
    throw ResourceError("search size budget " + std::to_string(size_budget) +
                        " exceeds the ceiling " + std::to_string(kSearchSizeCeiling));
  std::vector<Formula> wrapped = {goal};
  for (const auto& a : assumptions) {
    if (!a.closed()) throw DomainError("assumptions must be sentences");
    wrapped.push_back(Formula::lnot(a));
  }
  Sequent root(wrapped);

  Searcher sr;
  for (const auto& f : root.formulas()) collect_closed_terms(f, sr.pool);
  for (const auto& t : extra_witnesses)
    if (t.closed()) sr.pool.push_back(t);
  std::sort(sr.pool.begin(), sr.pool.end(),
            [](const Term& a, const Term& b) { return compare(a, b) < 0; });
  sr.pool.erase(std::unique(sr.pool.begin(), sr.pool.end()), sr.pool.end());

  for (uint64_t n = 1; n <= size_budget; ++n)
    if (auto t = sr.sized(root, n)) return t;
  return std::nullopt;
}

Nat supexp(unsigned long n, unsigned long max_bits) {
  Nat v = 1;
  for (unsigned long i = 0; i < n; ++i) {
    if (!v.fits_ulong_p() || v.get_ui() > max_bits)
      throw ResourceError("supexp(" + std::to_string(n) + ") needs " + nat_str(v) +
                          " bits, over the budget of " + std::to_string(max_bits));
    v = nat_pow2(v.get_ui());
  }
  return v;
}

// ------------------------------------------------------------------ JSON

namespace {

using nlohmann::json;

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::Assumption: return "assumption";
    case Rule::OrIntro: return "or-intro";
    case Rule::AndSplit: return "and-split";
    case Rule::NotNot: return "not-not";
    case Rule::ExistsWitness: return "exists-witness";
    case Rule::ForallEigen: return "forall-eigen";
    case Rule::Cut: return "cut";
  }
  return "?";
}

Rule rule_from_name(const std::string& s) {
  if (s == "ax") return Rule::Ax;
  if (s == "assumption") return Rule::Assumption;
  if (s == "or-intro") return Rule::OrIntro;
  if (s == "and-split") return Rule::AndSplit;
  if (s == "not-not") return Rule::NotNot;
  if (s == "exists-witness") return Rule::ExistsWitness;
  if (s == "forall-eigen") return Rule::ForallEigen;
  if (s == "cut") return Rule::Cut;
  throw ArtifactError("unknown proof rule '" + s + "'");
}

const char* sig_name(Sig s) {
  switch (s) {
    case Sig::Arith: return "arith";
    case Sig::Set: return "set";
    case Sig::NatRel: return "natrel";
  }
  return "?";
}

Sig sig_from_name(const std::string& s) {
  if (s == "arith") return Sig::Arith;
  if (s == "set") return Sig::Set;
  if (s == "natrel") return Sig::NatRel;
  throw ArtifactError("unknown signature '" + s + "'");
}

json tree_to_json(const ProofTree& t) {
  json j;
  j["rule"] = rule_name(t.rule());
  json seq = json::array();
  for (const auto& f : t.sequent().formulas()) seq.push_back(print_formula(f));
  j["sequent"] = seq;
  if (t.principal()) j["principal"] = print_formula(t.principal());
  if (t.witness()) j["witness"] = print_term(t.witness());
  if (t.rule() == Rule::ForallEigen) j["eigen"] = t.eigen_var();
  if (t.arity() > 0) {
    json kids = json::array();
    for (size_t i = 0; i < t.arity(); ++i) kids.push_back(tree_to_json(t.child(i)));
    j["children"] = kids;
  }
  return j;
}

ProofTree tree_from_json(const json& j, Sig sig, const std::string& path) {
  if (!j.is_object() || !j.contains("rule") || !j.contains("sequent"))
    throw StructuralError("proof node needs 'rule' and 'sequent'", path);
  Rule rule = rule_from_name(j.at("rule").get<std::string>());
  std::vector<Formula> fs;
  for (const auto& s : j.at("sequent")) fs.push_back(parse_formula(s.get<std::string>(), sig));
  Sequent seq(std::move(fs));

  std::vector<ProofTree> children;
  if (j.contains("children"))
    for (size_t i = 0; i < j.at("children").size(); ++i)
      children.push_back(tree_from_json(j.at("children")[i], sig, path + "." + std::to_string(i)));

  auto need_children = [&](size_t n) {
    if (children.size() != n)
      throw StructuralError("rule expects " + std::to_string(n) + " children, found " +
                                std::to_string(children.size()),
                            path);
  };
  auto principal = [&]() -> Formula {
    if (!j.contains("principal")) throw StructuralError("rule needs 'principal'", path);
    return parse_formula(j.at("principal").get<std::string>(), sig);
  };

  switch (rule) {
    case Rule::Ax:
      need_children(0);
      return ProofTree::ax(seq);
    case Rule::Assumption:
      need_children(0);
      return ProofTree::assumption(seq, principal());
    case Rule::OrIntro:
      need_children(1);
      return ProofTree::or_intro(seq, principal(), children[0]);
    case Rule::AndSplit:
      need_children(2);
      return ProofTree::and_split(seq, principal(), children[0], children[1]);
    case Rule::NotNot:
      need_children(1);
      return ProofTree::not_not(seq, principal(), children[0]);
    case Rule::ExistsWitness: {
      need_children(1);
      if (!j.contains("witness")) throw StructuralError("exists-witness needs 'witness'", path);
      Term w = parse_term(j.at("witness").get<std::string>(), sig);
      return ProofTree::exists_witness(seq, principal(), w, children[0]);
    }
    case Rule::ForallEigen: {
      need_children(1);
      if (!j.contains("eigen")) throw StructuralError("forall-eigen needs 'eigen'", path);
      return ProofTree::forall_eigen(seq, principal(), j.at("eigen").get<uint32_t>(), children[0]);
    }
    case Rule::Cut:
      need_children(2);
      return ProofTree::cut(seq, principal(), children[0], children[1]);
  }
  throw StructuralError("unknown rule", path);
}

}  // namespace

std::string proof_to_json(const ProofTree& proof, const std::vector<Formula>& assumptions,
                          const Formula& goal, Sig sig) {
  json j;
  j["signature"] = sig_name(sig);
  json phi = json::array();
  for (const auto& a : assumptions) phi.push_back(print_formula(a));
  j["assumptions"] = phi;
  j["goal"] = print_formula(goal);
  j["tree"] = tree_to_json(proof);
  return j.dump(2);
}

ProofFile proof_from_json(const std::string& payload) {
  json j;
  try {
    j = json::parse(payload);
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("proof payload is not valid JSON: ") + e.what());
  }
  ProofFile out;
  try {
    out.sig = sig_from_name(j.at("signature").get<std::string>());
    for (const auto& a : j.at("assumptions"))
      out.assumptions.push_back(parse_formula(a.get<std::string>(), out.sig));
    out.goal = parse_formula(j.at("goal").get<std::string>(), out.sig);
    out.tree = tree_from_json(j.at("tree"), out.sig, "root");
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("proof payload is missing fields: ") + e.what());
  }
  return out;
}

}  // namespace hflab
