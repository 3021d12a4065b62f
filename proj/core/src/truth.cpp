#include "hflab/truth.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "hflab/gen.hpp"
#include "hflab/godel.hpp"
#include "hflab/rng.hpp"

namespace hflab {
namespace detail {

struct LevelChain {
  std::shared_ptr<const FiniteStructure> structure;
  std::shared_ptr<const LevelChain> below;  // null for the atomic level
  uint32_t depth = 1;
  mutable std::mutex mu;
  mutable std::unordered_map<const FormulaNode*, bool> memo;

  // The sentence must be an FSent of the structure's language.
  void require_fsent(const Formula& f) const {
    if (f.sig() != Sig::Set) throw SignatureError("truth classes hold set-signature sentences");
    if (!f.closed())
      throw DomainError("not a sentence (free variables): " + print_formula(f));
  }

  size_t constant_index(const Term& t) const {
    if (t.kind() != TermKind::Const)
      throw DomainError("atomic sentence with a non-constant term: " + print_term(t));
    auto idx = structure->find_code(t.const_code());
    if (!idx)
      throw DomainError("constant c_" + nat_str(t.const_code()) + " does not denote in " +
                        structure->describe());
    return *idx;
  }

  bool decide(const Formula& f) const {
    if (f.depth() > depth)
      throw ReachExceededError("depth " + std::to_string(f.depth()) +
                               " sentence queried at level " + std::to_string(depth));
    if (f.depth() < depth) return below->decide(f);

    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = memo.find(f.raw());
      if (it != memo.end()) return it->second;
    }

    bool result;
    if (depth == 1) {
      size_t a = constant_index(f.term(0));
      size_t b = constant_index(f.term(1));
      result = f.kind() == FormulaKind::Eq ? a == b
               : f.kind() == FormulaKind::In
                   ? structure->mem(a, b)
                   : throw SignatureError("unexpected atom in a set truth class");
    } else {
      switch (f.kind()) {
        case FormulaKind::Not: result = !below->decide(f.child(0)); break;
        case FormulaKind::Or:
          result = below->decide(f.child(0)) || below->decide(f.child(1));
          break;
        case FormulaKind::Exists: {
          result = false;
          // ascending code order; first witness fixed by the memo
          for (size_t i = 0; i < structure->size() && !result; ++i) {
            Term c = Term::constant(structure->contiguous() ? Nat(i)
                                                            : structure->set_at(i).code());
            result = below->decide(substitute(f.child(0), f.bound_var(), c));
          }
          break;
        }
        default:
          // an atom can only sit at depth 1
          throw ReachExceededError("malformed depth bookkeeping");
      }
    }

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(f.raw(), result);
    return result;
  }
};

}  // namespace detail

uint32_t TruthLevel::level() const { return chain_->depth; }
const FiniteStructure& TruthLevel::structure() const { return *chain_->structure; }

bool TruthLevel::contains(const Formula& sentence) const {
  chain_->require_fsent(sentence);
  return chain_->decide(sentence);
}

TruthLevel atomic_level(std::shared_ptr<const FiniteStructure> s) {
  auto chain = std::make_shared<detail::LevelChain>();
  chain->structure = std::move(s);
  chain->depth = 1;
  return TruthLevel(chain);
}

TruthLevel extend_level(const TruthLevel& t) {
  auto chain = std::make_shared<detail::LevelChain>();
  chain->structure = t.chain_->structure;
  chain->below = t.chain_;
  chain->depth = t.chain_->depth + 1;
  return TruthLevel(chain);
}

TruthTower::TruthTower(const DomainSpec& spec, uint32_t reach, uint64_t node_budget,
                       unsigned long domain_budget)
    : spec_(spec), node_budget_(node_budget) {
  if (reach == 0) throw UsageError("tower reach must be at least 1");
  structure_ = std::make_shared<FiniteStructure>(FiniteStructure::from_spec(spec, domain_budget));
  levels_.push_back(atomic_level(structure_));
  for (uint32_t k = 1; k < reach; ++k) levels_.push_back(extend_level(levels_.back()));
}

const TruthLevel& TruthTower::level(uint32_t k) const {
  if (k == 0 || k > levels_.size())
    throw UsageError("no level " + std::to_string(k) + " in a reach-" +
                     std::to_string(levels_.size()) + " tower");
  return levels_[k - 1];
}

TruthTower::Membership TruthTower::query(const Formula& sentence) const {
  uint32_t d = sentence.depth();
  if (d > reach())
    throw ReachExceededError("sentence depth " + std::to_string(d) + " exceeds tower reach " +
                             std::to_string(reach()) +
                             " (the query falls outside the constructed stratification)");
  return {level(d).contains(sentence), d};
}

// ---------------------------------------------------------- enumeration

namespace {

struct Enumerator {
  std::vector<Term> constants;
  uint64_t max_count;
  uint64_t produced = 0;
  // memo per (node target size, scope)
  std::map<std::pair<uint64_t, uint32_t>, std::vector<Formula>> memo;

  std::vector<Term> terms(uint32_t scope) const {
    std::vector<Term> out = constants;
    for (uint32_t v = 0; v < scope; ++v) out.push_back(Term::var(v));
    return out;
  }

  const std::vector<Formula>& exactly(uint64_t n, uint32_t scope) {
    auto key = std::make_pair(n, scope);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Formula> out;
    if (n == 3) {
      auto ts = terms(scope);
      for (const auto& a : ts)
        for (const auto& b : ts) {
          out.push_back(Formula::eq(a, b, Sig::Set));
          out.push_back(Formula::in(a, b));
        }
    } else if (n > 3) {
      for (const auto& f : exactly(n - 1, scope)) out.push_back(Formula::lnot(f));
      for (const auto& f : exactly(n - 1, scope + 1)) out.push_back(Formula::exists(scope, f));
      for (uint64_t left = 3; left + 4 <= n; ++left)
        for (const auto& a : exactly(left, scope))
          for (const auto& b : exactly(n - 1 - left, scope)) out.push_back(Formula::lor(a, b));
    }
    produced += out.size();
    if (produced > max_count)
      throw ResourceError("sentence enumeration exceeds " + std::to_string(max_count) +
                          " formulas; lower the node budget");
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Formula> enumerate_sentences(const FiniteStructure& s, uint64_t node_budget,
                                         uint64_t max_count) {
  if (!s.contiguous())
    throw UsageError("sentence enumeration requires an enumerated (rank/code capped) domain");
  Enumerator en;
  en.max_count = max_count;
  for (size_t i = 0; i < s.size(); ++i) en.constants.push_back(Term::constant(Nat(i)));
  std::vector<Formula> out;
  for (uint64_t n = 3; n <= node_budget; ++n) {
    const auto& batch = en.exactly(n, 0);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// ------------------------------------------------------------ agreement

AgreementReport check_agreement(const TruthOracle& a, const TruthOracle& b,
                                const FiniteStructure& s, uint64_t node_budget) {
  AgreementReport report;
  report.common_depth = std::min(a.level(), b.level());
  for (const auto& f : enumerate_sentences(s, node_budget)) {
    if (f.depth() > report.common_depth) continue;
    bool in_a = a.contains(f);
    bool in_b = b.contains(f);
    ++report.compared;
    if (in_a != in_b) report.disagreements.push_back({f, in_a, in_b});
  }
  return report;
}

// -------------------------------------------------------------- CT⁻

CtReport verify_ct(const TruthOracle& t, const FiniteStructure& s, uint32_t family_depth,
                   uint64_t node_budget) {
  if (family_depth > t.level())
    throw ReachExceededError("family depth " + std::to_string(family_depth) +
                             " exceeds the oracle's level " + std::to_string(t.level()));
  CtReport report;
  report.family_depth = family_depth;
  FormulaFamily family = FormulaFamily::depth_family(Sig::Set, family_depth);

  auto sentences = enumerate_sentences(s, node_budget);
  report.sentences_enumerated = sentences.size();

  // clause 2 exhaustively over the atomic diagram
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = 0; b < s.size(); ++b) {
      Term ca = Term::constant(Nat(a));
      Term cb = Term::constant(Nat(b));
      Formula eq = Formula::eq(ca, cb, Sig::Set);
      Formula in = Formula::in(ca, cb);
      ++report.clause_checks[2];
      if (t.contains(eq) != (a == b))
        report.violations.push_back({2, eq, t.contains(eq), a == b, "atomic equality clause"});
      ++report.clause_checks[2];
      if (t.contains(in) != s.mem(a, b))
        report.violations.push_back({2, in, t.contains(in), s.mem(a, b),
                                     "atomic membership clause"});
    }

  for (const auto& f : sentences) {
    if (f.depth() > family_depth) continue;

    // clause 1: members are F-sentences; F is closed under immediate subformulas
    ++report.clause_checks[1];
    if (t.contains(f) && !is_fsent(f, family))
      report.violations.push_back({1, f, true, false, "member is not an F-sentence"});
    for (const auto& sub : f.immediate_subformulas())
      if (family.contains(f) && !family.contains(sub))
        report.violations.push_back({1, f, false, true, "family not subformula-closed"});

    switch (f.kind()) {
      case FormulaKind::Not: {
        ++report.clause_checks[3];
        bool whole = t.contains(f);
        bool inner = t.contains(f.child(0));
        if (whole != !inner)
          report.violations.push_back({3, f, whole, !inner, "negation clause"});
        break;
      }
      case FormulaKind::Or: {
        ++report.clause_checks[4];
        bool whole = t.contains(f);
        bool some = t.contains(f.child(0)) || t.contains(f.child(1));
        if (whole != some) report.violations.push_back({4, f, whole, some, "disjunction clause"});
        break;
      }
      case FormulaKind::Exists: {
        ++report.clause_checks[5];
        bool whole = t.contains(f);
        bool some = false;
        for (size_t i = 0; i < s.size() && !some; ++i)
          some = t.contains(substitute(f.child(0), f.bound_var(), Term::constant(Nat(i))));
        if (whole != some) report.violations.push_back({5, f, whole, some, "existential clause"});
        break;
      }
      default: break;
    }
  }
  return report;
}

// -------------------------------------------------------------- faces

namespace {

Formula random_atom(Rng& rng, size_t domain_size) {
  Term a = Term::constant(Nat(rng.below(domain_size)));
  Term b = Term::constant(Nat(rng.below(domain_size)));
  return rng.chance(1, 2) ? Formula::eq(a, b, Sig::Set) : Formula::in(a, b);
}

Formula balanced_or(const std::vector<Formula>& leaves, size_t lo, size_t hi) {
  if (hi - lo == 1) return leaves[lo];
  size_t mid = lo + (hi - lo) / 2;
  return Formula::lor(balanced_or(leaves, lo, mid), balanced_or(leaves, mid, hi));
}

}  // namespace

FacesReport faces_audit(const TruthTower& tower, uint32_t max_width, uint32_t closure_samples,
                        uint64_t seed) {
  FacesReport report;
  report.seed = seed;
  Rng rng(seed);
  const FiniteStructure& s = tower.structure();
  EvalCache cache;

  // DC and DC_out over seeded balanced disjunctions of atomic sentences
  for (uint32_t width = 2; width <= max_width; ++width) {
    for (int round = 0; round < 8; ++round) {
      std::vector<Formula> leaves;
      bool oracle_true = false;
      for (uint32_t i = 0; i < width; ++i) {
        Formula atom = random_atom(rng, s.size());
        leaves.push_back(atom);
        oracle_true = oracle_true || eval_sentence(atom, s, &cache);
      }
      Formula disj = balanced_or(leaves, 0, leaves.size());
      if (disj.depth() > tower.reach()) continue;
      bool in_t = tower.member(disj);
      ++report.dc_checked;
      if (in_t != oracle_true) {
        ++report.dc_failures;
        report.failures.push_back("DC: " + print_formula(disj));
      }
      if (in_t && !oracle_true) {
        ++report.dc_out_failures;
        report.failures.push_back("DC_out: " + print_formula(disj));
      }
    }
  }

  // sentential closure: ψ ∈ T and ¬ψ∨χ ∈ T force χ ∈ T
  FormulaGenOptions opt;
  opt.max_depth = tower.reach() >= 3 ? tower.reach() - 2 : 1;
  for (size_t i = 0; i < s.size(); ++i) opt.constants.emplace_back(i);
  FormulaGen gen(opt, seed ^ 0x5ca1ab1eull);
  uint32_t done = 0;
  uint64_t attempts = 0;
  while (done < closure_samples && attempts < 100ull * closure_samples) {
    ++attempts;
    Formula psi = gen.sentence();
    Formula chi = gen.sentence();
    Formula premise = Formula::lor(Formula::lnot(psi), chi);
    if (premise.depth() > tower.reach()) continue;
    if (!tower.member(psi) || !tower.member(premise)) continue;
    ++done;
    ++report.closure_checked;
    if (!tower.member(chi)) {
      ++report.closure_failures;
      report.failures.push_back("closure: " + print_formula(psi) + " , " +
                                print_formula(premise) + " but not " + print_formula(chi));
    }
  }
  return report;
}

// ----------------------------------------------------------- piecewise

Nat piecewise_code(const TruthTower& tower, const Nat& m) {
  if (!m.fits_ulong_p() || m.get_ui() > (1ul << 24))
    throw ResourceError("piecewise prefix length " + nat_str(m) + " is out of range");
  unsigned long bits = m.get_ui();
  const FiniteStructure& s = tower.structure();
  Nat out = 0;
  for (unsigned long x = 0; x < bits; ++x) {
    auto f = godel_decode(Nat(x));
    if (!f || f->sig() != Sig::Set || !f->closed()) continue;
    // constants must denote; otherwise x does not code a sentence of this
    // structure's language and the bit stays clear
    bool denotes = true;
    std::vector<Formula> stack = {*f};
    while (!stack.empty() && denotes) {
      Formula g = stack.back();
      stack.pop_back();
      if (g.atomic()) {
        for (int i = 0; i < 2 && denotes; ++i)
          if (g.term(i).kind() == TermKind::Const && !s.find_code(g.term(i).const_code()))
            denotes = false;
      } else {
        for (const auto& sub : g.immediate_subformulas()) stack.push_back(sub);
      }
    }
    if (!denotes) continue;
    if (f->depth() > tower.reach())
      throw ReachExceededError("piecewise prefix " + nat_str(m) + " reaches code " +
                               std::to_string(x) + " of depth " + std::to_string(f->depth()) +
                               ", beyond tower reach " + std::to_string(tower.reach()));
    if (tower.member(*f)) nat_set_bit(out, x);
  }
  return out;
}

std::vector<Nat> definable_set(const Formula& phi, const TruthTower& tower) {
  if (phi.free_vars().size() != 1)
    throw ArityError("definable_set expects exactly one free variable, got " +
                     std::to_string(phi.free_vars().size()));
  uint32_t var = phi.free_vars()[0];
  const FiniteStructure& s = tower.structure();
  std::vector<Nat> out;
  for (size_t i = 0; i < s.size(); ++i) {
    Nat code = s.contiguous() ? Nat(i) : s.set_at(i).code();
    if (tower.member(substitute(phi, var, Term::constant(code)))) out.push_back(code);
  }
  return out;
}

}  // namespace hflab
