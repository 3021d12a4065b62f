#include "hflab/schemes.hpp"

#include <json.hpp>

#include "hflab/bridge.hpp"
#include "hflab/proofs.hpp"

namespace hflab {

Formula induction_instance(const Formula& phi) {
  if (phi.sig() != Sig::Arith)
    throw ArityError("induction instances are generated from arithmetic formulas");
  if (phi.free_vars().size() != 1)
    throw ArityError("induction expects exactly one free variable, got " +
                     std::to_string(phi.free_vars().size()));
  uint32_t x = phi.free_vars()[0];
  Formula base = substitute(phi, x, Term::zero());
  Formula step_body = instantiate(phi, x, Term::succ(Term::var(x)));
  Formula step = Formula::forall(x, Formula::imp(phi, step_body));
  Formula conclusion = Formula::forall(x, phi);
  return Formula::imp(Formula::land(base, step), conclusion);
}

namespace {

constexpr uint32_t kX = 0, kY = 1, kZ = 2;

void require_replacement_arity(const Formula& phi) {
  if (phi.sig() != Sig::Set)
    throw ArityError("replacement instances are generated from set formulas");
  for (uint32_t v : phi.free_vars())
    if (v > kZ)
      throw ArityError("replacement battery formulas use x=v0, y=v1, z=v2; found v" +
                       std::to_string(v));
}

bool uses_z(const Formula& phi) {
  const auto& fv = phi.free_vars();
  return std::binary_search(fv.begin(), fv.end(), kZ);
}

// ∀x ∃y (φ ∧ ∀y'(φ[y'/y] → y' = y))
Formula functionality(const Formula& phi) {
  uint32_t y2 = std::max<uint32_t>(phi.max_var_excl(), 6);
  Formula unique = Formula::forall(
      y2, Formula::imp(instantiate(phi, kY, Term::var(y2)),
                       Formula::eq(Term::var(y2), Term::var(kY), Sig::Set)));
  return Formula::forall(kX, Formula::exists(kY, Formula::land(phi, unique)));
}

// ∀v ∃w ∀y (y ∈ w ↔ ∃x(x ∈ v ∧ φ))
Formula image_existence(const Formula& phi) {
  uint32_t v = std::max<uint32_t>(phi.max_var_excl(), 6) + 1;
  uint32_t w = v + 1;
  Formula member = Formula::exists(
      kX, Formula::land(Formula::in(Term::var(kX), Term::var(v)), phi));
  Formula body = Formula::iff(Formula::in(Term::var(kY), Term::var(w)), member);
  return Formula::forall(v, Formula::exists(w, Formula::forall(kY, body)));
}

Formula close_z(const Formula& phi, Formula inner) {
  return uses_z(phi) ? Formula::forall(kZ, std::move(inner)) : inner;
}

}  // namespace

Formula replacement_instance(const Formula& phi) {
  require_replacement_arity(phi);
  return close_z(phi, Formula::imp(functionality(phi), image_existence(phi)));
}

Formula replacement_consequent(const Formula& phi) {
  require_replacement_arity(phi);
  return close_z(phi, image_existence(phi));
}

SchemeInstance make_induction(const Formula& phi) {
  Formula inst = induction_instance(phi);
  return {SchemeKind::Induction, phi, inst, "", print_formula(inst)};
}

SchemeInstance make_replacement(const Formula& phi) {
  Formula inst = replacement_instance(phi);
  return {SchemeKind::Replacement, phi, inst, "", print_formula(inst)};
}

SchemeInstance make_reflection(const std::string& theory_label, const Formula& phi) {
  return {SchemeKind::Reflection, phi, Formula(), theory_label,
          "(refl " + theory_label + " " + print_formula(phi) + ")"};
}

// --------------------------------------------------------------- reflection

std::vector<ReflectionVerdict> reflection_instances(const TheorySpec& u,
                                                    const std::vector<Formula>& battery,
                                                    uint64_t size_ceiling,
                                                    unsigned long max_value) {
  std::vector<ReflectionVerdict> out;
  for (const auto& phi : battery) {
    if (phi.sig() != u.sig) throw SignatureError("battery and theory signatures differ");
    if (phi.free_vars().size() != 1)
      throw ArityError("reflection battery formulas have exactly one free variable");
    uint32_t x = phi.free_vars()[0];
    ReflectionVerdict v;
    v.instance = make_reflection(u.label, phi);
    for (unsigned long n = 0; n <= max_value; ++n) {
      Formula goal = substitute(phi, x, Term::numeral(n));
      ++v.values_tested;
      auto proof = bounded_search(u.axioms, goal, size_ceiling);
      if (!proof) continue;
      ++v.provable;
      if (!eval_qf_arith(goal)) v.failures.push_back(n);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<TheorySpec> ref_tower(const TheorySpec& u, const std::vector<Formula>& battery,
                                  uint32_t levels) {
  std::vector<TheorySpec> tower = {u};
  for (uint32_t k = 1; k <= levels; ++k) {
    TheorySpec next = tower.back();
    next.label = u.label + "+ref^" + std::to_string(k);
    for (const auto& phi : battery)
      next.reflection_axioms.push_back(make_reflection(tower.back().label, phi));
    tower.push_back(std::move(next));
  }
  return tower;
}

// ----------------------------------------------------------- tower audits

namespace {

// Set-level image oracle: collects, for every choice of parameter and
// source set in the domain, the set of in-domain image elements, and reports
// the rank of the first such image set whose code escapes the domain.
std::optional<uint32_t> image_overflow_rank(const TruthTower& tower, const Formula& phi) {
  const FiniteStructure& s = tower.structure();
  EvalCache cache;
  bool has_z = uses_z(phi);
  size_t z_range = has_z ? s.size() : 1;
  for (size_t z = 0; z < z_range; ++z) {
    for (size_t v = 0; v < s.size(); ++v) {
      std::vector<HFSet> image;
      for (size_t y = 0; y < s.size(); ++y) {
        bool hit = false;
        for (size_t x = 0; x < s.size() && !hit; ++x) {
          if (!s.mem(x, v)) continue;
          std::vector<std::pair<uint32_t, size_t>> env = {{kX, x}, {kY, y}};
          if (has_z) env.emplace_back(kZ, z);
          hit = eval_with_env(phi, s, env, &cache);
        }
        if (hit) image.push_back(s.set_at(y));
      }
      HFSet w = HFSet::from_children(std::move(image));
      if (!w.has_code() || !s.find_code(w.code())) return w.rank();
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<ReplacementVerdict> audit_replacement(const TruthTower& tower,
                                                  const std::vector<Formula>& battery) {
  std::vector<ReplacementVerdict> out;
  for (const auto& phi : battery) {
    ReplacementVerdict v;
    v.generator = phi;
    Formula conditional = replacement_instance(phi);
    Formula image = replacement_consequent(phi);
    try {
      v.conditional_member = tower.member(conditional);
    } catch (const ReachExceededError&) {
    }
    try {
      v.image_member = tower.member(image);
    } catch (const ReachExceededError&) {
    }
    if (!v.conditional_member || !v.image_member) {
      v.status = ReplacementStatus::ReachExceeded;
      out.push_back(std::move(v));
      continue;
    }
    v.overflow_rank = image_overflow_rank(tower, phi);
    if (*v.image_member && !v.overflow_rank)
      v.status = ReplacementStatus::Holds;
    else if (v.overflow_rank)
      v.status = ReplacementStatus::Boundary;
    else
      v.status = ReplacementStatus::Mismatch;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<InductionVerdict> audit_induction(const TruthTower& tower,
                                              const std::vector<Formula>& battery) {
  std::vector<InductionVerdict> out;
  EvalCache cache;
  for (const auto& phi : battery) {
    InductionVerdict v;
    v.generator = phi;
    v.translated = pa_to_zf(induction_instance(phi));
    try {
      v.member = tower.member(v.translated);
      v.agrees_with_eval = *v.member == eval_sentence(v.translated, tower.structure(), &cache);
    } catch (const ReachExceededError&) {
      v.agrees_with_eval = false;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------- samples

TheorySpec sample_sound_theory() {
  TheorySpec t;
  t.label = "identity";
  t.sig = Sig::Arith;
  t.axioms = {parse_formula("(forall v0 (= v0 v0))", Sig::Arith),
              parse_formula("(forall v0 (not (= (S v0) (num 0))))", Sig::Arith)};
  return t;
}

TheorySpec sample_unsound_theory() {
  TheorySpec t;
  t.label = "collapsed";
  t.sig = Sig::Arith;
  t.axioms = {parse_formula("(= (num 0) (S (num 0)))", Sig::Arith)};
  return t;
}

std::vector<Formula> sample_reflection_battery() {
  return {parse_formula("(= v0 v0)", Sig::Arith), parse_formula("(= v0 (S v0))", Sig::Arith)};
}

std::vector<Formula> sample_replacement_battery() {
  // identity map, singleton map, constant-∅ map, unconstrained y
  return {parse_formula("(= v1 v0)", Sig::Set),
          parse_formula("(forall v3 (and (imp (in v3 v1) (= v3 v0))"
                        " (imp (= v3 v0) (in v3 v1))))",
                        Sig::Set),
          parse_formula("(not (exists v3 (in v3 v1)))", Sig::Set),
          parse_formula("(= v0 v0)", Sig::Set)};
}

// -------------------------------------------------------------- artifacts

namespace {

using nlohmann::json;

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

}  // namespace

std::string theory_to_json(const TheorySpec& t) {
  json j;
  j["label"] = t.label;
  j["signature"] = sig_name(t.sig);
  json ax = json::array();
  for (const auto& a : t.axioms) ax.push_back(print_formula(a));
  j["axioms"] = ax;
  json refl = json::array();
  for (const auto& r : t.reflection_axioms)
    refl.push_back({{"theory", r.theory}, {"generator", print_formula(r.generator)}});
  j["reflection"] = refl;
  return j.dump(2);
}

TheorySpec theory_from_json(const std::string& payload) {
  json j;
  try {
    j = json::parse(payload);
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("theory payload is not valid JSON: ") + e.what());
  }
  TheorySpec t;
  try {
    t.label = j.at("label").get<std::string>();
    t.sig = sig_from_name(j.at("signature").get<std::string>());
    for (const auto& a : j.at("axioms"))
      t.axioms.push_back(parse_formula(a.get<std::string>(), t.sig));
    if (j.contains("reflection"))
      for (const auto& r : j.at("reflection"))
        t.reflection_axioms.push_back(make_reflection(
            r.at("theory").get<std::string>(),
            parse_formula(r.at("generator").get<std::string>(), t.sig)));
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("theory payload is missing fields: ") + e.what());
  }
  return t;
}

std::string battery_to_json(Sig sig, const std::vector<Formula>& battery) {
  json j;
  j["signature"] = sig_name(sig);
  json fs = json::array();
  for (const auto& f : battery) fs.push_back(print_formula(f));
  j["formulas"] = fs;
  return j.dump(2);
}

std::pair<Sig, std::vector<Formula>> battery_from_json(const std::string& payload) {
  json j;
  try {
    j = json::parse(payload);
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("battery payload is not valid JSON: ") + e.what());
  }
  try {
    Sig sig = sig_from_name(j.at("signature").get<std::string>());
    std::vector<Formula> fs;
    for (const auto& f : j.at("formulas")) fs.push_back(parse_formula(f.get<std::string>(), sig));
    return {sig, fs};
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("battery payload is missing fields: ") + e.what());
  }
}

}  // namespace hflab
