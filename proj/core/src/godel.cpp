#include "hflab/godel.hpp"

#include <vector>

namespace hflab {
namespace {

// Radices per decoding context.
constexpr unsigned kFormulaRadix = 6;  // Eq In AckMem Not Or Exists
constexpr unsigned kNumRadix = 4;      // stop, then bijective base-3 digits
constexpr unsigned kArithTermRadix = 5;   // Var Zero Succ Add Mul
constexpr unsigned kSetTermRadix = 2;     // Var Const
constexpr unsigned kNatRelTermRadix = 3;  // Var Zero Succ

unsigned term_radix(Sig sig) {
  switch (sig) {
    case Sig::Arith: return kArithTermRadix;
    case Sig::Set: return kSetTermRadix;
    case Sig::NatRel: return kNatRelTermRadix;
  }
  return 0;
}

struct TokenStream {
  // token/radix pairs in preorder
  std::vector<std::pair<unsigned, unsigned>> toks;
  void push(unsigned tok, unsigned radix) { toks.emplace_back(tok, radix); }
};

// Bijective base-3, little-endian, digits encoded as tokens 1..3 with a
// trailing 0 stop token. The empty digit string is 0.
void emit_number(TokenStream& s, Nat n) {
  while (n > 0) {
    unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 3);
    if (r == 0) {
      s.push(3, kNumRadix);
      n = n / 3 - 1;
    } else {
      s.push(static_cast<unsigned>(r), kNumRadix);
      n = n / 3;
    }
  }
  s.push(0, kNumRadix);
}

void emit_term(TokenStream& s, const Term& t, Sig sig) {
  unsigned radix = term_radix(sig);
  switch (t.kind()) {
    case TermKind::Var:
      s.push(0, radix);
      emit_number(s, Nat(t.var_index()));
      return;
    case TermKind::Const:
      s.push(1, radix);
      emit_number(s, t.const_code());
      return;
    case TermKind::Zero:
      s.push(1, radix);
      return;
    case TermKind::Succ:
      s.push(2, radix);
      emit_term(s, t.child(0), sig);
      return;
    case TermKind::Add:
    case TermKind::Mul:
      s.push(t.kind() == TermKind::Add ? 3u : 4u, radix);
      emit_term(s, t.child(0), sig);
      emit_term(s, t.child(1), sig);
      return;
  }
}

void emit_formula(TokenStream& s, const Formula& f) {
  Sig sig = f.sig();
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::In:
    case FormulaKind::AckMem: {
      unsigned tok = f.kind() == FormulaKind::Eq ? 0u : f.kind() == FormulaKind::In ? 1u : 2u;
      s.push(tok, kFormulaRadix);
      emit_term(s, f.term(0), sig);
      emit_term(s, f.term(1), sig);
      return;
    }
    case FormulaKind::Not:
      s.push(3, kFormulaRadix);
      emit_formula(s, f.child(0));
      return;
    case FormulaKind::Or:
      s.push(4, kFormulaRadix);
      emit_formula(s, f.child(0));
      emit_formula(s, f.child(1));
      return;
    case FormulaKind::Exists:
      s.push(5, kFormulaRadix);
      emit_number(s, Nat(f.bound_var()));
      emit_formula(s, f.child(0));
      return;
  }
}

struct Decoder {
  Nat v;

  unsigned pop(unsigned radix) {
    unsigned tok = static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), radix));
    v /= radix;
    return tok;
  }

  Nat pop_number() {
    Nat val = 0;
    Nat place = 1;
    for (;;) {
      unsigned d = pop(kNumRadix);
      if (d == 0) return val;
      val += place * d;
      place *= 3;
    }
  }

  std::optional<Term> pop_term(Sig sig) {
    unsigned tok = pop(term_radix(sig));
    switch (sig) {
      case Sig::Set:
        if (tok == 0) break;
        return Term::constant(pop_number());
      case Sig::Arith:
      case Sig::NatRel:
        if (tok == 0) break;
        if (tok == 1) return Term::zero();
        if (tok == 2) {
          auto c = pop_term(sig);
          if (!c) return std::nullopt;
          return Term::succ(*c);
        }
        // Add/Mul only exist in the arithmetic table (radix 5).
        {
          auto a = pop_term(sig);
          if (!a) return std::nullopt;
          auto b = pop_term(sig);
          if (!b) return std::nullopt;
          return tok == 3 ? Term::add(*a, *b) : Term::mul(*a, *b);
        }
    }
    Nat idx = pop_number();
    if (!idx.fits_ulong_p() || idx.get_ui() > 0xFFFFFFFFull) return std::nullopt;
    return Term::var(static_cast<uint32_t>(idx.get_ui()));
  }

  std::optional<Formula> pop_formula(Sig sig) {
    unsigned tok = pop(kFormulaRadix);
    switch (tok) {
      case 0:
      case 1:
      case 2: {
        if (tok == 1 && sig != Sig::Set) return std::nullopt;
        if (tok == 2 && sig != Sig::NatRel) return std::nullopt;
        auto a = pop_term(sig);
        if (!a) return std::nullopt;
        auto b = pop_term(sig);
        if (!b) return std::nullopt;
        if (tok == 0) return Formula::eq(*a, *b, sig);
        if (tok == 1) return Formula::in(*a, *b);
        return Formula::ack_mem(*a, *b);
      }
      case 3: {
        auto a = pop_formula(sig);
        if (!a) return std::nullopt;
        return Formula::lnot(*a);
      }
      case 4: {
        auto a = pop_formula(sig);
        if (!a) return std::nullopt;
        auto b = pop_formula(sig);
        if (!b) return std::nullopt;
        return Formula::lor(*a, *b);
      }
      default: {
        Nat idx = pop_number();
        if (!idx.fits_ulong_p() || idx.get_ui() > 0xFFFFFFFFull) return std::nullopt;
        auto body = pop_formula(sig);
        if (!body) return std::nullopt;
        return Formula::exists(static_cast<uint32_t>(idx.get_ui()), *body);
      }
    }
  }
};

}  // namespace

Nat godel_code(const Formula& f) {
  TokenStream s;
  emit_formula(s, f);
  Nat v = 0;
  for (auto it = s.toks.rbegin(); it != s.toks.rend(); ++it) {
    v *= it->second;
    v += it->first;
  }
  return 3 * v + static_cast<unsigned>(f.sig()) + 1;
}

std::optional<Formula> godel_decode(const Nat& code) {
  if (code < 1) return std::nullopt;
  Nat body = code - 1;
  auto sig = static_cast<Sig>(mpz_fdiv_ui(body.get_mpz_t(), 3));
  Decoder dec{body / 3};
  auto f = dec.pop_formula(sig);
  if (!f) return std::nullopt;
  // Canonical codes leave no remainder; anything else is not a code.
  if (dec.v != 0) return std::nullopt;
  return f;
}

}  // namespace hflab
