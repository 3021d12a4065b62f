#ifndef HFLAB_NAT_HPP
#define HFLAB_NAT_HPP

#include <cstdint>
#include <functional>
#include <string>

#include <gmpxx.h>

namespace hflab {

// Arbitrary-precision natural. All codes in this library (set codes, formula
// codes, tetration values) are Nat; callers must keep them non-negative.
using Nat = mpz_class;

inline bool nat_fits_ulong(const Nat& n) { return n.fits_ulong_p(); }

// Bit i of n, where i may itself be a big natural. A bit index beyond
// anything n can hold is simply a zero bit.
inline bool nat_bit(const Nat& n, const Nat& i) {
  if (!i.fits_ulong_p()) return false;
  return mpz_tstbit(n.get_mpz_t(), i.get_ui()) != 0;
}

inline bool nat_bit(const Nat& n, unsigned long i) {
  return mpz_tstbit(n.get_mpz_t(), i) != 0;
}

inline void nat_set_bit(Nat& n, unsigned long i) { mpz_setbit(n.get_mpz_t(), i); }

inline Nat nat_pow2(unsigned long k) {
  Nat r;
  mpz_setbit(r.get_mpz_t(), k);
  return r;
}

// Number of bits in n (0 has zero bits).
inline size_t nat_bit_length(const Nat& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

// Calls fn(position) for every set bit, ascending.
template <typename Fn>
void nat_for_each_bit(const Nat& n, Fn&& fn) {
  mp_bitcnt_t pos = mpz_scan1(n.get_mpz_t(), 0);
  while (pos != ~static_cast<mp_bitcnt_t>(0)) {
    fn(static_cast<unsigned long>(pos));
    pos = mpz_scan1(n.get_mpz_t(), pos + 1);
  }
}

inline size_t nat_popcount(const Nat& n) { return mpz_popcount(n.get_mpz_t()); }

inline std::string nat_str(const Nat& n) { return n.get_str(10); }

inline size_t nat_hash(const Nat& n) {
  if (n.fits_ulong_p()) return std::hash<unsigned long>{}(n.get_ui());
  size_t h = 1469598103934665603ull;
  for (char c : n.get_str(62)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hflab

#endif  // HFLAB_NAT_HPP
