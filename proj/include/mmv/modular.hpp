// Word-size prime fields, Chinese remaindering and rational reconstruction.
// Primes are random 62-bit; multiplication uses Montgomery form so the
// elimination inner loops stay free of 128-by-64 division.
#pragma once

#include <cstdint>
#include <vector>

#include "mmv/rational.hpp"

namespace mmv {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd prime p < 2^63. Values are kept in
// Montgomery form internally; to_residue/from_residue convert.
class PrimeField {
  public:
    explicit PrimeField(u64 p);

    u64 prime() const { return p_; }

    u64 to_mont(u64 x) const { return mont_mul(x % p_, r2_); }
    u64 from_mont(u64 x) const { return mont_mul(x, 1); }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return mont_mul(a, b); }
    u64 inv(u64 a) const;  // Montgomery form in, Montgomery form out
    u64 one() const { return one_; }

    // Reduce a signed 64-bit integer into Montgomery form.
    u64 from_int64(std::int64_t v) const;
    // Reduce an arbitrary-precision integer or rational into Montgomery form.
    u64 from_int(const Int& v) const;
    u64 from_rat(const Rat& q) const;  // throws if denominator divisible by p

  private:
    u64 mont_mul(u64 a, u64 b) const {
        u128 t = static_cast<u128>(a) * b;
        u64 m = static_cast<u64>(t) * ninv_;
        u128 u = (t + static_cast<u128>(m) * p_) >> 64;
        u64 r = static_cast<u64>(u);
        return r >= p_ ? r - p_ : r;
    }

    u64 p_ = 0;
    u64 ninv_ = 0;  // -p^{-1} mod 2^64
    u64 r2_ = 0;    // 2^128 mod p
    u64 one_ = 0;   // 2^64 mod p
};

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n);

// Random prime in [2^61, 2^62); seedable for reproducible runs.
u64 random_prime62(u64 seed);

// Garner-style CRT: amend x (mod m) with residue r (mod p), p coprime to m.
void crt_combine(Int& x, Int& m, u64 residue, u64 p);

// Rational reconstruction of q ≡ x (mod m) with |num|, den <= sqrt(m/2).
// Returns false when no such q exists.
bool rational_reconstruct(const Int& x, const Int& m, Rat& out);

// Row rank of a small dense matrix over F_p (plain residues, not Montgomery).
int rank_mod_p(std::vector<std::vector<u64>> rows, u64 p);

}  // namespace mmv
