#include "mmv/modular.hpp"

#include <stdexcept>

namespace mmv {

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p < 3 || (p & 1) == 0) throw std::invalid_argument("PrimeField needs an odd prime");
    // Newton iteration for p^{-1} mod 2^64, then negate.
    u64 inv = p;
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    ninv_ = ~inv + 1;
    // 2^64 mod p and 2^128 mod p.
    one_ = (~static_cast<u64>(0)) % p + 1;
    if (one_ == p) one_ = 0;
    u128 r = one_;
    r2_ = static_cast<u64>((r * one_) % p);
    // one_ is 2^64 mod p which is to_mont(1) already; recompute via r2 for safety.
    one_ = mont_mul(1, r2_);
}

u64 PrimeField::inv(u64 a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2).
    u64 result = one_;
    u64 base = a;
    u64 e = p_ - 2;
    while (e) {
        if (e & 1) result = mont_mul(result, base);
        base = mont_mul(base, base);
        e >>= 1;
    }
    return result;
}

u64 PrimeField::from_int64(std::int64_t v) const {
    if (v >= 0) return to_mont(static_cast<u64>(v) % p_);
    u64 m = static_cast<u64>(-(v + 1)) + 1;  // |v| without overflow
    u64 r = m % p_;
    return to_mont(r == 0 ? 0 : p_ - r);
}

u64 PrimeField::from_int(const Int& v) const {
    Int m = v % Int(p_);
    if (m < 0) m += Int(p_);
    return to_mont(m.get_ui());
}

u64 PrimeField::from_rat(const Rat& q) const {
    u64 den = from_int(Int(q.get_den()));
    if (den == 0) throw std::domain_error("denominator divisible by prime");
    return mul(from_int(Int(q.get_num())), inv(den));
}

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This witness set is deterministic for all 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 random_prime62(u64 seed) {
    // splitmix64 stream over the seed until a prime lands in [2^61, 2^62).
    u64 x = seed;
    for (;;) {
        x += 0x9e3779b97f4a7c15ull;
        u64 z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        u64 cand = (z | (1ull << 61) | 1ull) & ((1ull << 62) - 1);
        if (is_prime_u64(cand)) return cand;
    }
}

void crt_combine(Int& x, Int& m, u64 residue, u64 p) {
    if (m == 1) {
        x = Int(residue);
        m = Int(p);
        return;
    }
    Int pz(p);
    Int minv;
    if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::runtime_error("crt_combine: moduli not coprime");
    Int diff = (Int(residue) - x % pz) % pz;
    if (diff < 0) diff += pz;
    Int t = (diff * minv) % pz;
    x += m * t;
    m *= pz;
}

bool rational_reconstruct(const Int& x, const Int& m, Rat& out) {
    // Wang's algorithm: extended Euclid until remainder < sqrt(m/2).
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return false;
    if (mpz_cmpabs(t1.get_mpz_t(), bound.get_mpz_t()) > 0) return false;
    Int num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;
    out = Rat(num) / Rat(den);
    out.canonicalize();
    return true;
}

int rank_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
    int rank = 0;
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        u64 lead = rows[r][c] % p;
        u64 inv = powmod_u64(lead, p - 2, p);
        for (std::size_t j = c; j < cols; ++j) rows[r][j] = mulmod_u64(rows[r][j] % p, inv, p);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            u64 f = rows[i][c] % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                u64 sub = mulmod_u64(f, rows[r][j], p);
                rows[i][j] = (rows[i][j] % p + p - sub) % p;
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace mmv
