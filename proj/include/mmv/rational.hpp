// Exact integer/rational arithmetic used throughout. GMP does the heavy
// lifting; this header only adds the few helpers the rest of the code needs.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mmv {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

// "3", "-2", "1/3" — the canonical wire format for rationals.
inline std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_integer(const Rat& q) {
    if (!is_integer(q)) throw std::runtime_error("expected integer, got " + rat_to_string(q));
    return q.get_num();
}

inline std::int64_t to_int64(const Int& z) {
    if (!z.fits_slong_p()) throw std::runtime_error("integer out of int64 range");
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace mmv
