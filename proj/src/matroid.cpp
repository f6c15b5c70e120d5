#include "mmv/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mmv/modular.hpp"

namespace mmv {

std::vector<int> subset_members(Subset v) {
    std::vector<int> out;
    for (int i = 0; v; ++i, v >>= 1)
        if (v & 1) out.push_back(i);
    return out;
}

Subset subset_of(const std::vector<int>& columns_0based) {
    Subset v = 0;
    for (int c : columns_0based) v |= Subset(1) << c;
    return v;
}

Configuration::Configuration(int n, int k, std::vector<std::vector<Rat>> columns, std::string name,
                             std::optional<int> codim_override)
    : n_(n), k_(k), cols_(std::move(columns)), name_(std::move(name)), codim_override_(codim_override) {
    if (n < 1 || k < 1 || k > 31) throw std::invalid_argument("configuration size out of range");
    if (static_cast<int>(cols_.size()) != k) throw std::invalid_argument("column count mismatch");
    for (const auto& col : cols_)
        if (static_cast<int>(col.size()) != n) throw std::invalid_argument("column dimension mismatch");
}

Configuration::Configuration(const Configuration& o)
    : n_(o.n_), k_(o.k_), cols_(o.cols_), name_(o.name_), codim_override_(o.codim_override_) {
    std::lock_guard<std::mutex> lock(o.mu_);
    rank_memo_ = o.rank_memo_;
    codim_memo_ = o.codim_memo_;
    rank_table_ = o.rank_table_;
}

Configuration::Configuration(Configuration&& o) noexcept
    : n_(o.n_), k_(o.k_), cols_(std::move(o.cols_)), name_(std::move(o.name_)),
      codim_override_(o.codim_override_) {
    std::lock_guard<std::mutex> lock(o.mu_);
    rank_memo_ = std::move(o.rank_memo_);
    codim_memo_ = o.codim_memo_;
    rank_table_ = std::move(o.rank_table_);
}

Configuration& Configuration::operator=(const Configuration& o) {
    if (this == &o) return *this;
    Configuration copy(o);
    n_ = copy.n_;
    k_ = copy.k_;
    cols_ = std::move(copy.cols_);
    name_ = std::move(copy.name_);
    codim_override_ = copy.codim_override_;
    std::lock_guard<std::mutex> lock(mu_);
    rank_memo_ = std::move(copy.rank_memo_);
    codim_memo_ = copy.codim_memo_;
    rank_table_ = std::move(copy.rank_table_);
    return *this;
}

int Configuration::rank(Subset v) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rank_memo_.find(v);
        if (it != rank_memo_.end()) return it->second;
    }
    std::vector<int> members = subset_members(v);
    for (int c : members)
        if (c >= k_) throw std::out_of_range("column index out of range");
    // Exact elimination on the n x |V| submatrix.
    std::vector<std::vector<Rat>> m;
    for (int c : members) m.push_back(cols_[static_cast<std::size_t>(c)]);
    int rank = 0;
    std::size_t rows = static_cast<std::size_t>(n_);
    for (std::size_t r = 0; r < rows && rank < static_cast<int>(m.size()); ++r) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < m.size() && m[piv][r] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const auto& lead = m[static_cast<std::size_t>(rank)];
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < m.size(); ++i) {
            if (m[i][r] == 0) continue;
            Rat f = m[i][r] / lead[r];
            for (std::size_t j = r; j < rows; ++j) m[i][j] -= f * lead[j];
        }
        ++rank;
    }
    std::lock_guard<std::mutex> lock(mu_);
    rank_memo_[v] = rank;
    return rank;
}

int Configuration::rank(const std::vector<int>& columns_1based) const {
    Subset v = 0;
    for (int c : columns_1based) {
        if (c < 1 || c > k_) throw std::out_of_range("column index out of range");
        v |= Subset(1) << (c - 1);
    }
    return rank(v);
}

std::vector<Subset> Configuration::circuits(int max_size) const {
    if (max_size > n_ + 1) throw std::invalid_argument("circuits: max_size exceeds n+1");
    std::vector<Subset> out;
    Subset full = full_set();
    for (Subset v = 1; v <= full; ++v) {
        int sz = std::popcount(v);
        if (sz < 1 || sz > max_size) continue;
        if (rank(v) >= sz) continue;  // independent
        bool minimal = true;
        for (int c : subset_members(v)) {
            Subset w = v & ~(Subset(1) << c);
            if (rank(w) < std::popcount(w)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(v);
    }
    return out;
}

Subset Configuration::closure(Subset v) const {
    int r = rank(v);
    Subset out = v;
    for (int j = 0; j < k_; ++j) {
        Subset bit = Subset(1) << j;
        if (out & bit) continue;
        if (rank(v | bit) == r) out |= bit;
    }
    return out;
}

int Configuration::codimension() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (codim_memo_) return *codim_memo_;
    }
    int value = codim_override_ ? *codim_override_ : jacobian_codimension();
    std::lock_guard<std::mutex> lock(mu_);
    codim_memo_ = value;
    return value;
}

namespace {

// All minors of size s x s of an integer matrix have gradients given by
// cofactors; this returns the determinant of `m` with row `skip_r` and column
// `skip_c` removed, modulo p.
u64 complement_det_mod(const std::vector<std::vector<u64>>& m, std::size_t skip_r, std::size_t skip_c,
                       u64 p) {
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (i != skip_r) rs.push_back(i);
    for (std::size_t j = 0; j < m.size(); ++j)
        if (j != skip_c) cs.push_back(j);
    std::size_t s = rs.size();
    if (s == 0) return 1 % p;
    // Bareiss-free tiny determinant by Laplace expansion (s <= 3 in practice).
    std::vector<std::vector<u64>> a(s, std::vector<u64>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a[i][j] = m[rs[i]][cs[j]];
    std::vector<std::size_t> cols(s);
    for (std::size_t j = 0; j < s; ++j) cols[j] = j;
    u64 det = 0;
    std::vector<std::size_t> perm(s);
    for (std::size_t j = 0; j < s; ++j) perm[j] = j;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        u128 prod = 1;
        for (std::size_t i = 0; i < s; ++i) prod = (prod * a[i][perm[i]]) % p;
        u64 term = static_cast<u64>(prod);
        det = sign > 0 ? (det + term) % p : (det + p - term) % p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

void subsets_of_size(int universe, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < universe; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

int Configuration::jacobian_codimension() const {
    // The conditions cutting X_C near the realization are the (r+1)-minors of
    // the column submatrices of the dependent flats of rank r < n.
    std::vector<Subset> flats;
    std::vector<std::vector<int>> small;
    for (int s = 0; s <= std::min(n_ - 1, k_); ++s) subsets_of_size(k_, s, small);
    for (const auto& sub : small) {
        Subset f = closure(subset_of(sub));
        int r = rank(f);
        if (r >= n_) continue;
        if (std::popcount(f) <= r) continue;
        if (std::find(flats.begin(), flats.end(), f) == flats.end()) flats.push_back(f);
    }
    if (flats.empty()) return 0;

    // Integer realization: clear denominators per column (rescaling a column
    // does not change the variety).
    std::vector<std::vector<Int>> icols;
    for (const auto& col : cols_) {
        Int lcm = 1;
        for (const Rat& x : col) {
            Int den = x.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> c;
        for (const Rat& x : col) c.push_back(Int(x.get_num()) * (lcm / Int(x.get_den())));
        icols.push_back(std::move(c));
    }

    u64 seed = 0x5eed0000u;
    for (int attempt = 0; attempt < 5; ++attempt) {
        u64 p1 = random_prime62(seed + 2 * static_cast<u64>(attempt));
        u64 p2 = random_prime62(seed + 2 * static_cast<u64>(attempt) + 1);
        if (p1 == p2) continue;
        int r1 = -1, r2 = -1;
        for (u64 p : {p1, p2}) {
            std::vector<std::vector<u64>> jac;
            for (Subset f : flats) {
                std::vector<int> members = subset_members(f);
                int r = rank(f);
                int s = r + 1;
                std::vector<std::vector<int>> row_subs, col_subs;
                subsets_of_size(n_, s, row_subs);
                subsets_of_size(static_cast<int>(members.size()), s, col_subs);
                for (const auto& rs : row_subs) {
                    for (const auto& cs : col_subs) {
                        std::vector<std::vector<u64>> sub(static_cast<std::size_t>(s),
                                                          std::vector<u64>(static_cast<std::size_t>(s)));
                        for (int i = 0; i < s; ++i)
                            for (int j = 0; j < s; ++j) {
                                Int e = icols[static_cast<std::size_t>(members[static_cast<std::size_t>(cs[static_cast<std::size_t>(j)])])]
                                             [static_cast<std::size_t>(rs[static_cast<std::size_t>(i)])] % Int(p);
                                if (e < 0) e += Int(p);
                                sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e.get_ui();
                            }
                        std::vector<u64> grad(static_cast<std::size_t>(n_ * k_), 0);
                        bool nonzero = false;
                        for (int i = 0; i < s; ++i) {
                            for (int j = 0; j < s; ++j) {
                                u64 cof = complement_det_mod(sub, static_cast<std::size_t>(i),
                                                             static_cast<std::size_t>(j), p);
                                if ((i + j) % 2 == 1) cof = cof == 0 ? 0 : p - cof;
                                if (cof == 0) continue;
                                nonzero = true;
                                int row_idx = rs[static_cast<std::size_t>(i)];
                                int col_idx = members[static_cast<std::size_t>(cs[static_cast<std::size_t>(j)])];
                                grad[static_cast<std::size_t>(row_idx * k_ + col_idx)] = cof;
                            }
                        }
                        if (nonzero) jac.push_back(std::move(grad));
                    }
                }
            }
            int rk = rank_mod_p(std::move(jac), p);
            (p == p1 ? r1 : r2) = rk;
        }
        if (r1 == r2) return r1;
        seed += 0x1000;
    }
    throw std::runtime_error("codimension: modular ranks kept disagreeing");
}

const std::vector<int>& Configuration::rank_table() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (!rank_table_.empty()) return rank_table_;
    }
    if (k_ > 16) throw std::runtime_error("rank_table: k too large");
    std::vector<int> table(std::size_t(1) << k_);
    for (Subset v = 0; v < table.size(); ++v) table[v] = rank(v);
    std::lock_guard<std::mutex> lock(mu_);
    if (rank_table_.empty()) rank_table_ = std::move(table);
    return rank_table_;
}

bool Configuration::forced_zero(const std::vector<int>& q) const {
    if (static_cast<int>(q.size()) != k_) throw std::invalid_argument("forced_zero: q length mismatch");
    int total = 0;
    for (int qi : q) {
        if (qi < 0) throw std::invalid_argument("forced_zero: negative entry");
        total += qi;
    }
    if (total != codimension()) throw std::invalid_argument("forced_zero: degree mismatch");

    const std::vector<int>& ranks = rank_table();
    Subset full = full_set();
    for (Subset v = 1; v <= full && v != 0; ++v) {
        int r = ranks[v];
        bool all_fail = true;
        for (int rp = 1; rp <= r; ++rp) {
            long need = 0;
            for (int i : subset_members(v)) need += std::max(0, n_ - rp - q[static_cast<std::size_t>(i)]);
            if (need <= static_cast<long>(rp) * (n_ - rp)) {
                all_fail = false;
                break;
            }
        }
        if (all_fail) return true;
    }
    return false;
}

std::vector<std::vector<int>> Configuration::automorphisms() const {
    // Backtracking over column images, pruning with pair and triple ranks,
    // then confirming on every subset.
    std::vector<std::vector<int>> found;
    std::vector<int> image(static_cast<std::size_t>(k_), -1);
    std::vector<bool> used(static_cast<std::size_t>(k_), false);

    auto pair_rank = [&](int a, int b) { return rank((Subset(1) << a) | (Subset(1) << b)); };
    auto single_rank = [&](int a) { return rank(Subset(1) << a); };

    auto rec = [&](auto&& self, int i) -> void {
        if (i == k_) {
            Subset full = full_set();
            for (Subset v = 1; v <= full && v != 0; ++v) {
                Subset w = 0;
                for (int c : subset_members(v)) w |= Subset(1) << image[static_cast<std::size_t>(c)];
                if (rank(w) != rank(v)) return;
            }
            found.push_back(image);
            return;
        }
        for (int t = 0; t < k_; ++t) {
            if (used[static_cast<std::size_t>(t)]) continue;
            if (single_rank(t) != single_rank(i)) continue;
            bool ok = true;
            for (int a = 0; a < i && ok; ++a) {
                if (pair_rank(a, i) != pair_rank(image[static_cast<std::size_t>(a)], t)) ok = false;
                for (int b = a + 1; b < i && ok; ++b) {
                    Subset orig = (Subset(1) << a) | (Subset(1) << b) | (Subset(1) << i);
                    Subset img = (Subset(1) << image[static_cast<std::size_t>(a)]) |
                                 (Subset(1) << image[static_cast<std::size_t>(b)]) | (Subset(1) << t);
                    if (rank(orig) != rank(img)) ok = false;
                }
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(i)] = t;
            used[static_cast<std::size_t>(t)] = true;
            self(self, i + 1);
            used[static_cast<std::size_t>(t)] = false;
            image[static_cast<std::size_t>(i)] = -1;
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace mmv
