#include "mmv/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "mmv/symfunc.hpp"

namespace mmv {

using json = nlohmann::json;

PackedMono pack_monomial(const Monomial& m, int n, int k) {
    if (n + k > 16) throw std::runtime_error("packed monomials support at most 16 variables");
    PackedMono p = 0;
    for (int i = 0; i < n + k; ++i) {
        int e = m[static_cast<std::size_t>(i)];
        if (e < 0 || e > 15) throw std::runtime_error("exponent out of packed range");
        p |= static_cast<PackedMono>(e) << (4 * i);
    }
    return p;
}

Monomial unpack_monomial(PackedMono p, int n, int k) {
    Monomial m(static_cast<std::size_t>(n + k), 0);
    for (int i = 0; i < n + k; ++i) m[static_cast<std::size_t>(i)] = static_cast<int>((p >> (4 * i)) & 0xf);
    return m;
}

MonomialBasis monomial_basis(int n, int k, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial_basis: negative degree");
    MonomialBasis b;
    b.n = n;
    b.k = k;
    b.degree = degree;
    Monomial cur(static_cast<std::size_t>(n + k), 0);
    // Lexicographically ascending over (c_1..c_n, d_1..d_k).
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n + k) {
            if (remaining == 0) b.monos.push_back(pack_monomial(cur, n, k));
            return;
        }
        int w = slot < n ? slot + 1 : 1;
        if (slot == n + k - 1) {
            if (remaining % w == 0 && remaining / w <= 15) {
                cur[static_cast<std::size_t>(slot)] = remaining / w;
                b.monos.push_back(pack_monomial(cur, n, k));
                cur[static_cast<std::size_t>(slot)] = 0;
            }
            return;
        }
        for (int e = 0; e * w <= remaining && e <= 15; ++e) {
            cur[static_cast<std::size_t>(slot)] = e;
            self(self, slot + 1, remaining - e * w);
        }
        cur[static_cast<std::size_t>(slot)] = 0;
    };
    rec(rec, 0, degree);
    b.index.reserve(b.monos.size() * 2);
    for (std::uint32_t i = 0; i < b.monos.size(); ++i) b.index.emplace(b.monos[i], i);
    return b;
}

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// ---------------------------------------------------------------- orbits --

// Action of a column permutation on the d-part of a packed monomial.
PackedMono permute_packed(PackedMono m, const std::vector<int>& image, int n, int k) {
    PackedMono out = m & ((n == 16) ? ~PackedMono(0) : ((PackedMono(1) << (4 * n)) - 1));
    for (int j = 0; j < k; ++j) {
        PackedMono e = (m >> (4 * (n + j))) & 0xf;
        out |= e << (4 * (n + image[static_cast<std::size_t>(j)]));
    }
    return out;
}

struct OrbitData {
    std::vector<std::uint32_t> orbit_of;     // basis index -> orbit id
    std::vector<std::uint32_t> rep_of;       // orbit id -> basis index of representative
    std::vector<std::uint32_t> orbit_size;   // orbit id -> cardinality
    std::size_t count = 0;
};

OrbitData compute_orbits(const MonomialBasis& basis, const std::vector<std::vector<int>>& auts) {
    OrbitData od;
    od.orbit_of.assign(basis.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < basis.size(); ++i) {
        if (od.orbit_of[i] != UINT32_MAX) continue;
        std::uint32_t id = static_cast<std::uint32_t>(od.count++);
        od.rep_of.push_back(i);
        std::uint32_t size = 0;
        std::vector<std::uint32_t> stack{i};
        od.orbit_of[i] = id;
        ++size;
        while (!stack.empty()) {
            std::uint32_t cur = stack.back();
            stack.pop_back();
            for (const auto& sigma : auts) {
                PackedMono img = permute_packed(basis.monos[cur], sigma, basis.n, basis.k);
                std::uint32_t j = basis.index.at(img);
                if (od.orbit_of[j] == UINT32_MAX) {
                    od.orbit_of[j] = id;
                    stack.push_back(j);
                    ++size;
                }
            }
        }
        od.orbit_size.push_back(size);
    }
    return od;
}

// Canonical form of a test configuration: relabel axes by first occurrence.
std::vector<int> relabel_axes(const std::vector<int>& a) {
    std::vector<int> out(a.size(), 0);
    std::vector<int> map(a.size() + 1, 0);
    int next = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (map[static_cast<std::size_t>(a[i])] == 0) map[static_cast<std::size_t>(a[i])] = ++next;
        out[i] = map[static_cast<std::size_t>(a[i])];
    }
    return out;
}

std::vector<int> canonical_test_form(const std::vector<int>& a, const std::vector<std::vector<int>>& auts) {
    std::vector<int> best = relabel_axes(a);
    for (const auto& sigma : auts) {
        std::vector<int> moved(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) moved[static_cast<std::size_t>(sigma[i])] = a[i];
        std::vector<int> cand = relabel_axes(moved);
        if (cand < best) best = cand;
    }
    return best;
}

// ------------------------------------------------- restriction expansion --

// Small polynomial over the packed target ring (t_1..t_n, z...).
using PackedPoly = std::vector<std::pair<PackedMono, std::int64_t>>;

PackedPoly packed_mul(const PackedPoly& a, const PackedPoly& b) {
    std::unordered_map<PackedMono, std::int64_t> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) acc[ma + mb] += ca * cb;
    PackedPoly out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end());
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
}

// Expansion tables for φ_D images: for every c-part appearing in the basis,
// the polynomial Π e_i(t_1..t_n)^{a_i} over the packed target ring.
struct RestrictionTables {
    int n = 0, k = 0;
    std::vector<int> axes;      // assignment, 0 = zero column
    std::vector<int> zslot;     // per column, slot of its z variable (or -1)
    int target_vars = 0;
    std::unordered_map<PackedMono, PackedPoly> epack;  // c-part -> expansion
};

RestrictionTables build_restriction_tables(const MonomialBasis& basis, const TestConfiguration& d,
                                           int n, int k) {
    RestrictionTables rt;
    rt.n = n;
    rt.k = k;
    rt.axes = d.assignment;
    rt.zslot.assign(static_cast<std::size_t>(k), -1);
    int next = n;
    for (int j = 0; j < k; ++j)
        if (d.assignment[static_cast<std::size_t>(j)] == 0) rt.zslot[static_cast<std::size_t>(j)] = next++;
    rt.target_vars = next;
    if (rt.target_vars > 16) throw std::runtime_error("restriction target exceeds packed range");

    // Elementary symmetric polynomials e_i(t_1..t_n), packed.
    std::vector<PackedPoly> e(static_cast<std::size_t>(n + 1));
    e[0] = {{0, 1}};
    for (int i = 1; i <= n; ++i) {
        PackedPoly ei;
        std::vector<int> idx(static_cast<std::size_t>(i));
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == i) {
                PackedMono m = 0;
                for (int t : idx) m += PackedMono(1) << (4 * t);
                ei.push_back({m, 1});
                return;
            }
            for (int t = start; t < n; ++t) {
                idx[static_cast<std::size_t>(pos)] = t;
                self(self, pos + 1, t + 1);
            }
        };
        rec(rec, 0, 0);
        std::sort(ei.begin(), ei.end());
        e[static_cast<std::size_t>(i)] = std::move(ei);
    }

    PackedMono cmask = (n == 16) ? ~PackedMono(0) : ((PackedMono(1) << (4 * n)) - 1);
    for (PackedMono mono : basis.monos) {
        PackedMono cpart = mono & cmask;
        if (rt.epack.count(cpart)) continue;
        PackedPoly prod = {{0, 1}};
        for (int i = 1; i <= n; ++i) {
            int a = static_cast<int>((cpart >> (4 * (i - 1))) & 0xf);
            for (int rep = 0; rep < a; ++rep) prod = packed_mul(prod, e[static_cast<std::size_t>(i)]);
        }
        rt.epack.emplace(cpart, std::move(prod));
    }
    return rt;
}

// Monomial's image translation: the t/z offsets contributed by the d-part.
PackedMono dpart_shift(const RestrictionTables& rt, PackedMono mono) {
    PackedMono shift = 0;
    for (int j = 0; j < rt.k; ++j) {
        PackedMono ej = (mono >> (4 * (rt.n + j))) & 0xf;
        if (!ej) continue;
        int a = rt.axes[static_cast<std::size_t>(j)];
        int slot = a > 0 ? a - 1 : rt.zslot[static_cast<std::size_t>(j)];
        shift += ej << (4 * slot);
    }
    return shift;
}

std::vector<SparseRow> kernel_rows(const MonomialBasis& basis, const TestConfiguration& d,
                                   const std::vector<std::uint32_t>* orbit_of) {
    RestrictionTables rt = build_restriction_tables(basis, d, basis.n, basis.k);
    PackedMono cmask = (basis.n == 16) ? ~PackedMono(0) : ((PackedMono(1) << (4 * basis.n)) - 1);
    std::unordered_map<PackedMono, SparseRow> rows;
    rows.reserve(basis.size());
    for (std::uint32_t i = 0; i < basis.size(); ++i) {
        PackedMono mono = basis.monos[i];
        PackedMono shift = dpart_shift(rt, mono);
        std::uint32_t col = orbit_of ? (*orbit_of)[i] : i;
        for (const auto& [tm, coef] : rt.epack.at(mono & cmask)) rows[tm + shift].push_back({col, coef});
    }
    std::vector<PackedMono> keys;
    keys.reserve(rows.size());
    for (const auto& [key, row] : rows) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    std::vector<SparseRow> out;
    out.reserve(keys.size());
    for (PackedMono key : keys) {
        SparseRow row = std::move(rows[key]);
        std::sort(row.begin(), row.end());
        SparseRow merged;
        for (const auto& [col, coef] : row) {
            if (!merged.empty() && merged.back().first == col)
                merged.back().second += coef;
            else
                merged.push_back({col, coef});
        }
        std::erase_if(merged, [](const auto& t) { return t.second == 0; });
        if (!merged.empty()) out.push_back(std::move(merged));
    }
    return out;
}

// ------------------------------------------------------------- echelon ----

struct Echelon {
    explicit Echelon(u64 prime, std::uint32_t ncols) : field(prime), ncols_(ncols), pivot_of_col_(ncols, -1) {}

    PrimeField field;
    std::uint32_t ncols_;
    std::vector<std::vector<u64>> rows_;  // normalized, leading entry = 1
    std::vector<std::uint32_t> pivot_cols_;
    std::vector<int> pivot_of_col_;
    std::vector<u64> scratch_;

    int rank() const { return static_cast<int>(rows_.size()); }

    bool insert(const SparseRow& row) {
        scratch_.assign(ncols_, 0);
        for (const auto& [col, coef] : row)
            scratch_[col] = field.add(scratch_[col], field.from_int64(coef));
        return insert_scratch();
    }

    bool insert_scratch() {
        for (std::uint32_t c = 0; c < ncols_; ++c) {
            u64 v = scratch_[c];
            if (v == 0) continue;
            int pr = pivot_of_col_[c];
            if (pr >= 0) {
                const std::vector<u64>& r = rows_[static_cast<std::size_t>(pr)];
                for (std::uint32_t j = c; j < ncols_; ++j)
                    if (r[j]) scratch_[j] = field.sub(scratch_[j], field.mul(v, r[j]));
                continue;
            }
            u64 inv = field.inv(v);
            std::vector<u64> stored(ncols_, 0);
            for (std::uint32_t j = c; j < ncols_; ++j)
                if (scratch_[j]) stored[j] = field.mul(scratch_[j], inv);
            pivot_of_col_[c] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(stored));
            pivot_cols_.push_back(c);
            return true;
        }
        return false;
    }

    // Back-eliminate so each pivot column is zero in every other row.
    void reduce_fully() {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return pivot_cols_[a] > pivot_cols_[b]; });
        for (std::size_t oi : order) {
            std::uint32_t c = pivot_cols_[oi];
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (r == oi) continue;
                u64 v = rows_[r][c];
                if (!v) continue;
                for (std::uint32_t j = c; j < ncols_; ++j)
                    if (rows_[oi][j]) rows_[r][j] = field.sub(rows_[r][j], field.mul(v, rows_[oi][j]));
            }
        }
    }

    std::vector<std::uint32_t> free_columns() const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < ncols_; ++c)
            if (pivot_of_col_[c] < 0) out.push_back(c);
        return out;
    }

    // After reduce_fully: nullspace vector with 1 at the given free column
    // (plain residues, not Montgomery).
    std::vector<u64> null_vector(std::uint32_t free_col) const {
        std::vector<u64> x(ncols_, 0);
        x[free_col] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            u64 v = rows_[r][free_col];
            if (v) x[pivot_cols_[r]] = field.from_mont(field.neg(v));
        }
        return x;
    }
};

// -------------------------------------------------------------- sources ---

struct RowSource {
    enum class Kind { Width, Zero, Kernel } kind;
    int test_index = -1;  // for Kernel
    std::string label;
};

// ----------------------------------------------------------- checkpoint ---

std::string base64_encode(const unsigned char* data, std::size_t len) {
    static const char* tbl = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((len + 2) / 3 * 4);
    for (std::size_t i = 0; i < len; i += 3) {
        unsigned v = data[i] << 16;
        if (i + 1 < len) v |= data[i + 1] << 8;
        if (i + 2 < len) v |= data[i + 2];
        out.push_back(tbl[(v >> 18) & 63]);
        out.push_back(tbl[(v >> 12) & 63]);
        out.push_back(i + 1 < len ? tbl[(v >> 6) & 63] : '=');
        out.push_back(i + 2 < len ? tbl[v & 63] : '=');
    }
    return out;
}

std::vector<unsigned char> base64_decode(const std::string& s) {
    auto val = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    std::vector<unsigned char> out;
    int buf = 0, bits = 0;
    for (char c : s) {
        int v = val(c);
        if (v < 0) continue;
        buf = (buf << 6) | v;
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<unsigned char>((buf >> bits) & 0xff));
        }
    }
    return out;
}

std::string encode_row(const std::vector<u64>& row) {
    std::vector<unsigned char> bytes(row.size() * 8);
    for (std::size_t i = 0; i < row.size(); ++i)
        for (int b = 0; b < 8; ++b) bytes[i * 8 + static_cast<std::size_t>(b)] =
            static_cast<unsigned char>((row[i] >> (8 * b)) & 0xff);
    return base64_encode(bytes.data(), bytes.size());
}

std::vector<u64> decode_row(const std::string& s, std::size_t ncols) {
    std::vector<unsigned char> bytes = base64_decode(s);
    if (bytes.size() != ncols * 8) throw std::runtime_error("corrupt checkpoint row");
    std::vector<u64> row(ncols, 0);
    for (std::size_t i = 0; i < ncols; ++i)
        for (int b = 0; b < 8; ++b) row[i] |= static_cast<u64>(bytes[i * 8 + static_cast<std::size_t>(b)]) << (8 * b);
    return row;
}

u64 fnv1a(const std::string& s) {
    u64 h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::vector<TestConfiguration> generate_rank_excluded_tests(const Configuration& c,
                                                            std::size_t enumeration_budget,
                                                            std::size_t max_tests,
                                                            bool mod_automorphisms) {
    int k = c.k();
    int m_max = std::min(c.spanning_rank(), c.n());
    std::vector<std::vector<int>> auts;
    if (mod_automorphisms) auts = c.automorphisms();

    std::vector<TestConfiguration> found;
    std::vector<std::vector<int>> seen_forms;
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    std::size_t enumerated = 0;
    bool out_of_budget = false;

    auto rec = [&](auto&& self, int col, int max_used) -> void {
        if (out_of_budget) return;
        if (col == k) {
            ++enumerated;
            if (enumerated > enumeration_budget) {
                out_of_budget = true;
                return;
            }
            if (max_used == 0) return;
            TestConfiguration d;
            d.assignment = cur;
            d.justification = TestConfiguration::Justification::RankExcluded;
            if (!is_rank_excluded(d, c)) return;
            std::vector<int> form =
                mod_automorphisms ? canonical_test_form(cur, auts) : relabel_axes(cur);
            if (std::find(seen_forms.begin(), seen_forms.end(), form) != seen_forms.end()) return;
            seen_forms.push_back(form);
            found.push_back(std::move(d));
            return;
        }
        for (int v = 0; v <= std::min(max_used + 1, m_max); ++v) {
            cur[static_cast<std::size_t>(col)] = v;
            self(self, col + 1, std::max(max_used, v));
        }
        cur[static_cast<std::size_t>(col)] = 0;
    };
    rec(rec, 0, 0);

    std::stable_sort(found.begin(), found.end(), [](const TestConfiguration& a, const TestConfiguration& b) {
        auto nz = [](const TestConfiguration& t) {
            return std::count_if(t.assignment.begin(), t.assignment.end(), [](int v) { return v != 0; });
        };
        auto na = nz(a), nb = nz(b);
        if (na != nb) return na < nb;
        return a.assignment < b.assignment;
    });
    if (found.size() > max_tests) found.resize(max_tests);
    return found;
}

namespace {

struct ModularPhaseResult {
    std::vector<u64> primes;
    std::vector<Echelon> echelons;
    RowCounts rows;
    bool halted = false;
    std::size_t sources_done = 0;
};

}  // namespace

bool restriction_annihilates(const Configuration& c, const TestConfiguration& d,
                             const GradedPolynomial& cls) {
    int n = c.n(), k = c.k();
    if (cls.is_zero()) return true;
    int zeros = static_cast<int>(std::count(d.assignment.begin(), d.assignment.end(), 0));
    if (n + k > 16 || n + zeros > 16) {
        // Rare fallback outside the packed range.
        return apply(restriction_map(d, n, k), cls).is_zero();
    }
    if (!cls.is_homogeneous()) return apply(restriction_map(d, n, k), cls).is_zero();
    MonomialBasis basis = monomial_basis(n, k, cls.degree());
    RestrictionTables rt = build_restriction_tables(basis, d, n, k);
    PackedMono cmask = (PackedMono(1) << (4 * n)) - 1;
    std::unordered_map<PackedMono, Rat> acc;
    for (const auto& [mono, coef] : cls.terms()) {
        PackedMono packed = pack_monomial(mono, n, k);
        PackedMono shift = dpart_shift(rt, packed);
        for (const auto& [tm, ec] : rt.epack.at(packed & cmask)) acc[tm + shift] += coef * Rat(ec);
    }
    for (const auto& [key, v] : acc)
        if (v != 0) return false;
    return true;
}

SolveResult solve_class(const Configuration& c, std::vector<TestConfiguration> tests,
                        const std::vector<KnownCount>& known, const SolveOptions& opts) {
    SolveResult res;
    const int n = c.n(), k = c.k();
    const int codim = c.codimension();
    const VariableSet vs(n, k);

    if (codim == 0) {
        res.dimension = 1;
        res.normalized_class = GradedPolynomial::constant(vs, 1);
        return res;
    }

    // Validate supplied tests; rank justifications are re-checked.
    for (const auto& t : tests) {
        if (static_cast<int>(t.assignment.size()) != k)
            throw std::invalid_argument("test configuration length mismatch");
        if (t.justification == TestConfiguration::Justification::RankExcluded && !is_rank_excluded(t, c))
            throw std::invalid_argument("test configuration " + t.display() +
                                        " is tagged rank-excluded but is not");
    }
    for (const auto& kc : known) {
        if (static_cast<int>(kc.q.size()) != k) throw std::invalid_argument("known count: q length mismatch");
        int total = 0;
        for (int qi : kc.q) total += qi;
        if (total != codim) throw std::invalid_argument("known count: degree mismatch");
        if (kc.count < 0) throw std::invalid_argument("known count: negative count");
    }

    if (opts.auto_tests) {
        auto extra = generate_rank_excluded_tests(c, opts.auto_enumeration_budget, opts.max_auto_tests,
                                                  opts.symmetry);
        for (auto& t : extra) {
            bool dup = std::any_of(tests.begin(), tests.end(), [&](const TestConfiguration& u) {
                return u.assignment == t.assignment;
            });
            if (!dup) tests.push_back(std::move(t));
        }
    }

    MonomialBasis basis = monomial_basis(n, k, codim);
    const std::uint32_t raw_cols = static_cast<std::uint32_t>(basis.size());

    // Symmetry reduction to the Aut(C)-invariant subspace.
    std::vector<std::vector<int>> auts;
    OrbitData orbits;
    bool use_orbits = false;
    if (opts.symmetry) {
        auts = c.automorphisms();
        if (auts.size() > 1) {
            orbits = compute_orbits(basis, auts);
            use_orbits = true;
            // One test per Aut-orbit carries the same invariant constraints.
            std::vector<TestConfiguration> reduced;
            std::vector<std::vector<int>> forms;
            for (auto& t : tests) {
                std::vector<int> form = canonical_test_form(t.assignment, auts);
                if (std::find(forms.begin(), forms.end(), form) != forms.end()) continue;
                forms.push_back(form);
                reduced.push_back(std::move(t));
            }
            tests = std::move(reduced);
        }
    }
    res.symmetry_reduced = use_orbits;
    res.tests_used = tests;
    const std::uint32_t ncols = use_orbits ? static_cast<std::uint32_t>(orbits.count) : raw_cols;
    auto col_of_index = [&](std::uint32_t i) { return use_orbits ? orbits.orbit_of[i] : i; };

    // Constraint sources in deterministic order.
    std::vector<RowSource> sources;
    if (opts.use_width) sources.push_back({RowSource::Kind::Width, -1, "width"});
    if (opts.use_enumerative) sources.push_back({RowSource::Kind::Zero, -1, "zero"});
    for (int i = 0; i < static_cast<int>(tests.size()); ++i)
        sources.push_back({RowSource::Kind::Kernel, i, "kernel(" + tests[static_cast<std::size_t>(i)].display() + ")"});

    const int s_rank = c.spanning_rank();
    auto width_rows = [&]() {
        std::vector<SparseRow> rows;
        int bound = k - s_rank;
        for (std::uint32_t i = 0; i < raw_cols; ++i) {
            PackedMono m = basis.monos[i];
            bool pure_c = true;
            int w = 0;
            for (int v = 0; v < n; ++v) w += static_cast<int>((m >> (4 * v)) & 0xf);
            for (int v = n; v < n + k; ++v)
                if ((m >> (4 * v)) & 0xf) pure_c = false;
            if (pure_c && w > bound) rows.push_back({{col_of_index(i), 1}});
        }
        return rows;
    };
    auto zero_rows = [&]() {
        std::vector<SparseRow> rows;
        std::vector<bool> done(ncols, false);
        for (std::uint32_t i = 0; i < raw_cols; ++i) {
            PackedMono m = basis.monos[i];
            bool pure_d = true;
            for (int v = 0; v < n; ++v)
                if ((m >> (4 * v)) & 0xf) pure_d = false;
            if (!pure_d) continue;
            std::uint32_t col = col_of_index(i);
            if (done[col]) continue;
            std::vector<int> q(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) q[static_cast<std::size_t>(j)] = static_cast<int>((m >> (4 * (n + j))) & 0xf);
            if (c.forced_zero(q)) {
                rows.push_back({{col, 1}});
                done[col] = true;
            }
        }
        return rows;
    };

    auto rows_for_source = [&](const RowSource& src) -> std::vector<SparseRow> {
        switch (src.kind) {
            case RowSource::Kind::Width: {
                auto r = width_rows();
                res.rows.width = r.size();
                return r;
            }
            case RowSource::Kind::Zero: {
                auto r = zero_rows();
                res.rows.zero = r.size();
                return r;
            }
            case RowSource::Kind::Kernel:
            default: {
                auto r = kernel_rows(basis, tests[static_cast<std::size_t>(src.test_index)],
                                     use_orbits ? &orbits.orbit_of : nullptr);
                res.rows.kernel += r.size();
                return r;
            }
        }
    };

    // Input fingerprint guards checkpoint resumption.
    std::string fp_text = c.name() + "|" + std::to_string(n) + "," + std::to_string(k) + "," +
                          std::to_string(codim) + "|cols=" + std::to_string(ncols) + "|";
    for (const auto& t : tests) fp_text += t.display() + ";";
    fp_text += "|w" + std::to_string(opts.use_width) + "e" + std::to_string(opts.use_enumerative) +
               "s" + std::to_string(use_orbits) + "p" + std::to_string(opts.prime_count) + "seed" +
               std::to_string(opts.prime_seed);
    const u64 fingerprint = fnv1a(fp_text);

    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<u64> primes;
        u64 seed = opts.prime_seed + static_cast<u64>(attempt) * 0x9100;
        while (static_cast<int>(primes.size()) < std::max(2, opts.prime_count)) {
            u64 p = random_prime62(seed + primes.size() * 7919);
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
        }
        std::vector<Echelon> ech;
        for (u64 p : primes) ech.emplace_back(p, ncols);

        std::size_t first_source = 0;
        // Resume from a checkpoint when one matches.
        if (!opts.checkpoint_path.empty() && attempt == 0) {
            std::ifstream in(opts.checkpoint_path);
            if (in) {
                json ck = json::parse(in, nullptr, false);
                if (!ck.is_discarded() && ck.value("fingerprint", std::string()) == std::to_string(fingerprint)) {
                    std::vector<u64> ck_primes;
                    for (const auto& ps : ck.at("primes")) ck_primes.push_back(std::stoull(ps.get<std::string>()));
                    if (ck_primes == primes) {
                        first_source = ck.at("next_source").get<std::size_t>();
                        const auto& states = ck.at("echelons");
                        for (std::size_t e = 0; e < ech.size(); ++e) {
                            const auto& st = states.at(e);
                            for (const auto& enc : st.at("rows")) {
                                std::vector<u64> row = decode_row(enc.get<std::string>(), ncols);
                                ech[e].rows_.push_back(std::move(row));
                            }
                            for (const auto& pc : st.at("pivot_cols")) {
                                std::uint32_t col = pc.get<std::uint32_t>();
                                ech[e].pivot_of_col_[col] = static_cast<int>(ech[e].pivot_cols_.size());
                                ech[e].pivot_cols_.push_back(col);
                            }
                        }
                        auto counts = ck.at("row_counts");
                        res.rows.kernel = counts.at("kernel").get<std::size_t>();
                        res.rows.zero = counts.at("zero").get<std::size_t>();
                        res.rows.width = counts.at("width").get<std::size_t>();
                    }
                }
            }
        }

        auto write_checkpoint = [&](std::size_t next_source) {
            if (opts.checkpoint_path.empty()) return;
            json ck;
            ck["fingerprint"] = std::to_string(fingerprint);
            json jp = json::array();
            for (u64 p : primes) jp.push_back(std::to_string(p));
            ck["primes"] = jp;
            ck["next_source"] = next_source;
            ck["row_counts"] = {{"kernel", res.rows.kernel}, {"zero", res.rows.zero}, {"width", res.rows.width}};
            json je = json::array();
            for (const auto& e : ech) {
                json st;
                st["pivot_cols"] = e.pivot_cols_;
                json rows = json::array();
                for (const auto& row : e.rows_) rows.push_back(encode_row(row));
                st["rows"] = std::move(rows);
                je.push_back(std::move(st));
            }
            ck["echelons"] = std::move(je);
            std::ofstream out(opts.checkpoint_path);
            out << ck.dump();
        };

        bool have_norm = !known.empty();
        std::size_t src_idx = first_source;
        for (; src_idx < sources.size(); ++src_idx) {
            if (opts.halt_after_sources >= 0 &&
                static_cast<int>(src_idx - first_source) >= opts.halt_after_sources) {
                write_checkpoint(src_idx);
                res.halted_at_checkpoint = true;
                res.dimension = static_cast<int>(ncols) - ech[0].rank();
                return res;
            }
            std::vector<SparseRow> rows = rows_for_source(sources[src_idx]);
            // All echelons consume the same stream; run them in parallel.
            unsigned hw = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
            if (hw > 1 && ech.size() > 1) {
                std::vector<std::future<void>> futs;
                for (auto& e : ech)
                    futs.push_back(std::async(std::launch::async, [&e, &rows]() {
                        for (const auto& row : rows) e.insert(row);
                    }));
                for (auto& f : futs) f.get();
            } else {
                for (auto& e : ech)
                    for (const auto& row : rows) e.insert(row);
            }
            write_checkpoint(src_idx + 1);
            // Once the space is a line (and normalizable), further kernel
            // sources only re-verify; exact verification covers them anyway.
            if (have_norm && static_cast<int>(ncols) - ech[0].rank() == 1 &&
                src_idx + 1 < sources.size() && sources[src_idx + 1].kind == RowSource::Kind::Kernel) {
                bool all_agree = std::all_of(ech.begin(), ech.end(), [&](const Echelon& e) {
                    return static_cast<int>(ncols) - e.rank() == 1;
                });
                if (all_agree) {
                    ++src_idx;
                    break;
                }
            }
        }

        // Rank agreement across primes.
        int corank = static_cast<int>(ncols) - ech[0].rank();
        bool agree = std::all_of(ech.begin(), ech.end(), [&](const Echelon& e) {
            return static_cast<int>(ncols) - e.rank() == corank;
        });
        if (!agree) continue;  // unlucky prime; retry with a fresh batch

        res.dimension = corank;
        res.rows.known = known.size();

        if (corank == 0) {
            res.inconsistent = true;
            res.diagnosis = "no nonzero polynomial satisfies the homogeneous constraints; "
                            "an exclusion assertion or count is wrong";
            return res;
        }

        for (auto& e : ech) e.reduce_fully();

        if (corank == 1) {
            if (!have_norm) {
                res.diagnosis = "solution space is one-dimensional but no normalization count was supplied";
                return res;
            }
            // Normalization value (-1)^codim * N at the q-monomial's column.
            const KnownCount& kc0 = known.front();
            Monomial qm(static_cast<std::size_t>(n + k), 0);
            for (int j = 0; j < k; ++j) qm[static_cast<std::size_t>(n + j)] = kc0.q[static_cast<std::size_t>(j)];
            std::uint32_t qcol = col_of_index(basis.index.at(pack_monomial(qm, n, k)));
            Int norm_value = (codim % 2 == 0 ? kc0.count : -kc0.count);

            bool bad_prime = false;
            std::vector<std::vector<u64>> scaled;
            for (auto& e : ech) {
                std::uint32_t f = e.free_columns().at(0);
                std::vector<u64> x = e.null_vector(f);
                if (x[qcol] == 0) {
                    bad_prime = true;
                    break;
                }
                // scale so x[qcol] == norm_value  (plain residues)
                u64 cur = e.field.to_mont(x[qcol]);
                u64 target = e.field.from_int(norm_value);
                u64 fac = e.field.mul(target, e.field.inv(cur));
                for (auto& v : x) v = e.field.from_mont(e.field.mul(e.field.to_mont(v), fac));
                scaled.push_back(std::move(x));
            }
            if (bad_prime) {
                if (attempt < 2) continue;
                res.inconsistent = true;
                res.diagnosis = "normalization coefficient vanishes on the solution line (known count " +
                                kc0.reason + ")";
                return res;
            }

            // CRT + rational reconstruction per column.
            GradedPolynomial cls = GradedPolynomial::zero(vs);
            bool ok = true;
            std::vector<Rat> col_value(ncols);
            for (std::uint32_t col = 0; col < ncols && ok; ++col) {
                Int x = 0, m = 1;
                for (std::size_t e = 0; e < ech.size(); ++e) crt_combine(x, m, scaled[e][col], primes[e]);
                Rat val;
                if (!rational_reconstruct(x, m, val)) {
                    ok = false;
                    break;
                }
                col_value[col] = val;
            }
            if (!ok) {
                if (attempt < 2) continue;
                res.inconsistent = true;
                res.diagnosis = "rational reconstruction failed; add primes";
                return res;
            }
            for (std::uint32_t i = 0; i < raw_cols; ++i) {
                const Rat& v = col_value[col_of_index(i)];
                if (v != 0) cls.add_term(unpack_monomial(basis.monos[i], n, k), v);
            }

            // Exact verification of every constraint family.
            for (const auto& src : sources) {
                if (src.kind == RowSource::Kind::Width) {
                    int bound = k - s_rank;
                    for (const auto& [mono, coef] : cls.terms()) {
                        bool pure_c = true;
                        int w = 0;
                        for (int v = 0; v < n; ++v) w += mono[static_cast<std::size_t>(v)];
                        for (int v = n; v < n + k; ++v)
                            if (mono[static_cast<std::size_t>(v)]) pure_c = false;
                        if (pure_c && w > bound) {
                            res.inconsistent = true;
                            res.diagnosis = "width constraint violated by reconstructed class";
                            return res;
                        }
                    }
                } else if (src.kind == RowSource::Kind::Zero) {
                    for (const auto& [mono, coef] : cls.terms()) {
                        bool pure_d = true;
                        for (int v = 0; v < n; ++v)
                            if (mono[static_cast<std::size_t>(v)]) pure_d = false;
                        if (!pure_d) continue;
                        std::vector<int> q(mono.begin() + n, mono.end());
                        if (c.forced_zero(q)) {
                            res.inconsistent = true;
                            res.diagnosis = "forced-zero coefficient is nonzero in reconstructed class";
                            return res;
                        }
                    }
                } else {
                    const TestConfiguration& t = tests[static_cast<std::size_t>(src.test_index)];
                    if (!restriction_annihilates(c, t, cls)) {
                        res.inconsistent = true;
                        res.diagnosis = "kernel constraint violated: " + src.label;
                        return res;
                    }
                }
            }
            for (const auto& kc : known) {
                Monomial qm2(static_cast<std::size_t>(n + k), 0);
                for (int j = 0; j < k; ++j) qm2[static_cast<std::size_t>(n + j)] = kc.q[static_cast<std::size_t>(j)];
                Int expect = (codim % 2 == 0 ? kc.count : -kc.count);
                if (cls.coefficient_of(qm2) != Rat(expect)) {
                    res.inconsistent = true;
                    res.diagnosis = "known count row violated: " + kc.reason;
                    return res;
                }
            }
            if (!cls.has_integer_coefficients()) {
                res.inconsistent = true;
                res.diagnosis = "reconstructed class has non-integer coefficients";
                return res;
            }
            res.normalized_class = std::move(cls);
            return res;
        }

        // corank > 1: reconstruct the canonical nullspace basis when feasible.
        bool same_pivots = true;
        for (std::size_t e = 1; e < ech.size(); ++e)
            if (ech[e].pivot_cols_ != ech[0].pivot_cols_) same_pivots = false;
        if (!same_pivots) continue;

        std::vector<std::uint32_t> free_cols = ech[0].free_columns();
        if (corank <= 16) {
            for (std::uint32_t f : free_cols) {
                std::vector<Rat> vals(ncols);
                bool ok = true;
                std::vector<std::vector<u64>> per_prime;
                for (auto& e : ech) per_prime.push_back(e.null_vector(f));
                for (std::uint32_t col = 0; col < ncols && ok; ++col) {
                    Int x = 0, m = 1;
                    for (std::size_t e = 0; e < ech.size(); ++e) crt_combine(x, m, per_prime[e][col], primes[e]);
                    Rat val;
                    if (!rational_reconstruct(x, m, val)) ok = false;
                    else vals[col] = val;
                }
                if (!ok) break;
                GradedPolynomial b = GradedPolynomial::zero(vs);
                for (std::uint32_t i = 0; i < raw_cols; ++i) {
                    const Rat& v = vals[col_of_index(i)];
                    if (v != 0) b.add_term(unpack_monomial(basis.monos[i], n, k), v);
                }
                res.residual_basis.push_back(std::move(b));
            }
        }
        // Pure-d coefficient slots not pinned down by the constraints.
        for (std::uint32_t i = 0; i < raw_cols; ++i) {
            PackedMono m = basis.monos[i];
            bool pure_d = true;
            for (int v = 0; v < n; ++v)
                if ((m >> (4 * v)) & 0xf) pure_d = false;
            if (!pure_d) continue;
            std::uint32_t col = col_of_index(i);
            bool undetermined = false;
            for (const auto& b : res.residual_basis)
                if (b.coefficient_of(unpack_monomial(m, n, k)) != 0) undetermined = true;
            if (!res.residual_basis.empty() && !undetermined) continue;
            if (res.residual_basis.empty()) {
                // Fall back to free-column membership.
                undetermined = std::find(free_cols.begin(), free_cols.end(), col) != free_cols.end();
            }
            if (undetermined) {
                std::vector<int> q(static_cast<std::size_t>(k));
                for (int j = 0; j < k; ++j) q[static_cast<std::size_t>(j)] = static_cast<int>((m >> (4 * (n + j))) & 0xf);
                res.undetermined_pure_d.push_back(std::move(q));
            }
        }
        return res;
    }

    throw std::runtime_error("solve_class: modular phase failed to stabilize across prime batches");
}

}  // namespace mmv
