// Assembles the linear constraints satisfied by the unknown equivariant
// class (restriction-kernel rows, enumerative zero rows, width rows and
// known-count normalizations) over the monomial basis of the graded piece,
// and solves the system exactly: dense echelon modulo several random 62-bit
// primes, Chinese remaindering, rational reconstruction, and exact
// re-verification of every constraint on the reconstructed class.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mmv/matroid.hpp"
#include "mmv/modular.hpp"
#include "mmv/polyring.hpp"
#include "mmv/restriction.hpp"

namespace mmv {

// Exponent vector packed 4 bits per variable, c_1..c_n then d_1..d_k.
// Valid while n + k <= 16 and every exponent <= 15.
using PackedMono = std::uint64_t;

PackedMono pack_monomial(const Monomial& m, int n, int k);
Monomial unpack_monomial(PackedMono p, int n, int k);

struct MonomialBasis {
    int n = 0, k = 0, degree = 0;
    std::vector<PackedMono> monos;  // canonical order
    std::unordered_map<PackedMono, std::uint32_t> index;

    std::size_t size() const { return monos.size(); }
};

// Every monomial in c_1..c_n, d_1..d_k of weighted degree exactly `degree`.
MonomialBasis monomial_basis(int n, int k, int degree);

struct KnownCount {
    std::vector<int> q;  // Σ q_i = codim
    Int count;           // enumerative count N >= 0
    std::string reason;
};

struct SolveOptions {
    bool use_width = true;
    bool use_enumerative = true;
    bool auto_tests = false;
    std::size_t auto_enumeration_budget = 60000;  // covers all block patterns for k <= 9
    std::size_t max_auto_tests = 48;
    bool symmetry = false;  // restrict to the Aut(C)-invariant subspace
    int threads = 0;        // 0 = hardware concurrency
    int prime_count = 2;
    u64 prime_seed = 0x6d6d76;
    std::string checkpoint_path;   // empty disables checkpointing
    int halt_after_sources = -1;   // testing hook: stop early, leaving a resumable checkpoint
    bool verbose = false;
};

struct RowCounts {
    std::size_t kernel = 0, zero = 0, width = 0, known = 0;
};

struct SolveResult {
    int dimension = -1;  // homogeneous solution dimension (of the invariant
                         // subspace when symmetry_reduced)
    bool symmetry_reduced = false;
    RowCounts rows;
    std::vector<TestConfiguration> tests_used;
    std::optional<GradedPolynomial> normalized_class;
    std::vector<GradedPolynomial> residual_basis;  // dimension > 1, if small
    std::vector<std::vector<int>> undetermined_pure_d;
    bool inconsistent = false;
    std::string diagnosis;
    bool halted_at_checkpoint = false;
};

// Enumerate block test configurations with at most min(s, n) axes, canonical
// up to axis relabeling, keeping the rank-excluded ones (optionally one per
// Aut(C)-orbit), ordered with fewer nonzero columns first.
std::vector<TestConfiguration> generate_rank_excluded_tests(const Configuration& c,
                                                            std::size_t enumeration_budget,
                                                            std::size_t max_tests,
                                                            bool mod_automorphisms);

SolveResult solve_class(const Configuration& c, std::vector<TestConfiguration> tests,
                        const std::vector<KnownCount>& known, const SolveOptions& opts);

// Exact image of `cls` under the restriction map of `d`; zero iff the kernel
// constraints of `d` hold. Fast packed path used by the verifier.
bool restriction_annihilates(const Configuration& c, const TestConfiguration& d,
                             const GradedPolynomial& cls);

}  // namespace mmv
