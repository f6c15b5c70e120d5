// Rational vector configurations and their matroid data: memoized rank
// oracle, circuits, spanning rank, the codimension of the associated matroid
// variety (Jacobian rank at the realization, computed modulo two agreeing
// random primes), and the vanishing test for enumerative queries.
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mmv/rational.hpp"

namespace mmv {

using Subset = std::uint32_t;  // bitmask over columns, k <= 31

class Configuration {
  public:
    Configuration(int n, int k, std::vector<std::vector<Rat>> columns, std::string name = "",
                  std::optional<int> codim_override = std::nullopt);
    Configuration(const Configuration& o);
    Configuration(Configuration&& o) noexcept;
    Configuration& operator=(const Configuration& o);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<Rat>>& columns() const { return cols_; }

    // Exact rank of the column submatrix indexed by the bitmask.
    int rank(Subset v) const;
    int rank(const std::vector<int>& columns_1based) const;

    // Minimal dependent subsets of size <= max_size (max_size <= n+1).
    std::vector<Subset> circuits(int max_size) const;

    int spanning_rank() const { return rank(full_set()); }

    // nk - dim X_C via the Jacobian of the vanishing minors at the
    // realization; honors codim_override when present.
    int codimension() const;

    // True iff the query q (Σq_i = codim) vanishes for rank reasons: some
    // I ⊆ [k] admits no span dimension r' in 1..r_C(I) with all generic
    // subspaces V_i (dim q_i+1) meeting a common r'-plane.
    bool forced_zero(const std::vector<int>& q) const;

    // Column permutations preserving the rank function (as 0-based images).
    std::vector<std::vector<int>> automorphisms() const;

    Subset full_set() const { return k_ == 32 ? ~Subset(0) : (Subset(1) << k_) - 1; }

    // Rank closure {j : r(V ∪ {j}) = r(V)}.
    Subset closure(Subset v) const;

    // Dense rank table over all 2^k subsets (k <= 16); built once, lock-free
    // to read afterwards.
    const std::vector<int>& rank_table() const;

  private:
    int jacobian_codimension() const;

    int n_ = 0, k_ = 0;
    std::vector<std::vector<Rat>> cols_;
    std::string name_;
    std::optional<int> codim_override_;

    mutable std::mutex mu_;
    mutable std::map<Subset, int> rank_memo_;
    mutable std::optional<int> codim_memo_;
    mutable std::vector<int> rank_table_;
};

std::vector<int> subset_members(Subset v);
Subset subset_of(const std::vector<int>& columns_0based);

}  // namespace mmv
