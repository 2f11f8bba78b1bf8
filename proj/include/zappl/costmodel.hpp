#pragma once

#include <span>
#include <string>
#include <vector>

#include "zappl/basis1d.hpp"

namespace zappl {

// 128-bit counts: the b=14 sweeps overflow 64 bits well before D=20.
using int128 = __int128;

std::string int128_to_string(int128 v);

/// C(n, k) exactly; throws std::overflow_error if it exceeds 128 bits.
int128 binom128(int n, int k);

/// Closed form for the sequential-sweep multiplication count:
/// D*(b/(D+1)+1)*C(D+b,D) = D*C(D+b+1,D+1), exact integer arithmetic.
int128 n_mult_sequential(int dim, int budget);

/// The same count by direct evaluation of the nested triangular sums
/// (iterated cumulative summation); independent route for testing.
int128 n_mult_sequential_nested(int dim, int budget);

/// Separate-grids cost term: sum over the level simplex of prod_k l_k^n,
/// n = 2 (matrix-vector products) or 3 (per-grid inversions). Computed by
/// dynamic programming over the level sum, O(D*b^2).
int128 n_mult_separate(int dim, int budget, int exponent);

/// (b+1)^D, overflow-checked.
int128 n_full(int dim, int budget);

struct CostRow {
    int dim = 0;
    int budget = 0;
    int128 n_sparse = 0;
    int128 n_full = 0;
    int128 n_mult_seq = 0;
    int128 n_sep_mvp = 0;
    int128 n_sep_inv = 0;
    int128 n_sep_total = 0;
    bool overflow = false;  // row left zeroed when set
};

/// One row per (D, b) pair, D = dim_min..dim_max crossed with b_list.
std::vector<CostRow> cost_sweep(int dim_min, int dim_max, std::span<const int> b_list);

/// CSV with a header row; counts in decimal, ratio as floating point.
std::string cost_csv(std::span<const CostRow> rows);

/// Runs the instrumented transform on arbitrary values and checks the
/// measured multiplication count against the closed form.
bool count_verify(int dim, int budget, std::span<const Zappl1D> axes,
                  std::string* detail = nullptr);

}  // namespace zappl
