#include "zappl/costmodel.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "zappl/index_set.hpp"
#include "zappl/transform.hpp"

namespace zappl {

namespace {

using uint128 = unsigned __int128;
constexpr uint128 kMax128 = static_cast<uint128>(-1) >> 1;  // INT128_MAX

int128 checked_mul(int128 a, int128 b) {
    if (a < 0 || b < 0) throw std::invalid_argument("counts must be non-negative");
    if (a != 0 && static_cast<uint128>(b) > kMax128 / static_cast<uint128>(a))
        throw std::overflow_error("count overflow");
    return a * b;
}

int128 checked_add(int128 a, int128 b) {
    if (static_cast<uint128>(a) > kMax128 - static_cast<uint128>(b))
        throw std::overflow_error("count overflow");
    return a + b;
}

}  // namespace

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    uint128 u = neg ? static_cast<uint128>(-v) : static_cast<uint128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

int128 binom128(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    int128 c = 1;
    for (int j = 1; j <= k; ++j) {
        c = checked_mul(c, n - k + j);
        c /= j;  // exact: c is C(n-k+j, j) after the division
    }
    return c;
}

int128 n_mult_sequential(int dim, int budget) {
    if (dim < 1 || budget < 0) throw std::invalid_argument("need dim >= 1, budget >= 0");
    // D*(b/(D+1)+1)*C(D+b,D); integrality guaranteed, checked anyway
    const int128 via_binom = checked_mul(dim, binom128(dim + budget + 1, dim + 1));
    const int128 numer = checked_mul(checked_mul(dim, budget + dim + 1), binom128(dim + budget, dim));
    if (numer % (dim + 1) != 0 || numer / (dim + 1) != via_binom)
        throw std::logic_error("sequential count failed integrality check");
    return via_binom;
}

int128 n_mult_sequential_nested(int dim, int budget) {
    if (dim < 1 || budget < 0) throw std::invalid_argument("need dim >= 1, budget >= 0");
    // innermost sum over a_1 contributes 1 per term; then D further nested
    // sums (over i_1 and a_2..a_D), each a running prefix sum
    std::vector<int128> acc(budget + 1, 1);
    for (int pass = 0; pass < dim + 1; ++pass)
        for (int u = 1; u <= budget; ++u) acc[u] = checked_add(acc[u], acc[u - 1]);
    return checked_mul(dim, acc[budget]);
}

int128 n_mult_separate(int dim, int budget, int exponent) {
    if (dim < 1 || budget < 0) throw std::invalid_argument("need dim >= 1, budget >= 0");
    if (exponent != 2 && exponent != 3) throw std::invalid_argument("exponent must be 2 or 3");
    // T[s] = sum over level vectors of the first k dims with level sum s
    // of prod l^n
    std::vector<int128> T(budget + 1, 0);
    for (int s = 0; s <= budget; ++s) {
        int128 p = 1;
        for (int e = 0; e < exponent; ++e) p = checked_mul(p, s + 1);
        T[s] = p;
    }
    for (int k = 2; k <= dim; ++k) {
        std::vector<int128> next(budget + 1, 0);
        for (int s = 0; s <= budget; ++s)
            for (int t = 0; t <= s; ++t) {
                int128 p = 1;
                for (int e = 0; e < exponent; ++e) p = checked_mul(p, t + 1);
                next[s] = checked_add(next[s], checked_mul(p, T[s - t]));
            }
        T = std::move(next);
    }
    int128 total = 0;
    for (int s = 0; s <= budget; ++s) total = checked_add(total, T[s]);
    return total;
}

int128 n_full(int dim, int budget) {
    int128 p = 1;
    for (int k = 0; k < dim; ++k) p = checked_mul(p, budget + 1);
    return p;
}

std::vector<CostRow> cost_sweep(int dim_min, int dim_max, std::span<const int> b_list) {
    if (dim_min < 1 || dim_max < dim_min || b_list.empty())
        throw std::invalid_argument("empty sweep range");
    std::vector<CostRow> rows;
    for (int b : b_list)
        for (int d = dim_min; d <= dim_max; ++d) {
            CostRow row;
            row.dim = d;
            row.budget = b;
            try {
                row.n_sparse = binom128(d + b, d);
                row.n_full = n_full(d, b);
                row.n_mult_seq = n_mult_sequential(d, b);
                row.n_sep_mvp = n_mult_separate(d, b, 2);
                row.n_sep_inv = n_mult_separate(d, b, 3);
                row.n_sep_total = checked_add(row.n_sep_mvp, row.n_sep_inv);
            } catch (const std::overflow_error&) {
                row = CostRow{};
                row.dim = d;
                row.budget = b;
                row.overflow = true;
            }
            rows.push_back(row);
        }
    return rows;
}

std::string cost_csv(std::span<const CostRow> rows) {
    std::string out =
        "D,b,N_sparse,N_full,N_mult_seq,N_sep_mvp,N_sep_inv,N_sep_total,ratio_sep_over_seq,status\n";
    for (const CostRow& r : rows) {
        out += std::to_string(r.dim) + "," + std::to_string(r.budget) + ",";
        if (r.overflow) {
            out += ",,,,,,,overflow\n";
            continue;
        }
        out += int128_to_string(r.n_sparse) + "," + int128_to_string(r.n_full) + "," +
               int128_to_string(r.n_mult_seq) + "," + int128_to_string(r.n_sep_mvp) + "," +
               int128_to_string(r.n_sep_inv) + "," + int128_to_string(r.n_sep_total) + ",";
        const double ratio =
            static_cast<double>(r.n_sep_total) / static_cast<double>(r.n_mult_seq);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", ratio);
        out += std::string(buf) + ",ok\n";
    }
    return out;
}

bool count_verify(int dim, int budget, std::span<const Zappl1D> axes, std::string* detail) {
    SimplexIndexSet set(dim, budget);
    std::mt19937_64 rng(20240517u + static_cast<unsigned>(dim * 31 + budget));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> values(set.size());
    for (double& v : values) v = unif(rng);

    MultCounter counter;
    (void)hierarchize(values, axes, set, &counter);
    const int128 formula = n_mult_sequential(dim, budget);
    const bool ok = static_cast<int128>(counter.count) == formula;
    if (detail)
        *detail = "measured=" + std::to_string(counter.count) +
                  " formula=" + int128_to_string(formula);
    return ok;
}

}  // namespace zappl
