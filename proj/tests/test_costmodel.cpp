#include <doctest.h>

#include <sstream>

#include "zappl/basis1d.hpp"
#include "zappl/costmodel.hpp"
#include "zappl/index_set.hpp"

using namespace zappl;

namespace {

std::vector<Zappl1D> cheb_axes(int dim, int n) {
    const BasisFamily fam{BasisKind::Chebyshev1, -1.0, 1.0};
    return std::vector<Zappl1D>(dim, build_zappl(fam, make_leja_points(fam, n, 0.0), n));
}

// independent enumeration oracle for the separate-grids count
int128 separate_by_enumeration(int dim, int budget, int expo) {
    int128 total = 0;
    for (const auto& lvl : enumerate_simplex(dim, budget)) {
        int128 p = 1;
        for (int l : lvl)
            for (int e = 0; e < expo; ++e) p *= l;
        total += p;
    }
    return total;
}

}  // namespace

TEST_CASE("sequential count closed form") {
    CHECK(n_mult_sequential(2, 4) == 70);
    CHECK(n_mult_sequential(1, 0) == 1);
    for (int d = 1; d <= 8; ++d) CHECK(n_mult_sequential(d, 0) == d);
    CHECK(n_mult_sequential(1, 3) == 10);
}

TEST_CASE("nested sums equal the closed form, exhaustive") {
    for (int d = 1; d <= 6; ++d)
        for (int b = 0; b <= 14; ++b)
            CHECK(n_mult_sequential_nested(d, b) == n_mult_sequential(d, b));
}

TEST_CASE("separate-grids counts") {
    CHECK(n_mult_separate(2, 1, 2) == 9);    // levels (1,1),(2,1),(1,2): 1+4+4
    CHECK(n_mult_separate(2, 1, 3) == 17);   // 1+8+8
    CHECK(n_mult_separate(1, 2, 2) == 14);   // 1+4+9
    CHECK_THROWS(n_mult_separate(2, 1, 4));

    for (int d = 1; d <= 5; ++d)
        for (int b = 0; b <= 8; ++b)
            for (int e : {2, 3})
                CHECK(n_mult_separate(d, b, e) == separate_by_enumeration(d, b, e));
}

TEST_CASE("instrumented count matches the formula") {
    CHECK(count_verify(2, 4, cheb_axes(2, 5)));
    CHECK(count_verify(1, 3, cheb_axes(1, 4)));
    CHECK(count_verify(5, 0, cheb_axes(5, 1)));
}

TEST_CASE("bounds against the full-grid cost") {
    for (int d = 1; d <= 6; ++d)
        for (int b = 0; b <= 9; ++b) {
            const int128 seq = n_mult_sequential(d, b);
            const int128 nsparse = binom128(d + b, d);
            CHECK(seq <= int128(d) * (b + 1) * nsparse);
            CHECK(nsparse <= n_full(d, b));
        }
}

TEST_CASE("cost sweep rows and figure properties") {
    const std::vector<int> blist{4, 9, 14};
    const auto rows = cost_sweep(1, 20, blist);
    REQUIRE(rows.size() == 60);

    for (const auto& r : rows) {
        REQUIRE(!r.overflow);
        if (r.dim == 2 && r.budget == 4) {
            CHECK(r.n_sparse == 15);
            CHECK(r.n_mult_seq == 70);
        }
        CHECK(r.n_sep_total == r.n_sep_mvp + r.n_sep_inv);
    }

    // ratio monotone in D at fixed b = 9 and b = 14, exceeding 100
    for (int b : {9, 14}) {
        double prev = 0.0;
        double best = 0.0;
        for (const auto& r : rows) {
            if (r.budget != b) continue;
            const double ratio =
                static_cast<double>(r.n_sep_total) / static_cast<double>(r.n_mult_seq);
            CHECK(ratio > prev);
            prev = ratio;
            best = std::max(best, ratio);
        }
        CHECK(best > 100.0);
    }
}

TEST_CASE("int128 helpers") {
    CHECK(int128_to_string(0) == "0");
    CHECK(int128_to_string(binom128(34, 14)) == "1391975640");
    // 15^20
    CHECK(int128_to_string(n_full(20, 14)) == "332525673007965087890625");
    CHECK_THROWS_AS(binom128(250, 125), std::overflow_error);
}

TEST_CASE("cost CSV has a header and one row per pair") {
    const std::vector<int> blist{4};
    const auto rows = cost_sweep(1, 3, blist);
    const std::string csv = cost_csv(rows);
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    CHECK(line.find("N_sep_total") != std::string::npos);
    int data_lines = 0;
    while (std::getline(ss, line))
        if (!line.empty()) ++data_lines;
    CHECK(data_lines == 3);
}
