#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "zappl/basis1d.hpp"
#include "zappl/csv.hpp"

using namespace zappl;

namespace {

const BasisFamily kMono{BasisKind::Monomial, -1.0, 1.0};
const BasisFamily kCheb{BasisKind::Chebyshev1, -1.0, 1.0};

Zappl1D monomial_example() {
    // monomials {1, x, x^2} on points [0, 1, -1]
    PointSequence seq{{0.0, 1.0, -1.0}, PointGenerator::UserSupplied};
    return build_zappl(kMono, seq, 3);
}

}  // namespace

TEST_CASE("leja points: seed is the sequence for n=1") {
    const auto seq = make_leja_points(kMono, 1, 0.0);
    REQUIRE(seq.points.size() == 1);
    CHECK(seq.points[0] == 0.0);
}

TEST_CASE("leja points: endpoint maximizers with smallest-value tie-break") {
    // brute force over the candidate construction: |x - 0| is maximized at
    // both endpoints, tie goes to -1; then |x| * |x + 1| peaks at x = 1
    const auto seq = make_leja_points(kMono, 3, 0.0);
    REQUIRE(seq.points.size() == 3);
    CHECK(seq.points[0] == 0.0);
    CHECK(seq.points[1] == -1.0);
    CHECK(seq.points[2] == 1.0);
}

TEST_CASE("leja points are deterministic and distinct") {
    const auto a = make_leja_points(kCheb, 12, 0.0);
    const auto b = make_leja_points(kCheb, 12, 0.0);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i] == b.points[i]);
    for (size_t i = 0; i < a.points.size(); ++i)
        for (size_t j = i + 1; j < a.points.size(); ++j) CHECK(a.points[i] != a.points[j]);
}

TEST_CASE("leja points error paths") {
    CHECK_THROWS(make_leja_points(kMono, 20000, 0.0));       // insufficient candidates
    CHECK_THROWS(make_leja_points(kMono, 3, 2.0));           // seed outside domain
}

TEST_CASE("build_zappl: hand-solved monomial example") {
    const Zappl1D z = monomial_example();

    // phi~_3 = x^2 - x, so A rows (1), (0,1), (0,-1,1)
    CHECK(z.A.at(0, 0) == doctest::Approx(1.0));
    CHECK(z.A.at(1, 0) == doctest::Approx(0.0));
    CHECK(z.A.at(1, 1) == doctest::Approx(1.0));
    CHECK(z.A.at(2, 0) == doctest::Approx(0.0));
    CHECK(z.A.at(2, 1) == doctest::Approx(-1.0));
    CHECK(z.A.at(2, 2) == doctest::Approx(1.0));

    // B rows = evaluations at 0, 1, -1
    CHECK(z.B.at(0, 0) == doctest::Approx(1.0));
    CHECK(z.B.at(1, 0) == doctest::Approx(1.0));
    CHECK(z.B.at(1, 1) == doctest::Approx(1.0));
    CHECK(z.B.at(2, 0) == doctest::Approx(1.0));
    CHECK(z.B.at(2, 1) == doctest::Approx(-1.0));
    CHECK(z.B.at(2, 2) == doctest::Approx(2.0));

    CHECK(z.Binv.at(0, 0) == doctest::Approx(1.0));
    CHECK(z.Binv.at(1, 0) == doctest::Approx(-1.0));
    CHECK(z.Binv.at(1, 1) == doctest::Approx(1.0));
    CHECK(z.Binv.at(2, 0) == doctest::Approx(-1.0));
    CHECK(z.Binv.at(2, 1) == doctest::Approx(0.5));
    CHECK(z.Binv.at(2, 2) == doctest::Approx(0.5));
}

TEST_CASE("eval_zappl on the monomial example") {
    const Zappl1D z = monomial_example();
    CHECK(z.eval_zappl(3, 2.0) == doctest::Approx(2.0));  // x^2 - x at 2
    CHECK(z.eval_zappl(1, 0.77) == doctest::Approx(1.0));
    CHECK(z.eval_zappl(3, 1.0) == doctest::Approx(0.0));  // vanishes at earlier point
    CHECK_THROWS(z.eval_zappl(0, 0.0));
    CHECK_THROWS(z.eval_zappl(4, 0.0));
}

TEST_CASE("lagrange-type functions are cardinal") {
    const Zappl1D z = monomial_example();
    for (int a = 1; a <= 3; ++a)
        for (int ap = 1; ap <= 3; ++ap)
            CHECK(z.lagrange(a, z.points[ap - 1]) == doctest::Approx(a == ap ? 1.0 : 0.0));
    CHECK(z.lagrange(3, 0.5) == doctest::Approx(-0.125));  // 0.5*(0.25 - 0.5)
    CHECK_THROWS(z.lagrange(4, 0.0));
}

TEST_CASE("degenerate point/basis pairing is rejected") {
    PointSequence dup{{0.0, 0.0, 1.0}, PointGenerator::UserSupplied};
    CHECK_THROWS_WITH_AS(build_zappl(kMono, dup, 3),
                         doctest::Contains("degenerate point/basis pairing"), std::runtime_error);
}

TEST_CASE("zappl property and inverse hold for both families") {
    for (const BasisFamily& fam : {kMono, kCheb}) {
        const int n = 9;
        const Zappl1D z = build_zappl(fam, make_leja_points(fam, n, 0.0), n);

        double amax = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) amax = std::max(amax, std::abs(z.A.at(i, j)));

        for (int i = 1; i <= n; ++i)
            for (int a = 1; a < i; ++a)
                CHECK(std::abs(z.eval_zappl(i, z.points[a - 1])) <= 1e-10 * amax);

        // Binv * B = I, scaled elementwise
        double bmax = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) bmax = std::max(bmax, std::abs(z.B.at(i, j)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int m = 0; m < n; ++m) acc += z.Binv.get(i, m) * z.B.get(m, j);
                CHECK(std::abs(acc - (i == j ? 1.0 : 0.0)) <= 1e-12 * std::max(1.0, bmax));
            }
    }
}

TEST_CASE("interpolation on leading points reproduces anything in the span") {
    std::mt19937_64 rng(11u);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (const BasisFamily& fam : {kMono, kCheb}) {
        const int n = 8;
        const Zappl1D z = build_zappl(fam, make_leja_points(fam, n, 0.0), n);
        for (int m = 1; m <= n; ++m) {
            std::vector<double> coeff(m);
            for (double& c : coeff) c = unif(rng);
            auto target = [&](double x) {
                double s = 0.0;
                for (int j = 1; j <= m; ++j) s += coeff[j - 1] * fam.eval(j, x);
                return s;
            };
            for (int t = 0; t < 20; ++t) {
                const double x = unif(rng);
                double interp = 0.0;
                for (int a = 1; a <= m; ++a)
                    interp += target(z.points[a - 1]) * z.lagrange_leading(m, a, x);
                CHECK(interp == doctest::Approx(target(x)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("point sequence CSV round-trips losslessly") {
    const auto seq = make_leja_points(kCheb, 10, 0.25);
    std::stringstream ss;
    write_points_csv(ss, seq.points);
    const auto back = read_points_csv(ss);
    REQUIRE(back.size() == seq.points.size());
    for (size_t i = 0; i < back.size(); ++i) CHECK(back[i] == seq.points[i]);
}
