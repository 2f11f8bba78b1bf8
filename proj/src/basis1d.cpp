#include "zappl/basis1d.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace zappl {

BasisKind basis_kind_from_name(const std::string& name) {
    if (name == "monomial") return BasisKind::Monomial;
    if (name == "chebyshev" || name == "chebyshev-first-kind") return BasisKind::Chebyshev1;
    throw std::invalid_argument("unknown basis family: " + name);
}

std::string basis_kind_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::Monomial: return "monomial";
        case BasisKind::Chebyshev1: return "chebyshev";
    }
    std::abort();
}

double BasisFamily::eval(int j, double x) const {
    if (j < 1) throw std::out_of_range("basis function index must be >= 1");
    switch (kind) {
        case BasisKind::Monomial: {
            double p = 1.0;
            for (int m = 1; m < j; ++m) p *= x;
            return p;
        }
        case BasisKind::Chebyshev1: {
            // T_{j-1} on the affinely mapped domain
            const double t = (2.0 * x - lo - hi) / (hi - lo);
            if (j == 1) return 1.0;
            if (j == 2) return t;
            double tm2 = 1.0, tm1 = t, cur = t;
            for (int m = 3; m <= j; ++m) {
                cur = 2.0 * t * tm1 - tm2;
                tm2 = tm1;
                tm1 = cur;
            }
            return cur;
        }
    }
    std::abort();
}

namespace {

constexpr int kLejaCandidates = 10001;

std::vector<double> leja_candidate_grid(const BasisFamily& family) {
    // Chebyshev-distributed candidates, ascending
    std::vector<double> c(kLejaCandidates);
    const double mid = 0.5 * (family.lo + family.hi);
    const double half = 0.5 * (family.hi - family.lo);
    const int m = kLejaCandidates - 1;
    for (int i = 0; i <= m; ++i)
        c[i] = mid + half * std::cos(std::numbers::pi * static_cast<double>(m - i) / m);
    c.front() = family.lo;
    c.back() = family.hi;
    return c;
}

}  // namespace

PointSequence make_leja_points(const BasisFamily& family, int n, double seed_point) {
    if (n < 1) throw std::invalid_argument("point count must be >= 1");
    if (!family.contains(seed_point))
        throw std::invalid_argument("seed point outside basis domain");
    if (n > kLejaCandidates) throw std::runtime_error("insufficient candidates");

    const std::vector<double> cand = leja_candidate_grid(family);
    PointSequence seq;
    seq.generator = PointGenerator::Leja;
    seq.points.reserve(n);
    seq.points.push_back(seed_point);
    while (static_cast<int>(seq.points.size()) < n) {
        double best = 0.0;
        double best_x = 0.0;
        bool found = false;
        for (double x : cand) {
            double prod = 1.0;
            for (double r : seq.points) prod *= std::abs(x - r);
            if (prod > best) {  // strict: ties keep the smaller candidate
                best = prod;
                best_x = x;
                found = true;
            }
        }
        if (!found) throw std::runtime_error("insufficient candidates");
        seq.points.push_back(best_x);
    }
    return seq;
}

Zappl1D build_zappl(const BasisFamily& family, const PointSequence& points, int n) {
    if (n < 1) throw std::invalid_argument("basis size must be >= 1");
    if (n > static_cast<int>(points.points.size()))
        throw std::invalid_argument("requested size exceeds point sequence length");

    Zappl1D z;
    z.family = family;
    z.points.assign(points.points.begin(), points.points.begin() + n);
    z.A = LowerTri(n);
    z.B = LowerTri(n);
    z.Binv = LowerTri(n);

    // V(a,j) = phi_{j+1}(r_{a+1})
    std::vector<double> V(static_cast<size_t>(n) * n);
    double vmax = 0.0;
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < n; ++j) {
            double v = family.eval(j + 1, z.points[a]);
            V[static_cast<size_t>(a) * n + j] = v;
            vmax = std::max(vmax, std::abs(v));
        }
    const double pivot_tol = 1e-10 * vmax;

    // Row i of A: phi~_i = phi_i - sum_{j<i} c_j phi~_j with c from the
    // triangular collocation conditions phi~_i(r_a) = 0, a < i.
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < i; ++a) {
            double rhs = V[static_cast<size_t>(a) * n + i];
            for (int j = 0; j < a; ++j) rhs -= c[j] * z.B.at(a, j);
            if (std::abs(z.B.at(a, a)) < pivot_tol)
                throw std::runtime_error("degenerate point/basis pairing at level " +
                                         std::to_string(a + 1));
            c[a] = rhs / z.B.at(a, a);
        }
        z.A.at(i, i) = 1.0;
        for (int j = 0; j < i; ++j) {
            double acc = 0.0;
            for (int m = j; m < i; ++m) acc += c[m] * z.A.at(m, j);
            z.A.at(i, j) = -acc;
        }
        for (int a = i; a < n; ++a) {
            double acc = 0.0;
            for (int j = 0; j <= i; ++j) acc += z.A.at(i, j) * V[static_cast<size_t>(a) * n + j];
            z.B.at(a, i) = acc;
        }
        if (std::abs(z.B.at(i, i)) < pivot_tol)
            throw std::runtime_error("degenerate point/basis pairing at level " +
                                     std::to_string(i + 1));
    }

    // Binv by columnwise forward substitution
    for (int j = 0; j < n; ++j) {
        z.Binv.at(j, j) = 1.0 / z.B.at(j, j);
        for (int i = j + 1; i < n; ++i) {
            double acc = 0.0;
            for (int m = j; m < i; ++m) acc += z.B.at(i, m) * z.Binv.at(m, j);
            z.Binv.at(i, j) = -acc / z.B.at(i, i);
        }
    }
    return z;
}

double Zappl1D::eval_zappl(int i, double x) const {
    if (i < 1 || i > size()) throw std::out_of_range("zappl function index out of range");
    double acc = 0.0;
    for (int j = 1; j <= i; ++j) acc += A.at(i - 1, j - 1) * family.eval(j, x);
    return acc;
}

double Zappl1D::lagrange_leading(int m, int a, double x) const {
    if (m < 1 || m > size()) throw std::out_of_range("leading block size out of range");
    if (a < 1 || a > m) throw std::out_of_range("point index out of range");
    double acc = 0.0;
    for (int j = a; j <= m; ++j) acc += Binv.at(j - 1, a - 1) * eval_zappl(j, x);
    return acc;
}

}  // namespace zappl
