#pragma once

#include <span>
#include <string>
#include <vector>

namespace zappl {

enum class BasisKind { Monomial, Chebyshev1 };

BasisKind basis_kind_from_name(const std::string& name);
std::string basis_kind_name(BasisKind kind);

/// An importance-ordered family of 1-D basis functions on [lo, hi].
/// Function j (1-based) belongs to level j; j = 1 is the constant.
struct BasisFamily {
    BasisKind kind = BasisKind::Chebyshev1;
    double lo = -1.0;
    double hi = 1.0;

    [[nodiscard]] double eval(int j, double x) const;
    [[nodiscard]] bool contains(double x) const { return x >= lo && x <= hi; }
    [[nodiscard]] double midpoint() const { return 0.5 * (lo + hi); }
};

enum class PointGenerator { Leja, UserSupplied };

/// Nested 1-D interpolation points: the first m entries are the level-m set.
struct PointSequence {
    std::vector<double> points;
    PointGenerator generator = PointGenerator::UserSupplied;
};

/// Packed row-major lower-triangular matrix, n(n+1)/2 doubles.
class LowerTri {
public:
    LowerTri() = default;
    explicit LowerTri(int n) : n_(n), v_(static_cast<size_t>(n) * (n + 1) / 2, 0.0) {}

    [[nodiscard]] int size() const { return n_; }
    double& at(int i, int j) { return v_[idx(i, j)]; }
    [[nodiscard]] double at(int i, int j) const { return v_[idx(i, j)]; }
    /// Read access valid for any (i, j) pair; zero above the diagonal.
    [[nodiscard]] double get(int i, int j) const { return j > i ? 0.0 : v_[idx(i, j)]; }

private:
    [[nodiscard]] static size_t idx(int i, int j) {
        return static_cast<size_t>(i) * (i + 1) / 2 + j;
    }
    int n_ = 0;
    std::vector<double> v_;
};

/// A nested 1-D basis transformed so that function i vanishes at points
/// 1..i-1 (the hierarchical "zero at points in previous levels" property).
///
/// A holds the change of basis from the raw family (unit diagonal),
/// B the collocation values B(a,i) = phi~_i(r_a), and Binv its inverse.
/// Immutable after construction; concurrent reads are safe.
struct Zappl1D {
    BasisFamily family;
    std::vector<double> points;
    LowerTri A;
    LowerTri B;
    LowerTri Binv;

    [[nodiscard]] int size() const { return static_cast<int>(points.size()); }

    /// phi~_i(x) = sum_{j<=i} A(i,j) phi_j(x), indices 1-based.
    [[nodiscard]] double eval_zappl(int i, double x) const;

    /// Cardinal function on the leading m points, centred at point a (1-based):
    /// G_a^{(m)}(x) = sum_{j=a..m} Binv(j,a) phi~_j(x); G_a(r_a') = delta_{a,a'}.
    [[nodiscard]] double lagrange_leading(int m, int a, double x) const;

    /// Cardinal function on all n points.
    [[nodiscard]] double lagrange(int a, double x) const { return lagrange_leading(size(), a, x); }
};

/// Classic (unweighted) Leja sequence: r_1 = seed, r_m maximizes
/// prod_{j<m} |x - r_j| over a fixed candidate grid of 10001
/// Chebyshev-distributed points; ties break toward the smaller candidate.
/// Deterministic for fixed inputs.
PointSequence make_leja_points(const BasisFamily& family, int n, double seed_point);

/// Build the hierarchical basis for the first n points of the sequence.
/// Throws if the point/basis pairing is degenerate (near-singular collocation).
Zappl1D build_zappl(const BasisFamily& family, const PointSequence& points, int n);

}  // namespace zappl
