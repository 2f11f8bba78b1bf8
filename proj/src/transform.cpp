#include "zappl/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace zappl {

namespace {

void validate(std::span<const double> data, std::span<const Zappl1D> axes,
              const SimplexIndexSet& set) {
    if (static_cast<int>(axes.size()) != set.dim())
        throw std::invalid_argument("axis count must equal dimension");
    for (const auto& z : axes)
        if (z.size() < set.budget() + 1)
            throw std::invalid_argument("axis too short: need at least b+1 basis functions");
    if (data.size() != set.size()) throw std::invalid_argument("vector length mismatch");
}

// out[i] = sum_{a<=i} M(i,a) in[a] along a pencil, in place. Descending i
// reads only not-yet-overwritten entries. i+1 multiplications per entry.
void apply_lower(const LowerTri& M, std::span<double> data, std::span<const std::uint64_t> off,
                 int len, std::uint64_t* mults) {
    for (int i = len - 1; i >= 0; --i) {
        double acc = 0.0;
        for (int a = 0; a <= i; ++a) acc += M.at(i, a) * data[off[a]];
        data[off[i]] = acc;
    }
    if (mults) *mults += static_cast<std::uint64_t>(len) * (len + 1) / 2;
}

// out[j] = sum_{i>=j} M(i,j) in[i] (transpose application), ascending j.
void apply_lower_transpose(const LowerTri& M, std::span<double> data,
                           std::span<const std::uint64_t> off, int len) {
    for (int j = 0; j < len; ++j) {
        double acc = 0.0;
        for (int i = j; i < len; ++i) acc += M.at(i, j) * data[off[i]];
        data[off[j]] = acc;
    }
}

template <typename Kernel>
void sweep_pass_serial(std::span<double> data, const SimplexIndexSet& set, int k,
                       Kernel&& kernel) {
    const int dim = set.dim();
    const int b = set.budget();
    std::vector<int> idx(dim);
    std::vector<std::uint64_t> off(b + 1);
    for (std::uint64_t o = 0; o < set.size(); ++o) {
        set.unrank(o, idx);
        if (idx[k] != 1) continue;
        int rest = 0;
        for (int kk = 0; kk < dim; ++kk) rest += idx[kk] - 1;
        const int len = b - rest + 1;
        for (int m = 0; m < len; ++m) {
            idx[k] = m + 1;
            off[m] = set.rank(idx);
        }
        kernel(data, std::span<const std::uint64_t>(off.data(), len), len);
    }
}

template <typename Kernel>
void sweep_pass_parallel(std::span<double> data, const SimplexIndexSet& set, int k,
                         Kernel&& kernel) {
    const int dim = set.dim();
    const int b = set.budget();
    // pencil bases: members with i_k == 1
    std::vector<std::uint64_t> bases;
    {
        std::vector<int> idx(dim);
        for (std::uint64_t o = 0; o < set.size(); ++o) {
            set.unrank(o, idx);
            if (idx[k] == 1) bases.push_back(o);
        }
    }
    const std::int64_t nb = static_cast<std::int64_t>(bases.size());
#pragma omp parallel
    {
        std::vector<int> idx(dim);
        std::vector<std::uint64_t> off(b + 1);
#pragma omp for schedule(static)
        for (std::int64_t p = 0; p < nb; ++p) {
            set.unrank(bases[p], idx);
            int rest = 0;
            for (int kk = 0; kk < dim; ++kk) rest += idx[kk] - 1;
            const int len = b - rest + 1;
            for (int m = 0; m < len; ++m) {
                idx[k] = m + 1;
                off[m] = set.rank(idx);
            }
            kernel(data, std::span<const std::uint64_t>(off.data(), len), len);
        }
    }
}

// Partial-pivot LU of an n x n row-major matrix; factor once, solve many.
class LuFactors {
public:
    LuFactors(std::vector<double> a, int n) : a_(std::move(a)), piv_(n), n_(n) {
        for (int col = 0; col < n_; ++col) {
            int p = col;
            double pmax = std::abs(at(col, col));
            for (int r = col + 1; r < n_; ++r)
                if (std::abs(at(r, col)) > pmax) {
                    pmax = std::abs(at(r, col));
                    p = r;
                }
            if (pmax == 0.0) throw std::runtime_error("singular matrix");
            piv_[col] = p;
            if (p != col)
                for (int j = 0; j < n_; ++j) std::swap(at(p, j), at(col, j));
            const double d = at(col, col);
            for (int r = col + 1; r < n_; ++r) {
                const double f = at(r, col) / d;
                at(r, col) = f;
                if (f == 0.0) continue;
                for (int j = col + 1; j < n_; ++j) at(r, j) -= f * at(col, j);
            }
        }
    }

    void solve(std::vector<double>& rhs) const {
        for (int col = 0; col < n_; ++col) {
            if (piv_[col] != col) std::swap(rhs[piv_[col]], rhs[col]);
            for (int r = col + 1; r < n_; ++r) rhs[r] -= at(r, col) * rhs[col];
        }
        for (int i = n_ - 1; i >= 0; --i) {
            double acc = rhs[i];
            for (int j = i + 1; j < n_; ++j) acc -= at(i, j) * rhs[j];
            rhs[i] = acc / at(i, i);
        }
    }

private:
    double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    [[nodiscard]] double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    std::vector<double> a_;
    std::vector<int> piv_;
    int n_;
};

void lu_solve(std::vector<double> A, std::vector<double>& rhs, int n) {
    LuFactors(std::move(A), n).solve(rhs);
}

std::vector<double> lu_invert(std::vector<double> A, int n) {
    const LuFactors lu(std::move(A), n);
    std::vector<double> inv(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> e(n);
    for (int c = 0; c < n; ++c) {
        std::fill(e.begin(), e.end(), 0.0);
        e[c] = 1.0;
        lu.solve(e);
        for (int r = 0; r < n; ++r) inv[static_cast<size_t>(r) * n + c] = e[r];
    }
    return inv;
}

LowerTri invert_unit_lower(const LowerTri& A) {
    const int n = A.size();
    LowerTri inv(n);
    for (int j = 0; j < n; ++j) {
        inv.at(j, j) = 1.0;
        for (int i = j + 1; i < n; ++i) {
            double acc = 0.0;
            for (int m = j; m < i; ++m) acc += A.at(i, m) * inv.at(m, j);
            inv.at(i, j) = -acc;
        }
    }
    return inv;
}

}  // namespace

std::vector<double> hierarchize(std::span<const double> values, std::span<const Zappl1D> axes,
                                const SimplexIndexSet& set, MultCounter* counter) {
    validate(values, axes, set);
    std::vector<double> data(values.begin(), values.end());
    std::uint64_t* mults = counter ? &counter->count : nullptr;
    for (int k = 0; k < set.dim(); ++k)
        sweep_pass_serial(data, set, k, [&](std::span<double> d, auto off, int len) {
            apply_lower(axes[k].Binv, d, off, len, mults);
        });
    return data;
}

std::vector<double> dehierarchize(std::span<const double> coeffs, std::span<const Zappl1D> axes,
                                  const SimplexIndexSet& set, MultCounter* counter) {
    validate(coeffs, axes, set);
    std::vector<double> data(coeffs.begin(), coeffs.end());
    std::uint64_t* mults = counter ? &counter->count : nullptr;
    for (int k = set.dim() - 1; k >= 0; --k)
        sweep_pass_serial(data, set, k, [&](std::span<double> d, auto off, int len) {
            apply_lower(axes[k].B, d, off, len, mults);
        });
    return data;
}

std::vector<double> hierarchize_parallel(std::span<const double> values,
                                         std::span<const Zappl1D> axes,
                                         const SimplexIndexSet& set) {
    validate(values, axes, set);
    std::vector<double> data(values.begin(), values.end());
    for (int k = 0; k < set.dim(); ++k)
        sweep_pass_parallel(data, set, k, [&](std::span<double> d, auto off, int len) {
            apply_lower(axes[k].Binv, d, off, len, nullptr);
        });
    return data;
}

std::vector<double> dehierarchize_parallel(std::span<const double> coeffs,
                                           std::span<const Zappl1D> axes,
                                           const SimplexIndexSet& set) {
    validate(coeffs, axes, set);
    std::vector<double> data(coeffs.begin(), coeffs.end());
    for (int k = set.dim() - 1; k >= 0; --k)
        sweep_pass_parallel(data, set, k, [&](std::span<double> d, auto off, int len) {
            apply_lower(axes[k].B, d, off, len, nullptr);
        });
    return data;
}

std::vector<double> hierarchize_full(std::span<const double> values,
                                     std::span<const Zappl1D> axes, int budget) {
    const int dim = static_cast<int>(axes.size());
    const int n = budget + 1;
    std::uint64_t nfull = 1;
    for (int k = 0; k < dim; ++k) {
        if (axes[k].size() < n)
            throw std::invalid_argument("axis too short: need at least b+1 basis functions");
        nfull *= static_cast<std::uint64_t>(n);
    }
    if (values.size() != nfull) throw std::invalid_argument("vector length mismatch");

    std::vector<double> data(values.begin(), values.end());
    std::vector<std::uint64_t> off(n);
    // last dimension fastest
    for (int k = 0; k < dim; ++k) {
        std::uint64_t stride = 1;
        for (int kk = k + 1; kk < dim; ++kk) stride *= static_cast<std::uint64_t>(n);
        const std::uint64_t nouter = nfull / (stride * n);
        for (std::uint64_t outer = 0; outer < nouter; ++outer)
            for (std::uint64_t inner = 0; inner < stride; ++inner) {
                for (int m = 0; m < n; ++m)
                    off[m] = (outer * n + m) * stride + inner;
                apply_lower(axes[k].Binv, data, off, n, nullptr);
            }
    }
    return data;
}

std::vector<double> dense_oracle(std::span<const double> values, std::span<const Zappl1D> axes,
                                 const SimplexIndexSet& set) {
    validate(values, axes, set);
    const std::uint64_t n64 = set.size();
    if (n64 > 20000) throw std::invalid_argument("dense oracle guard exceeded (N_sparse > 20000)");
    const int n = static_cast<int>(n64);
    const int dim = set.dim();

    std::vector<double> B(static_cast<size_t>(n) * n);
    std::vector<int> ia(dim), ii(dim);
    for (int a = 0; a < n; ++a) {
        set.unrank(a, ia);
        for (int i = 0; i < n; ++i) {
            set.unrank(i, ii);
            double prod = 1.0;
            for (int k = 0; k < dim; ++k)
                prod *= axes[k].eval_zappl(ii[k], axes[k].points[ia[k] - 1]);
            B[static_cast<size_t>(a) * n + i] = prod;
        }
    }
    std::vector<double> rhs(values.begin(), values.end());
    lu_solve(std::move(B), rhs, n);
    return rhs;
}

ChopCheck verify_chop_identity(std::span<const Zappl1D> axes, int dim, int budget) {
    if (static_cast<int>(axes.size()) != dim)
        throw std::invalid_argument("axis count must equal dimension");
    std::uint64_t nfull = 1;
    for (int k = 0; k < dim; ++k) {
        if (axes[k].size() < budget + 1)
            throw std::invalid_argument("axis too short: need at least b+1 basis functions");
        nfull *= static_cast<std::uint64_t>(budget + 1);
        if (nfull > 4096) throw std::invalid_argument("chop identity guard exceeded ((b+1)^D > 4096)");
    }

    SimplexIndexSet set(dim, budget);
    const int n = static_cast<int>(set.size());
    std::vector<int> ia(dim), ii(dim);

    // chop then invert: retained block of the Kronecker collocation matrix,
    // inverted densely; result oriented (i, a)
    std::vector<double> block(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        set.unrank(a, ia);
        for (int i = 0; i < n; ++i) {
            set.unrank(i, ii);
            double prod = 1.0;
            for (int k = 0; k < dim; ++k) prod *= axes[k].B.get(ia[k] - 1, ii[k] - 1);
            block[static_cast<size_t>(a) * n + i] = prod;
        }
    }
    std::vector<double> inv_of_block = lu_invert(std::move(block), n);

    // invert then chop: retained block of the Kronecker product of the
    // per-axis inverses
    ChopCheck out;
    double scale = 0.0;
    std::vector<double> block_of_inv(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        set.unrank(i, ii);
        for (int a = 0; a < n; ++a) {
            set.unrank(a, ia);
            double prod = 1.0;
            for (int k = 0; k < dim; ++k) prod *= axes[k].Binv.get(ii[k] - 1, ia[k] - 1);
            block_of_inv[static_cast<size_t>(i) * n + a] = prod;
            scale = std::max(scale, std::abs(prod));
        }
    }
    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            dev = std::max(dev, std::abs(inv_of_block[static_cast<size_t>(i) * n + a] -
                                         block_of_inv[static_cast<size_t>(i) * n + a]));
    out.max_deviation = dev / std::max(scale, 1.0);
    out.ok = out.max_deviation <= 1e-12;
    return out;
}

std::vector<double> to_raw_basis(std::span<const double> coeffs, std::span<const Zappl1D> axes,
                                 const SimplexIndexSet& set) {
    validate(coeffs, axes, set);
    std::vector<double> data(coeffs.begin(), coeffs.end());
    for (int k = 0; k < set.dim(); ++k)
        sweep_pass_serial(data, set, k, [&](std::span<double> d, auto off, int len) {
            apply_lower_transpose(axes[k].A, d, off, len);
        });
    return data;
}

std::vector<double> from_raw_basis(std::span<const double> raw, std::span<const Zappl1D> axes,
                                   const SimplexIndexSet& set) {
    validate(raw, axes, set);
    std::vector<double> data(raw.begin(), raw.end());
    for (int k = 0; k < set.dim(); ++k) {
        const LowerTri Ainv = invert_unit_lower(axes[k].A);
        sweep_pass_serial(data, set, k, [&](std::span<double> d, auto off, int len) {
            apply_lower_transpose(Ainv, d, off, len);
        });
    }
    return data;
}

}  // namespace zappl
