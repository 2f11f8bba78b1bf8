#include "zappl/index_set.hpp"

#include <limits>
#include <stdexcept>

namespace zappl {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("index set size overflow");
    return r;
}

}  // namespace

std::uint64_t SimplexIndexSet::count(int dim, int budget) {
    if (dim < 1 || budget < 0) throw std::invalid_argument("need dim >= 1, budget >= 0");
    // C(dim+budget, dim) via Pascal additions, overflow-checked
    std::uint64_t c = 1;
    for (int j = 1; j <= dim; ++j) {
        // c = c * (budget + j) / j, exact at each step
        const std::uint64_t num = static_cast<std::uint64_t>(budget) + j;
        if (c > std::numeric_limits<std::uint64_t>::max() / num)
            throw std::overflow_error("index set size overflow");
        c = c * num / j;
    }
    return c;
}

SimplexIndexSet::SimplexIndexSet(int dim, int budget) : dim_(dim), budget_(budget) {
    size_ = count(dim, budget);  // validates arguments
    const int nmax = dim_ + budget_ + 1;
    const int kmax = dim_ + 1;
    binom_.assign(static_cast<size_t>(nmax) * kmax, 0);
    for (int n = 0; n < nmax; ++n) {
        binom_[static_cast<size_t>(n) * kmax] = 1;
        for (int k = 1; k < kmax && k <= n; ++k) {
            std::uint64_t up = binom_[static_cast<size_t>(n - 1) * kmax + k];
            std::uint64_t left = (k - 1 <= n - 1) ? binom_[static_cast<size_t>(n - 1) * kmax + k - 1] : 0;
            binom_[static_cast<size_t>(n) * kmax + k] = checked_add(up, left);
        }
    }
}

std::uint64_t SimplexIndexSet::binom(int n, int k) const {
    if (k < 0 || k > n || n < 0) return 0;
    return binom_[static_cast<size_t>(n) * (dim_ + 1) + k];
}

std::uint64_t SimplexIndexSet::rank(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != dim_) throw std::invalid_argument("wrong index dimension");
    int s = 0;
    for (int k = 0; k < dim_; ++k) {
        if (idx[k] < 1) throw std::out_of_range("multi-index entries must be >= 1");
        s += idx[k] - 1;
    }
    if (s > budget_) throw std::out_of_range("multi-index outside simplex");

    std::uint64_t r = binom(dim_ + s - 1, dim_);  // members with smaller level sum
    int sp = s;
    int d = dim_;
    for (int k = dim_ - 1; k >= 1; --k) {
        const int t = idx[k] - 1;
        r += binom(sp + d - 1, d - 1) - binom(sp - t + d - 1, d - 1);
        sp -= t;
        --d;
    }
    return r;
}

void SimplexIndexSet::unrank(std::uint64_t offset, std::span<int> idx) const {
    if (offset >= size_) throw std::out_of_range("offset exceeds index set size");
    if (static_cast<int>(idx.size()) != dim_) throw std::invalid_argument("wrong index dimension");

    int s = 0;
    while (binom(dim_ + s, dim_) <= offset) ++s;
    std::uint64_t r = offset - binom(dim_ + s - 1, dim_);

    int sp = s;
    int d = dim_;
    for (int k = dim_ - 1; k >= 1; --k) {
        int t = 0;
        while (binom(sp + d - 1, d - 1) - binom(sp - (t + 1) + d - 1, d - 1) <= r) ++t;
        r -= binom(sp + d - 1, d - 1) - binom(sp - t + d - 1, d - 1);
        idx[k] = t + 1;
        sp -= t;
        --d;
    }
    idx[0] = sp + 1;
}

std::vector<int> SimplexIndexSet::unrank(std::uint64_t offset) const {
    std::vector<int> idx(dim_);
    unrank(offset, idx);
    return idx;
}

std::vector<std::vector<int>> enumerate_simplex(int dim, int budget) {
    SimplexIndexSet set(dim, budget);
    std::vector<std::vector<int>> out;
    out.reserve(set.size());
    for (std::uint64_t o = 0; o < set.size(); ++o) out.push_back(set.unrank(o));
    return out;
}

SparseGrid::SparseGrid(SimplexIndexSet s, std::vector<std::vector<double>> ax)
    : set(std::move(s)), axes(std::move(ax)) {
    if (static_cast<int>(axes.size()) != set.dim())
        throw std::invalid_argument("axis count must equal dimension");
    for (const auto& a : axes)
        if (static_cast<int>(a.size()) < set.budget() + 1)
            throw std::invalid_argument("axis too short: need at least b+1 points");
}

void SparseGrid::point_at(std::uint64_t offset, std::span<int> idx, std::span<double> x) const {
    set.unrank(offset, idx);
    for (int k = 0; k < set.dim(); ++k) x[k] = axes[k][idx[k] - 1];
}

std::vector<std::vector<double>> SparseGrid::points() const {
    std::vector<std::vector<double>> pts(set.size(), std::vector<double>(set.dim()));
    std::vector<int> idx(set.dim());
    for (std::uint64_t o = 0; o < set.size(); ++o) point_at(o, idx, pts[o]);
    return pts;
}

}  // namespace zappl
