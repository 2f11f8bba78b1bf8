#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zappl/basis1d.hpp"

namespace zappl {

/// The multi-index simplex { i in N^D : sum_k (i_k - 1) <= b } with a
/// bijective rank/unrank onto 0..C(D+b,D)-1.
///
/// Ordering is graded colexicographic: level sum ascending, ties broken
/// colexicographically (last coordinate most significant). Ranks use the
/// combinatorial number system, O(D) per rank.
/// Immutable after construction; concurrent reads are safe.
class SimplexIndexSet {
public:
    SimplexIndexSet(int dim, int budget);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int budget() const { return budget_; }
    [[nodiscard]] std::uint64_t size() const { return size_; }

    /// Flat offset of a member index (entries 1-based). Throws on non-members.
    [[nodiscard]] std::uint64_t rank(std::span<const int> idx) const;

    void unrank(std::uint64_t offset, std::span<int> idx) const;
    [[nodiscard]] std::vector<int> unrank(std::uint64_t offset) const;

    /// C(dim+budget, dim) with overflow-checked arithmetic.
    static std::uint64_t count(int dim, int budget);

private:
    [[nodiscard]] std::uint64_t binom(int n, int k) const;

    int dim_;
    int budget_;
    std::uint64_t size_;
    std::vector<std::uint64_t> binom_;  // row-major (dim_+budget_+1) x (dim_+1)
};

/// All member indices in rank order.
std::vector<std::vector<int>> enumerate_simplex(int dim, int budget);

/// The pruned tensor grid: point for multi-index a is (r_{a_1},...,r_{a_D}).
struct SparseGrid {
    SimplexIndexSet set;
    std::vector<std::vector<double>> axes;  // D point sequences, each >= b+1 long

    SparseGrid(SimplexIndexSet s, std::vector<std::vector<double>> ax);

    /// Points in rank order.
    [[nodiscard]] std::vector<std::vector<double>> points() const;
    void point_at(std::uint64_t offset, std::span<int> idx, std::span<double> x) const;
};

}  // namespace zappl
