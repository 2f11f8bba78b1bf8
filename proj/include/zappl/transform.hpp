#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zappl/basis1d.hpp"
#include "zappl/index_set.hpp"

namespace zappl {

/// Counts scalar multiplications performed inside the sequential sweeps.
struct MultCounter {
    std::uint64_t count = 0;
};

/// Values on the sparse grid -> hierarchical basis coefficients.
///
/// D sequential passes; pass k applies the lower-triangular inverse
/// collocation matrix of axis k along every pencil (multi-indices differing
/// only in coordinate k). Triangularity limits each sum to a_k <= i_k, and
/// the simplex membership bounds the pencil length, so the total work is
/// exactly D*(b/(D+1)+1)*C(D+b,D) multiplications (recorded by `counter`
/// when supplied). Serial and bitwise deterministic.
std::vector<double> hierarchize(std::span<const double> values, std::span<const Zappl1D> axes,
                                const SimplexIndexSet& set, MultCounter* counter = nullptr);

/// Inverse of hierarchize: same sweep structure with B in place of Binv,
/// same multiplication count.
std::vector<double> dehierarchize(std::span<const double> coeffs, std::span<const Zappl1D> axes,
                                  const SimplexIndexSet& set, MultCounter* counter = nullptr);

/// OpenMP variants: pencils within a pass are independent and processed in
/// parallel; per-pencil arithmetic order matches the serial kernels, so
/// results are bitwise identical to them.
std::vector<double> hierarchize_parallel(std::span<const double> values,
                                         std::span<const Zappl1D> axes,
                                         const SimplexIndexSet& set);
std::vector<double> dehierarchize_parallel(std::span<const double> coeffs,
                                           std::span<const Zappl1D> axes,
                                           const SimplexIndexSet& set);

/// Full tensor-grid transform: values of length (b+1)^D in row-major order
/// (last dimension fastest) -> coefficients, applying Binv of each axis over
/// the full index ranges. Reference for the unpruned case.
std::vector<double> hierarchize_full(std::span<const double> values,
                                     std::span<const Zappl1D> axes, int budget);

/// Ground-truth transform: materializes the N_sparse x N_sparse collocation
/// matrix B(a,i) = prod_k phi~_{i_k}(r_{a_k}) and solves B C = f densely.
/// Guarded to N_sparse <= 20000.
std::vector<double> dense_oracle(std::span<const double> values, std::span<const Zappl1D> axes,
                                 const SimplexIndexSet& set);

struct ChopCheck {
    bool ok = false;
    double max_deviation = 0.0;  // scaled by the magnitude of the inverse block
};

/// Verifies that chopping the tensor-product collocation matrix to the
/// retained simplex block and inverting commutes with inverting first and
/// chopping after. Guarded to (b+1)^D <= 4096.
ChopCheck verify_chop_identity(std::span<const Zappl1D> axes, int dim, int budget);

/// Hierarchical coefficients -> raw-family coefficients on the same simplex:
/// d_j = sum_{i>=j} C_i prod_k A(i_k,j_k), applied as D triangular sweeps.
std::vector<double> to_raw_basis(std::span<const double> coeffs, std::span<const Zappl1D> axes,
                                 const SimplexIndexSet& set);

/// Inverse of to_raw_basis (sweeps with A^{-1}).
std::vector<double> from_raw_basis(std::span<const double> raw, std::span<const Zappl1D> axes,
                                   const SimplexIndexSet& set);

}  // namespace zappl
