#pragma once

#include <span>
#include <vector>

#include "zappl/basis1d.hpp"
#include "zappl/index_set.hpp"

namespace zappl {

/// A sparse-grid interpolant: hierarchical coefficients over the simplex.
struct Interpolant {
    std::vector<Zappl1D> axes;
    SimplexIndexSet set;
    std::vector<double> coeffs;

    Interpolant(std::vector<Zappl1D> ax, SimplexIndexSet s, std::vector<double> c);
};

/// sum over the simplex of C_i * prod_k phi~_{i_k}(x_k). The D*(b+1)
/// needed 1-D function values are computed once per call and reused.
/// Throws if x lies outside the tensor domain.
double eval_interpolant(const Interpolant& itp, std::span<const double> x);

/// Difference-operator (separate grids / combination technique) form of the
/// same operator, kept as an independent equivalence oracle. Holds nodal
/// values on the sparse grid; every component tensor grid is a subset by
/// nesting.
struct DeltaBaseline {
    std::vector<Zappl1D> axes;
    SimplexIndexSet set;
    std::vector<double> values;

    DeltaBaseline(std::vector<Zappl1D> ax, SimplexIndexSet s, std::vector<double> v);
};

/// Expands each tensor product of 1-D rule differences into its 2^D signed
/// tensor interpolants and sums them; each 1-D rule of size m is cardinal
/// interpolation on the first m nested points.
double eval_delta_baseline(const DeltaBaseline& base, std::span<const double> x);

}  // namespace zappl
