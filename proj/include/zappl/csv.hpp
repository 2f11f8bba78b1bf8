#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zappl/index_set.hpp"

namespace zappl {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

/// Point sequence CSV: one real per line.
void write_points_csv(std::ostream& os, std::span<const double> points);
std::vector<double> read_points_csv(std::istream& is);

/// Grid CSV: offset, i_1..i_D, x_1..x_D per line, in rank order.
void write_grid_csv(std::ostream& os, const SparseGrid& grid);

/// Value/coefficient CSV: offset, i_1..i_D (or a_1..a_D), value per line.
void write_vector_csv(std::ostream& os, const SimplexIndexSet& set,
                      std::span<const double> data);

struct VectorCsv {
    int dim = 0;
    std::vector<double> data;  // indexed by offset
};

/// Reads a vector CSV back; requires offsets to be exactly 0..N-1 in order,
/// all values finite. Column count fixes the dimension.
VectorCsv read_vector_csv(std::istream& is);

/// Evaluation-point CSV: x_1..x_D per line.
std::vector<std::vector<double>> read_eval_points_csv(std::istream& is, int dim);

}  // namespace zappl
