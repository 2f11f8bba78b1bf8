#include "zappl/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zappl {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

namespace {

double parse_double(const std::string& tok, int line_no) {
    double v{};
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw std::runtime_error("bad numeric field on line " + std::to_string(line_no) + ": '" +
                                 tok + "'");
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    std::stringstream ss(line);
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

}  // namespace

void write_points_csv(std::ostream& os, std::span<const double> points) {
    for (double p : points) os << format_double(p) << '\n';
}

std::vector<double> read_points_csv(std::istream& is) {
    std::vector<double> out;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        out.push_back(parse_double(line, line_no));
    }
    if (out.empty()) throw std::runtime_error("empty points file");
    return out;
}

void write_grid_csv(std::ostream& os, const SparseGrid& grid) {
    const int dim = grid.set.dim();
    std::vector<int> idx(dim);
    std::vector<double> x(dim);
    for (std::uint64_t o = 0; o < grid.set.size(); ++o) {
        grid.point_at(o, idx, x);
        os << o;
        for (int k = 0; k < dim; ++k) os << ',' << idx[k];
        for (int k = 0; k < dim; ++k) os << ',' << format_double(x[k]);
        os << '\n';
    }
}

void write_vector_csv(std::ostream& os, const SimplexIndexSet& set, std::span<const double> data) {
    if (data.size() != set.size()) throw std::invalid_argument("vector length mismatch");
    std::vector<int> idx(set.dim());
    for (std::uint64_t o = 0; o < set.size(); ++o) {
        set.unrank(o, idx);
        os << o;
        for (int k = 0; k < set.dim(); ++k) os << ',' << idx[k];
        os << ',' << format_double(data[o]) << '\n';
    }
}

VectorCsv read_vector_csv(std::istream& is) {
    VectorCsv out;
    std::string line;
    int line_no = 0;
    std::uint64_t expected_offset = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto toks = split_csv_line(line);
        if (toks.size() < 3)
            throw std::runtime_error("too few columns on line " + std::to_string(line_no));
        if (out.dim == 0)
            out.dim = static_cast<int>(toks.size()) - 2;
        else if (static_cast<int>(toks.size()) != out.dim + 2)
            throw std::runtime_error("inconsistent column count on line " + std::to_string(line_no));
        const auto offset = static_cast<std::uint64_t>(parse_double(toks[0], line_no));
        if (offset != expected_offset)
            throw std::runtime_error("offsets must be contiguous from 0; got " +
                                     std::to_string(offset) + " on line " + std::to_string(line_no));
        ++expected_offset;
        const double v = parse_double(toks.back(), line_no);
        if (!std::isfinite(v))
            throw std::runtime_error("non-finite value on line " + std::to_string(line_no));
        out.data.push_back(v);
    }
    if (out.data.empty()) throw std::runtime_error("empty vector file");
    return out;
}

std::vector<std::vector<double>> read_eval_points_csv(std::istream& is, int dim) {
    std::vector<std::vector<double>> out;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto toks = split_csv_line(line);
        if (static_cast<int>(toks.size()) != dim)
            throw std::runtime_error("expected " + std::to_string(dim) + " columns on line " +
                                     std::to_string(line_no));
        std::vector<double> x(dim);
        for (int k = 0; k < dim; ++k) x[k] = parse_double(toks[k], line_no);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace zappl
