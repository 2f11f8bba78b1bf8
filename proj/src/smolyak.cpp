#include "zappl/smolyak.hpp"

#include <bit>
#include <stdexcept>

namespace zappl {

namespace {

void check_components(const std::vector<Zappl1D>& axes, const SimplexIndexSet& set,
                      const std::vector<double>& data) {
    if (static_cast<int>(axes.size()) != set.dim())
        throw std::invalid_argument("axis count must equal dimension");
    for (const auto& z : axes)
        if (z.size() < set.budget() + 1)
            throw std::invalid_argument("axis too short: need at least b+1 basis functions");
    if (data.size() != set.size()) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

Interpolant::Interpolant(std::vector<Zappl1D> ax, SimplexIndexSet s, std::vector<double> c)
    : axes(std::move(ax)), set(std::move(s)), coeffs(std::move(c)) {
    check_components(axes, set, coeffs);
}

double eval_interpolant(const Interpolant& itp, std::span<const double> x) {
    const int dim = itp.set.dim();
    const int b = itp.set.budget();
    if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("point dimension mismatch");
    for (int k = 0; k < dim; ++k)
        if (!itp.axes[k].family.contains(x[k]))
            throw std::domain_error("evaluation point outside tensor domain");

    // phi[k][i-1] = phi~_i(x_k)
    std::vector<std::vector<double>> phi(dim, std::vector<double>(b + 1));
    for (int k = 0; k < dim; ++k)
        for (int i = 1; i <= b + 1; ++i) phi[k][i - 1] = itp.axes[k].eval_zappl(i, x[k]);

    double total = 0.0;
    std::vector<int> idx(dim);
    for (std::uint64_t o = 0; o < itp.set.size(); ++o) {
        itp.set.unrank(o, idx);
        double prod = itp.coeffs[o];
        for (int k = 0; k < dim; ++k) prod *= phi[k][idx[k] - 1];
        total += prod;
    }
    return total;
}

DeltaBaseline::DeltaBaseline(std::vector<Zappl1D> ax, SimplexIndexSet s, std::vector<double> v)
    : axes(std::move(ax)), set(std::move(s)), values(std::move(v)) {
    check_components(axes, set, values);
}

double eval_delta_baseline(const DeltaBaseline& base, std::span<const double> x) {
    const int dim = base.set.dim();
    const int b = base.set.budget();
    if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("point dimension mismatch");

    // card[k][m-1][a-1] = cardinal function on the first m points of axis k,
    // centred at point a, evaluated at x_k
    std::vector<std::vector<std::vector<double>>> card(dim);
    for (int k = 0; k < dim; ++k) {
        card[k].resize(b + 1);
        for (int m = 1; m <= b + 1; ++m) {
            card[k][m - 1].resize(m);
            for (int a = 1; a <= m; ++a)
                card[k][m - 1][a - 1] = base.axes[k].lagrange_leading(m, a, x[k]);
        }
    }

    std::vector<int> lvl(dim), a(dim);
    double total = 0.0;
    for (std::uint64_t o = 0; o < base.set.size(); ++o) {
        base.set.unrank(o, lvl);
        for (unsigned z = 0; z < (1u << dim); ++z) {
            bool drop = false;
            for (int k = 0; k < dim; ++k)
                if (lvl[k] - ((z >> k) & 1) < 1) {
                    drop = true;  // a U^0 factor: term vanishes
                    break;
                }
            if (drop) continue;
            const double sign = (std::popcount(z) % 2 == 0) ? 1.0 : -1.0;

            // tensor interpolant on the grid with m_k = lvl_k - z_k points
            double term = 0.0;
            for (int k = 0; k < dim; ++k) a[k] = 1;
            while (true) {
                double prod = base.values[base.set.rank(a)];
                for (int k = 0; k < dim; ++k) {
                    const int m = lvl[k] - ((z >> k) & 1);
                    prod *= card[k][m - 1][a[k] - 1];
                }
                term += prod;
                int k = 0;
                for (; k < dim; ++k) {
                    if (a[k] < lvl[k] - static_cast<int>((z >> k) & 1)) {
                        ++a[k];
                        break;
                    }
                    a[k] = 1;
                }
                if (k == dim) break;
            }
            total += sign * term;
        }
    }
    return total;
}

}  // namespace zappl
