#include "zappl/test_functions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "zappl/index_set.hpp"

namespace zappl {

TestFunction make_test_function(const std::string& name, int dim, double param) {
    if (dim < 1) throw std::invalid_argument("need dim >= 1");
    if (name == "constant") {
        return [param](std::span<const double>) { return param; };
    }
    if (name == "sum") {
        return [](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v;
            return s;
        };
    }
    if (name == "product") {
        return [](std::span<const double> x) {
            double p = 1.0;
            for (double v : x) p *= v;
            return p;
        };
    }
    if (name == "square-sum") {
        return [](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v * v;
            return s;
        };
    }
    if (name == "poly") {
        // total-degree polynomial with fixed coefficients; in the span of the
        // pruned basis when degree <= b, so useful for exactness checks
        const int degree = std::max(0, static_cast<int>(std::lround(param)));
        const auto exponents = enumerate_simplex(dim, degree);
        std::mt19937_64 rng(97531u);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        std::vector<double> coeff(exponents.size());
        for (double& c : coeff) c = unif(rng);
        return [dim, exponents, coeff](std::span<const double> x) {
            double total = 0.0;
            for (size_t t = 0; t < exponents.size(); ++t) {
                double term = coeff[t];
                for (int k = 0; k < dim; ++k)
                    for (int e = 1; e < exponents[t][k]; ++e) term *= x[k];
                total += term;
            }
            return total;
        };
    }
    if (name == "genz-oscillatory") {
        return [dim, param](std::span<const double> x) {
            double s = 2.0 * std::numbers::pi * 0.5;
            for (int k = 0; k < dim; ++k) s += param / (k + 1) * x[k];
            return std::cos(s);
        };
    }
    if (name == "genz-product-peak") {
        return [dim, param](std::span<const double> x) {
            double p = 1.0;
            for (int k = 0; k < dim; ++k) {
                const double c = param / (k + 1);
                p *= 1.0 / (1.0 / (c * c) + (x[k] - 0.5) * (x[k] - 0.5));
            }
            return p;
        };
    }
    throw std::invalid_argument("unknown builtin function: " + name);
}

std::vector<std::string> test_function_names() {
    return {"constant", "sum",  "product",          "square-sum",
            "poly",     "genz-oscillatory", "genz-product-peak"};
}

}  // namespace zappl
