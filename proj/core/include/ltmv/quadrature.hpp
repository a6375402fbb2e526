#pragma once

// Composite Gauss-Legendre quadrature on smooth integrands.

#include <cmath>
#include <span>
#include <vector>

namespace ltmv::quad {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

GaussLegendreRule gauss_legendre(int n);

/// Shared 64-point rule used by the horizon-moment engines.
const GaussLegendreRule& rule64();

/// Uniform panel breakpoints covering [lo, hi] with widths at most max_width.
std::vector<double> panel_breaks(double lo, double hi, double max_width);

/// Integrates f over [lo, hi] with `rule` on a single panel. T needs +, scalar *.
template <class T, class F>
T integrate_panel(const GaussLegendreRule& rule, F&& f, double lo, double hi, T zero) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    T acc = zero;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += (rule.weights[i] * half) * f(mid + half * rule.nodes[i]);
    }
    return acc;
}

template <class T, class F>
T integrate_composite(const GaussLegendreRule& rule, F&& f, std::span<const double> breaks,
                      T zero) {
    T acc = zero;
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        acc += integrate_panel(rule, f, breaks[j], breaks[j + 1], zero);
    }
    return acc;
}

/// Neumaier-compensated sum; order-independent to within rounding of the total.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Pairwise summation of a contiguous range.
double pairwise_sum(std::span<const double> xs);

}  // namespace ltmv::quad
