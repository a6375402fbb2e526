#include "ltmv/quadrature.hpp"

#include <numbers>

#include "ltmv/errors.hpp"

namespace ltmv::quad {

GaussLegendreRule gauss_legendre(int n) {
    require(n >= 1, ErrorKind::InvalidGrid, "Gauss-Legendre rule needs at least one node");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        if (n == 1) p0 = 1.0;
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

const GaussLegendreRule& rule64() {
    static const GaussLegendreRule rule = gauss_legendre(64);
    return rule;
}

std::vector<double> panel_breaks(double lo, double hi, double max_width) {
    require(hi > lo && max_width > 0.0, ErrorKind::InvalidGrid, "empty integration interval");
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / max_width - 1e-12)));
    std::vector<double> breaks(n + 1);
    const double w = (hi - lo) / static_cast<double>(n);
    for (std::size_t j = 0; j <= n; ++j) breaks[j] = lo + w * static_cast<double>(j);
    breaks[n] = hi;
    return breaks;
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 16) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace ltmv::quad
