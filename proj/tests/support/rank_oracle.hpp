#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

// Brute-force rank-correlation oracle, structurally independent of the
// library's sort-based implementation.
namespace testsupport {

inline std::vector<double> bruteforce_average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<double> ranks(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t less = 0;
        std::size_t equal = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (values[j] < values[i]) {
                ++less;
            } else if (values[j] == values[i]) {
                ++equal;  // includes i itself
            }
        }
        ranks[i] = static_cast<double>(less) + (static_cast<double>(equal) + 1.0) / 2.0;
    }
    return ranks;
}

inline double bruteforce_pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    const double dn = static_cast<double>(n);
    const double cov = sxy - sx * sy / dn;
    const double vx = sxx - sx * sx / dn;
    const double vy = syy - sy * sy / dn;
    if (vx <= 0.0 || vy <= 0.0) {
        return 0.0;
    }
    return cov / std::sqrt(vx * vy);
}

inline double bruteforce_spearman(std::span<const double> x, std::span<const double> y) {
    const auto rx = bruteforce_average_ranks(x);
    const auto ry = bruteforce_average_ranks(y);
    return bruteforce_pearson(rx, ry);
}

}  // namespace testsupport
