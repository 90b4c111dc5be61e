#include "caloric/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace caloric {

namespace {

std::pair<std::vector<double>, std::vector<double>> compute(int n) {
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, refined by Newton on P_n.
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return {std::move(x), std::move(w)};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute(n)).first;
    return it->second;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_on(int n, double a, double b) {
    const auto& [x, w] = gauss_legendre(n);
    std::pair<std::vector<double>, std::vector<double>> out{std::vector<double>(n), std::vector<double>(n)};
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        out.first[i] = mid + half * x[i];
        out.second[i] = half * w[i];
    }
    return out;
}

}  // namespace caloric
