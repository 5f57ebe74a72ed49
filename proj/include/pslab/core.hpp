#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "pslab/bigint.hpp"
#include "pslab/errors.hpp"

namespace pslab {

// Parameters of one random-product-set experiment: s independent random sets
// A_i ~ B(n_i, alpha_i), the i-th contributing k_i factors to the product.
struct experiment_config {
    std::vector<std::uint64_t> n;  // ground-set sizes, n_i >= 1
    std::vector<double> alpha;     // inclusion probabilities in [0, 1]
    std::vector<std::uint32_t> k;  // product exponents, k_i >= 1

    std::size_t set_count() const { return n.size(); }

    void validate() const {
        if (n.empty() || n.size() != alpha.size() || n.size() != k.size())
            throw domain_error("experiment_config: n, alpha, k must have equal nonzero length");
        for (auto v : n)
            if (v < 1) throw domain_error("experiment_config: every n_i must be >= 1");
        for (auto v : k)
            if (v < 1) throw domain_error("experiment_config: every k_i must be >= 1");
        for (auto a : alpha)
            if (!(a >= 0.0 && a <= 1.0))
                throw domain_error("experiment_config: every alpha_i must lie in [0, 1]");
    }
};

// (n, m, k) of the tuple-count identity: k-multisets over {1..n} whose
// support has exactly m elements.
struct tuple_profile {
    std::uint64_t k = 1;  // tuple length
    std::uint64_t m = 1;  // distinct-element count, 1 <= m <= min(n, k)
    std::uint64_t n = 1;  // ground-set size
};

// Diagnostics for how deep a configuration sits inside the small-alpha regime:
// the smaller each ratio, the stronger the concentration of the product-set size.
struct condition_report {
    double log_power_product = 1.0;   // (log n_1)^{k_1-1} * prod_{i>=2} (log n_i)^{k_i}
    std::uint64_t exponent_sum = 0;   // k_1 + ... + k_s
    std::vector<double> ratios;       // alpha_i * log_power_product^{(exponent_sum-1)/2}
};

// C(n, r) as an exact integer; 0 when r > n.
inline bigint binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    bigint result = 1;
    // the product of i consecutive integers is divisible by i!, so each step divides exactly
    for (std::uint64_t i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

// Number of unordered k-tuples from {1..n} with exactly m distinct elements:
// C(n, m) choices of support times C(k-1, m-1) ways to spread k slots over it.
inline bigint count_unordered_tuples(const tuple_profile& profile) {
    if (profile.k < 1 || profile.m < 1 || profile.m > profile.k || profile.m > profile.n)
        throw domain_error("tuple_profile: need 1 <= m <= min(n, k)");
    return binomial(profile.n, profile.m) * binomial(profile.k - 1, profile.m - 1);
}

// Stirling number of the second kind, by inclusion-exclusion over surjections:
// S(k, j) = (1/j!) sum_{i=0}^{j} (-1)^i C(j, i) (j-i)^k.
inline bigint stirling2(std::uint64_t k, std::uint64_t j) {
    if (j > k) return 0;
    if (j == 0) return k == 0 ? bigint(1) : bigint(0);
    bigint sum = 0;
    for (std::uint64_t i = 0; i <= j; ++i) {
        bigint term = binomial(j, i) *
                      boost::multiprecision::pow(bigint(j - i), static_cast<unsigned>(k));
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    bigint jfact = 1;
    for (std::uint64_t i = 2; i <= j; ++i) jfact *= i;
    return sum / jfact;  // exact: the alternating sum counts surjections, a multiple of j!
}

// Regime diagnostics. Natural logarithms throughout; requires every n_i >= 2
// so all log factors are positive.
inline condition_report condition_ratios(const experiment_config& config) {
    config.validate();
    for (auto v : config.n)
        if (v < 2) throw domain_error("condition_ratios: every n_i must be >= 2");

    condition_report report;
    double lp = std::pow(std::log(static_cast<double>(config.n[0])),
                         static_cast<double>(config.k[0]) - 1.0);
    for (std::size_t i = 1; i < config.set_count(); ++i)
        lp *= std::pow(std::log(static_cast<double>(config.n[i])),
                       static_cast<double>(config.k[i]));
    std::uint64_t ksum = 0;
    for (auto v : config.k) ksum += v;

    report.log_power_product = lp;
    report.exponent_sum = ksum;
    const double scale = std::pow(lp, (static_cast<double>(ksum) - 1.0) / 2.0);
    report.ratios.reserve(config.set_count());
    for (auto a : config.alpha) report.ratios.push_back(a * scale);
    return report;
}

} // namespace pslab
