#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pslab/bigint.hpp"
#include "pslab/core.hpp"
#include "pslab/errors.hpp"
#include "pslab/productset.hpp"
#include "pslab/sampler.hpp"

namespace pslab {

// One sampled experiment: realized set sizes, the exact product-set counts,
// and the size-based prediction prod |A_i|^{k_i} / k_i! it is compared to.
struct trial_record {
    std::uint64_t trial = 0;
    std::vector<std::uint64_t> sizes;
    bigint tuple_count;
    bigint distinct_count;
    bigint energy;
    bigint deficiency;
    double predicted = 0.0;
    std::optional<double> ratio;  // distinct/predicted; empty when some A_i was empty
};

struct verify_summary {
    std::uint64_t trials = 0;
    double epsilon = 0.0;
    std::uint64_t defined_trials = 0;  // trials with all sets nonempty
    std::uint64_t empty_trials = 0;
    double exceed_fraction = 0.0;  // share of defined trials with |ratio - 1| >= epsilon
    double mean_ratio = 0.0;
    double stddev_ratio = 0.0;
    double mean_distinct = 0.0;    // over all trials, empty ones included
    double stddev_distinct = 0.0;
    double predicted_expectation = 0.0;
};

// Exact k-th moment of |A| ~ Binomial(n, alpha), through the falling-factorial
// expansion E|A|^k = sum_j S(k,j) n(n-1)...(n-j+1) alpha^j. Every coefficient
// is an exact integer; only the final alpha powers are floating.
inline double binomial_moment_exact(std::uint64_t n, double alpha, std::uint32_t k) {
    if (k < 1) throw domain_error("binomial_moment_exact: k must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw domain_error("binomial_moment_exact: alpha must lie in [0, 1]");
    double total = 0.0;
    for (std::uint32_t j = 1; j <= k; ++j) {
        if (j > n) break;
        bigint falling = 1;
        for (std::uint32_t i = 0; i < j; ++i) falling *= bigint(n - i);
        const bigint coeff = stirling2(k, j) * falling;
        total += coeff.convert_to<double>() * std::pow(alpha, static_cast<double>(j));
    }
    return total;
}

// Model-level expectation of the distinct-product count:
// prod_i (alpha_i n_i)^{k_i} / k_i!.
inline double predicted_expectation(const experiment_config& config) {
    config.validate();
    double value = 1.0;
    for (std::size_t i = 0; i < config.set_count(); ++i) {
        double kfact = 1.0;
        for (std::uint32_t f = 2; f <= config.k[i]; ++f) kfact *= f;
        value *= std::pow(config.alpha[i] * static_cast<double>(config.n[i]),
                          static_cast<double>(config.k[i])) /
                 kfact;
    }
    return value;
}

namespace detail {

inline double size_prediction(const std::vector<std::uint64_t>& sizes,
                              const std::vector<std::uint32_t>& k) {
    double value = 1.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double kfact = 1.0;
        for (std::uint32_t f = 2; f <= k[i]; ++f) kfact *= f;
        value *= std::pow(static_cast<double>(sizes[i]), static_cast<double>(k[i])) / kfact;
    }
    return value;
}

} // namespace detail

// Runs `trials` independent seeded experiments. Trial t, set i draws from
// derive_stream(master_seed, t, i), so records are reproducible and
// order-independent. Trials where some A_i came up empty carry no ratio and
// sit outside exceed_fraction's denominator, but their distinct counts still
// feed mean_distinct, which faces the model-level expectation.
inline std::pair<std::vector<trial_record>, verify_summary>
run_trials(const experiment_config& config, std::uint64_t trials, double epsilon,
           std::uint64_t master_seed, std::uint64_t cap = default_enumeration_cap) {
    config.validate();
    if (trials < 1) throw domain_error("run_trials: trials must be >= 1");
    if (!(epsilon > 0.0)) throw domain_error("run_trials: epsilon must be positive");

    const std::size_t s = config.set_count();
    std::vector<trial_record> records;
    records.reserve(trials);

    for (std::uint64_t t = 0; t < trials; ++t) {
        trial_record rec;
        rec.trial = t;

        product_query query;
        query.k = config.k;
        query.sets.resize(s);
        bool any_empty = false;
        for (std::size_t i = 0; i < s; ++i) {
            auto drawn = sample_set(config.n[i], config.alpha[i],
                                    derive_stream(master_seed, t, i));
            rec.sizes.push_back(drawn.elements.size());
            any_empty = any_empty || drawn.elements.empty();
            query.sets[i] = std::move(drawn.elements);
        }

        product_statistics stats;
        try {
            stats = compute_product_statistics(query, cap);
        } catch (const cap_exceeded& e) {
            throw cap_exceeded("trial " + std::to_string(t) + ": " + e.what());
        }
        rec.tuple_count = stats.tuple_count;
        rec.distinct_count = stats.distinct_count;
        rec.energy = stats.energy;
        rec.deficiency = stats.deficiency;

        // every realization obeys the multiset-coefficient ceiling
        if (rec.distinct_count > cardinality_upper_bound(rec.sizes, config.k))
            throw std::logic_error("run_trials: distinct count exceeds its ceiling");

        rec.predicted = detail::size_prediction(rec.sizes, config.k);
        if (!any_empty && rec.predicted > 0.0)
            rec.ratio = rec.distinct_count.convert_to<double>() / rec.predicted;
        records.push_back(std::move(rec));
    }

    verify_summary sum;
    sum.trials = trials;
    sum.epsilon = epsilon;
    sum.predicted_expectation = predicted_expectation(config);

    double ratio_sum = 0.0, ratio_sq = 0.0;
    double dist_sum = 0.0, dist_sq = 0.0;
    std::uint64_t exceed = 0;
    for (const auto& rec : records) {
        const double d = rec.distinct_count.convert_to<double>();
        dist_sum += d;
        dist_sq += d * d;
        if (!rec.ratio) {
            ++sum.empty_trials;
            continue;
        }
        ++sum.defined_trials;
        ratio_sum += *rec.ratio;
        ratio_sq += *rec.ratio * *rec.ratio;
        if (std::fabs(*rec.ratio - 1.0) >= epsilon) ++exceed;
    }

    const double nt = static_cast<double>(trials);
    sum.mean_distinct = dist_sum / nt;
    if (trials > 1) {
        const double var = (dist_sq - dist_sum * dist_sum / nt) / (nt - 1.0);
        sum.stddev_distinct = std::sqrt(std::max(var, 0.0));
    }
    if (sum.defined_trials > 0) {
        const double nd = static_cast<double>(sum.defined_trials);
        sum.exceed_fraction = static_cast<double>(exceed) / nd;
        sum.mean_ratio = ratio_sum / nd;
        if (sum.defined_trials > 1) {
            const double var = (ratio_sq - ratio_sum * ratio_sum / nd) / (nd - 1.0);
            sum.stddev_ratio = std::sqrt(std::max(var, 0.0));
        }
    }
    return {std::move(records), std::move(sum)};
}

} // namespace pslab
