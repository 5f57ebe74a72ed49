#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pslab/bigint.hpp"
#include "pslab/core.hpp"
#include "pslab/errors.hpp"

namespace pslab {

// Default ceiling on the number of tuple combinations any enumeration may
// visit. Queries above it are refused instead of left running indefinitely.
inline constexpr std::uint64_t default_enumeration_cap = 100'000'000;

// Query for the product multiset A_1^{k_1} ... A_s^{k_s} over explicit sets.
struct product_query {
    std::vector<std::vector<std::uint64_t>> sets;  // strictly increasing positive integers
    std::vector<std::uint32_t> k;                  // k_i >= 1

    void validate() const {
        if (sets.empty() || sets.size() != k.size())
            throw domain_error("product_query: sets and k must have equal nonzero length");
        for (auto v : k)
            if (v < 1) throw domain_error("product_query: every k_i must be >= 1");
        for (const auto& set : sets) {
            std::uint64_t prev = 0;
            for (auto e : set) {
                if (e < 1) throw domain_error("product_query: set elements must be positive");
                if (e <= prev)
                    throw domain_error("product_query: set elements must be strictly increasing");
                prev = e;
            }
        }
    }
};

struct product_statistics {
    bigint tuple_count;     // prod_i C(|A_i| + k_i - 1, k_i)
    bigint distinct_count;  // |A_1^{k_1} ... A_s^{k_s}|
    bigint energy;          // sum_x r(x)^2, r = tuple combinations with product x
    bigint deficiency;      // tuple_count - distinct_count
};

// prod_i C(sizes_i + k_i - 1, k_i): the number of unordered tuple combinations,
// and therefore an upper bound on the distinct-product count.
inline bigint cardinality_upper_bound(const std::vector<std::uint64_t>& sizes,
                                      const std::vector<std::uint32_t>& k) {
    if (sizes.size() != k.size())
        throw domain_error("cardinality_upper_bound: sizes and k must have equal length");
    bigint out = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (k[i] < 1) throw domain_error("cardinality_upper_bound: every k_i must be >= 1");
        out *= binomial(sizes[i] + k[i] - 1, k[i]);
    }
    return out;
}

namespace detail {

using product_table = std::unordered_map<bigint, std::uint64_t, bigint_hash>;

// Groups the products of all k-multisets of `set` (combinations with
// replacement, enumerated as nondecreasing index tuples) by exact value.
inline product_table multiset_products(const std::vector<std::uint64_t>& set, std::uint32_t k) {
    product_table table;
    if (set.empty()) return table;
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        bigint p = 1;
        for (auto t : idx) p *= set[t];
        ++table[p];
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == set.size() - 1) --pos;
        if (pos == 0) break;
        const std::size_t v = ++idx[pos - 1];
        for (std::size_t t = pos; t < k; ++t) idx[t] = v;
    }
    return table;
}

} // namespace detail

// Enumerates every cross-combination of per-set k_i-multisets, grouped by the
// exact product value. Deterministic: the four statistics are order-independent
// sums over the product table.
inline product_statistics compute_product_statistics(const product_query& query,
                                                     std::uint64_t cap = default_enumeration_cap) {
    query.validate();

    product_statistics stats;
    std::vector<std::uint64_t> sizes;
    sizes.reserve(query.sets.size());
    for (const auto& set : query.sets) sizes.push_back(set.size());
    stats.tuple_count = cardinality_upper_bound(sizes, query.k);
    if (stats.tuple_count > cap)
        throw cap_exceeded("product_statistics: tuple_count " + stats.tuple_count.str() +
                           " exceeds enumeration cap " + std::to_string(cap));

    detail::product_table accum;
    accum[bigint(1)] = 1;
    for (std::size_t i = 0; i < query.sets.size(); ++i) {
        detail::product_table factor = detail::multiset_products(query.sets[i], query.k[i]);
        detail::product_table next;
        next.reserve(accum.size() * factor.size());
        // per-value counts stay <= tuple_count <= cap, so uint64 cannot wrap here
        for (const auto& [p, cp] : accum)
            for (const auto& [v, cv] : factor) next[p * v] += cp * cv;
        accum = std::move(next);
    }

    stats.distinct_count = accum.size();
    stats.energy = 0;
    for (const auto& [p, c] : accum) stats.energy += bigint(c) * c;
    stats.deficiency = stats.tuple_count - stats.distinct_count;
    return stats;
}

} // namespace pslab
