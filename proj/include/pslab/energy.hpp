#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pslab/bigint.hpp"
#include "pslab/errors.hpp"
#include "pslab/productset.hpp"

namespace pslab {

// The bounded multiplicative equation a_1...a_n = b_1...b_m with ordered,
// individually bounded factors: a_i <= x_i and b_j <= y_j.
struct energy_spec {
    std::vector<double> x;  // n bounds on the a-side, all >= 2
    std::vector<double> y;  // m bounds on the b-side, all >= 2

    void validate() const {
        if (x.empty() || y.empty())
            throw domain_error("energy_spec: both bound lists must be nonempty");
        for (auto b : x)
            if (!(b >= 2.0)) throw domain_error("energy_spec: all bounds must be >= 2");
        for (auto b : y)
            if (!(b >= 2.0)) throw domain_error("energy_spec: all bounds must be >= 2");
    }
};

enum class count_method { brute, grouped };

// m x n matrix of positive integers with prescribed row and column products.
struct factor_matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<bigint> entries;  // row-major

    bigint& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const bigint& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    bigint row_product(std::size_t r) const {
        bigint p = 1;
        for (std::size_t c = 0; c < cols; ++c) p *= at(r, c);
        return p;
    }
    bigint col_product(std::size_t c) const {
        bigint p = 1;
        for (std::size_t r = 0; r < rows; ++r) p *= at(r, c);
        return p;
    }
};

namespace detail {

// Bounds are reals >= 2 floored for enumeration; keep them within the exact
// double->integer range so the floor is unambiguous.
inline std::uint64_t floor_bound(double b) {
    if (!(b >= 2.0)) throw domain_error("bounds must be >= 2");
    if (b > 9007199254740992.0)  // 2^53
        throw domain_error("bound too large for exact flooring");
    return static_cast<std::uint64_t>(b);
}

inline std::vector<std::uint64_t> floor_bounds(const std::vector<double>& bounds) {
    std::vector<std::uint64_t> out;
    out.reserve(bounds.size());
    for (auto b : bounds) out.push_back(floor_bound(b));
    return out;
}

inline bigint box_volume(const std::vector<std::uint64_t>& lims) {
    bigint v = 1;
    for (auto l : lims) v *= l;
    return v;
}

// All ordered tuples t with 1 <= t_i <= lims_i, grouped by product. Products
// never exceed the box volume, which the caller has already capped, so they
// fit in 64 bits exactly.
inline std::unordered_map<std::uint64_t, std::uint64_t>
box_products(const std::vector<std::uint64_t>& lims) {
    std::unordered_map<std::uint64_t, std::uint64_t> table;
    std::vector<std::uint64_t> t(lims.size(), 1);
    for (;;) {
        std::uint64_t p = 1;
        for (auto v : t) p *= v;
        ++table[p];
        std::size_t pos = t.size();
        while (pos > 0 && t[pos - 1] == lims[pos - 1]) --pos;
        if (pos == 0) break;
        ++t[pos - 1];
        for (std::size_t q = pos; q < t.size(); ++q) t[q] = 1;
    }
    return table;
}

inline std::vector<std::uint64_t> box_product_list(const std::vector<std::uint64_t>& lims) {
    std::vector<std::uint64_t> out;
    std::vector<std::uint64_t> t(lims.size(), 1);
    for (;;) {
        std::uint64_t p = 1;
        for (auto v : t) p *= v;
        out.push_back(p);
        std::size_t pos = t.size();
        while (pos > 0 && t[pos - 1] == lims[pos - 1]) --pos;
        if (pos == 0) break;
        ++t[pos - 1];
        for (std::size_t q = pos; q < t.size(); ++q) t[q] = 1;
    }
    return out;
}

} // namespace detail

// Counts ordered solutions of a_1...a_n = b_1...b_m within the bounds.
// `brute` compares every a-tuple product against every b-tuple product;
// `grouped` matches the two product->multiplicity tables. Both are exact and
// must agree; brute exists as the independent slow route.
inline bigint energy_count(const energy_spec& spec, count_method method,
                           std::uint64_t cap = default_enumeration_cap) {
    spec.validate();
    const auto xl = detail::floor_bounds(spec.x);
    const auto yl = detail::floor_bounds(spec.y);
    const bigint va = detail::box_volume(xl);
    const bigint vb = detail::box_volume(yl);
    if (va + vb > cap)
        throw cap_exceeded("energy_count: tuple space " + bigint(va + vb).str() +
                           " exceeds enumeration cap " + std::to_string(cap));

    if (method == count_method::grouped) {
        const auto ta = detail::box_products(xl);
        const auto tb = detail::box_products(yl);
        bigint total = 0;
        for (const auto& [p, ca] : ta) {
            auto it = tb.find(p);
            if (it != tb.end()) total += bigint(ca) * it->second;
        }
        return total;
    }

    // brute performs |A-box| * |B-box| comparisons; cap that work too
    if (va * vb > cap)
        throw cap_exceeded("energy_count: brute comparison count " + bigint(va * vb).str() +
                           " exceeds enumeration cap " + std::to_string(cap));
    const auto la = detail::box_product_list(xl);
    const auto lb = detail::box_product_list(yl);
    std::uint64_t matches = 0;
    for (auto pa : la)
        for (auto pb : lb)
            if (pa == pb) ++matches;
    return matches;
}

// Exact count of m x n positive-integer matrices whose column products stay
// within x and row products within y, by depth-first search with residual
// capacity pruning. Every candidate entry value visits one node; the search
// aborts once `cap` nodes are spent.
inline bigint matrix_count(const std::vector<double>& x, const std::vector<double>& y,
                           std::uint64_t cap = default_enumeration_cap) {
    if (x.empty() || y.empty())
        throw domain_error("matrix_count: both bound lists must be nonempty");
    const auto col_cap = detail::floor_bounds(x);
    const auto row_cap = detail::floor_bounds(y);
    const std::size_t n = col_cap.size();
    const std::size_t m = row_cap.size();

    std::vector<std::uint64_t> col_room = col_cap;  // floor(x_j / current column product)
    std::vector<std::uint64_t> row_room = row_cap;
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;

    auto dfs = [&](auto&& self, std::size_t cell) -> void {
        if (cell == m * n) {
            ++leaves;
            return;
        }
        const std::size_t i = cell / n;
        const std::size_t j = cell % n;
        const std::uint64_t limit = std::min(row_room[i], col_room[j]);
        const std::uint64_t rr = row_room[i];
        const std::uint64_t cr = col_room[j];
        for (std::uint64_t c = 1; c <= limit; ++c) {
            if (++nodes > cap)
                throw cap_exceeded("matrix_count: node budget " + std::to_string(cap) +
                                   " exhausted");
            row_room[i] = rr / c;  // c fits iff c <= floor(room); division keeps that exact
            col_room[j] = cr / c;
            self(self, cell + 1);
        }
        row_room[i] = rr;
        col_room[j] = cr;
    };
    dfs(dfs, 0);
    return leaves;
}

// Closed-form ceiling for matrix_count without its hidden constant:
// sqrt(prod x_i * prod y_j) * (prod_{i<n} log x_i)^{m-1}.
// Empty products are 1; a zero exponent yields 1.
inline double matrix_count_bound(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.empty() || y.empty())
        throw domain_error("matrix_count_bound: both bound lists must be nonempty");
    for (auto b : x)
        if (!(b >= 2.0)) throw domain_error("matrix_count_bound: all bounds must be >= 2");
    for (auto b : y)
        if (!(b >= 2.0)) throw domain_error("matrix_count_bound: all bounds must be >= 2");

    double volume = 1.0;
    for (auto b : x) volume *= b;
    for (auto b : y) volume *= b;
    double logs = 1.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) logs *= std::log(x[i]);
    return std::sqrt(volume) * std::pow(logs, static_cast<double>(y.size()) - 1.0);
}

// Splits factorizations of a common value into a matrix: given prod a = prod b,
// returns c with column products a and row products b. Column h < n is peeled
// off a_h greedily, row by row: each row contributes gcd(remaining, residual_i),
// which consumes the maximal available exponent of every prime, so the peel
// always completes; the last column is the leftover residuals.
inline factor_matrix decompose_matrix(const std::vector<bigint>& a,
                                      const std::vector<bigint>& b) {
    if (a.empty() || b.empty())
        throw domain_error("decompose_matrix: both factor lists must be nonempty");
    for (const auto& v : a)
        if (v < 1) throw domain_error("decompose_matrix: factors must be positive");
    for (const auto& v : b)
        if (v < 1) throw domain_error("decompose_matrix: factors must be positive");

    bigint pa = 1, pb = 1;
    for (const auto& v : a) pa *= v;
    for (const auto& v : b) pb *= v;
    if (pa != pb)
        throw domain_error("decompose_matrix: prod(a) = " + pa.str() +
                           " differs from prod(b) = " + pb.str());

    const std::size_t n = a.size();
    const std::size_t m = b.size();
    factor_matrix c{m, n, std::vector<bigint>(m * n, bigint(1))};
    std::vector<bigint> residual = b;

    for (std::size_t h = 0; h + 1 < n; ++h) {
        bigint remaining = a[h];
        for (std::size_t i = 0; i < m; ++i) {
            const bigint g = boost::multiprecision::gcd(remaining, residual[i]);
            c.at(i, h) = g;
            remaining /= g;
            residual[i] /= g;
        }
        if (remaining != 1)
            throw std::logic_error("decompose_matrix: column peel left a remainder");
    }
    for (std::size_t i = 0; i < m; ++i) c.at(i, n - 1) = residual[i];
    return c;
}

} // namespace pslab
