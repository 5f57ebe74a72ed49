#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pslab/errors.hpp"

namespace pslab {

// The m-fold reciprocal sum S_m(x) = sum over a_1*...*a_m <= x of
// 1/(a_1*...*a_m), with ordered positive a_i.
struct rankin_query {
    std::uint32_t m = 1;
    double x = 2.0;

    void validate() const {
        if (m < 1) throw domain_error("rankin_query: m must be >= 1");
        if (!(x >= 1.0)) throw domain_error("rankin_query: x must be >= 1");
        if (x > 9007199254740992.0)
            throw domain_error("rankin_query: x too large for exact flooring");
    }
};

namespace detail {

// Kahan-compensated accumulator; the recursion adds up to x * S_{m-1} terms of
// wildly mixed magnitude, so plain += loses digits the acceptance tolerance
// does not allow.
struct compensated_sum {
    double total = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double y = v - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

} // namespace detail

// Evaluates S_m(x) by the recursion S_m(x) = sum_{a <= x} (1/a) S_{m-1}(x/a),
// S_0 = 1. S_{m-1} is only ever needed at the floor values floor(x)/a, so the
// memo is keyed on (level, floor(x/a)) and stays O(m sqrt(x)) distinct entries
// in principle; a plain map suffices at the sizes the cap admits.
class rankin_evaluator {
  public:
    explicit rankin_evaluator(std::uint64_t cap = 100'000'000) : cap_(cap) {}

    double sum(std::uint32_t m, double x) {
        rankin_query{m, x}.validate();
        return eval(m, static_cast<std::uint64_t>(x));
    }

  private:
    double eval(std::uint32_t m, std::uint64_t fx) {
        if (fx == 0) return 0.0;
        if (m == 0) return 1.0;
        const auto key = std::make_pair(m, fx);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        detail::compensated_sum acc;
        for (std::uint64_t a = 1; a <= fx; ++a) {
            if (++work_ > cap_)
                throw cap_exceeded("rankin sum: term budget exhausted at m=" +
                                   std::to_string(m) + ", x=" + std::to_string(fx));
            acc.add(eval(m - 1, fx / a) / static_cast<double>(a));
        }
        memo_.emplace(key, acc.total);
        return acc.total;
    }

    std::map<std::pair<std::uint32_t, std::uint64_t>, double> memo_;
    std::uint64_t cap_;
    std::uint64_t work_ = 0;
};

inline double rankin_sum_exact(const rankin_query& q,
                               std::uint64_t cap = 100'000'000) {
    q.validate();
    rankin_evaluator ev(cap);
    return ev.sum(q.m, q.x);
}

// The shifted-line ceiling exp(m) * (1 + log(x)/m)^m, obtained by weighting
// each term with (x / a_1...a_m)^t >= 1 and optimizing t = m / log x. It
// dominates S_m(x) for every m >= 1 and x >= 2.
inline double rankin_bound(const rankin_query& q) {
    q.validate();
    if (!(q.x >= 2.0)) throw domain_error("rankin bound requires x >= 2");
    const double m = static_cast<double>(q.m);
    return std::exp(m) * std::pow(1.0 + std::log(q.x) / m, m);
}

} // namespace pslab
