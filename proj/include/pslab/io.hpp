#pragma once

#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pslab/core.hpp"
#include "pslab/energy.hpp"
#include "pslab/errors.hpp"
#include "pslab/montecarlo.hpp"
#include "pslab/productset.hpp"
#include "pslab/sampler.hpp"

// Parsing goes through nlohmann::json. Output JSON is assembled by hand:
// counts are arbitrary-precision integers that must be emitted as raw decimal
// numerals, which no fixed-width JSON value type can carry.

namespace pslab {

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

inline const nlohmann::json& require_field(const nlohmann::json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::uint64_t as_uint(const nlohmann::json& v, const char* what) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw parse_error(std::string(what) + " must be a nonnegative integer");
}

inline double as_double(const nlohmann::json& v, const char* what) {
    if (!v.is_number()) throw parse_error(std::string(what) + " must be a number");
    return v.get<double>();
}

} // namespace detail

// {"n":[...],"alpha":[...],"k":[...]}; array lengths give s.
inline experiment_config parse_experiment_config(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("config must be a JSON object");

    experiment_config config;
    const auto& n = detail::require_field(doc, "n");
    const auto& alpha = detail::require_field(doc, "alpha");
    const auto& k = detail::require_field(doc, "k");
    if (!n.is_array() || !alpha.is_array() || !k.is_array())
        throw parse_error("config fields n, alpha, k must be arrays");
    for (const auto& v : n) config.n.push_back(detail::as_uint(v, "n entry"));
    for (const auto& v : alpha) config.alpha.push_back(detail::as_double(v, "alpha entry"));
    for (const auto& v : k)
        config.k.push_back(static_cast<std::uint32_t>(detail::as_uint(v, "k entry")));
    return config;
}

// {"sets":[[...],...],"k":[...]}. A set may also be written as an object with
// an "elements" array, which is the shape `sample --format json` emits, so
// sampler output feeds straight back in.
inline product_query parse_product_query(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("query is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("query must be a JSON object");

    product_query query;
    const auto& sets = detail::require_field(doc, "sets");
    const auto& k = detail::require_field(doc, "k");
    if (!sets.is_array() || !k.is_array())
        throw parse_error("query fields sets and k must be arrays");
    for (const auto& entry : sets) {
        const nlohmann::json* arr = &entry;
        if (entry.is_object()) arr = &detail::require_field(entry, "elements");
        if (!arr->is_array())
            throw parse_error("each set must be an array or an object with \"elements\"");
        std::vector<std::uint64_t> elems;
        for (const auto& v : *arr) elems.push_back(detail::as_uint(v, "set element"));
        query.sets.push_back(std::move(elems));
    }
    for (const auto& v : k)
        query.k.push_back(static_cast<std::uint32_t>(detail::as_uint(v, "k entry")));
    return query;
}

inline std::string sampled_set_json(const sampled_set& s) {
    std::string out = "{\"n\":" + std::to_string(s.n) + ",\"elements\":[";
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.elements[i]);
    }
    out += "]}";
    return out;
}

inline std::string product_statistics_json(const product_statistics& stats) {
    return "{\"tuple_count\":" + stats.tuple_count.str() +
           ",\"distinct\":" + stats.distinct_count.str() +
           ",\"energy\":" + stats.energy.str() +
           ",\"deficiency\":" + stats.deficiency.str() + "}";
}

// Matrix as JSON rows: [[c11,...,c1n],...].
inline std::string factor_matrix_json(const factor_matrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows; ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (c) out += ',';
            out += m.at(r, c).str();
        }
        out += ']';
    }
    out += ']';
    return out;
}

inline std::string condition_report_json(const condition_report& report) {
    std::string out = "{\"log_power_product\":" + detail::fmt_double(report.log_power_product) +
                      ",\"exponent_sum\":" + std::to_string(report.exponent_sum) +
                      ",\"ratios\":[";
    for (std::size_t i = 0; i < report.ratios.size(); ++i) {
        if (i) out += ',';
        out += detail::fmt_double(report.ratios[i]);
    }
    out += "]}";
    return out;
}

inline std::string trials_csv(const std::vector<trial_record>& records, std::size_t set_count) {
    std::string out = "trial";
    for (std::size_t i = 1; i <= set_count; ++i) out += ",size_" + std::to_string(i);
    out += ",tuple_count,distinct,energy,deficiency,predicted,ratio\n";
    for (const auto& rec : records) {
        out += std::to_string(rec.trial);
        for (auto sz : rec.sizes) out += ',' + std::to_string(sz);
        out += ',' + rec.tuple_count.str();
        out += ',' + rec.distinct_count.str();
        out += ',' + rec.energy.str();
        out += ',' + rec.deficiency.str();
        out += ',' + detail::fmt_double(rec.predicted);
        out += ',';
        out += rec.ratio ? detail::fmt_double(*rec.ratio) : "nan";
        out += '\n';
    }
    return out;
}

inline std::string summary_json(const verify_summary& s, const condition_report& condition) {
    return "{\"trials\":" + std::to_string(s.trials) +
           ",\"epsilon\":" + detail::fmt_double(s.epsilon) +
           ",\"defined_trials\":" + std::to_string(s.defined_trials) +
           ",\"empty_trials\":" + std::to_string(s.empty_trials) +
           ",\"exceed_fraction\":" + detail::fmt_double(s.exceed_fraction) +
           ",\"mean_ratio\":" + detail::fmt_double(s.mean_ratio) +
           ",\"stddev_ratio\":" + detail::fmt_double(s.stddev_ratio) +
           ",\"mean_distinct\":" + detail::fmt_double(s.mean_distinct) +
           ",\"stddev_distinct\":" + detail::fmt_double(s.stddev_distinct) +
           ",\"predicted_expectation\":" + detail::fmt_double(s.predicted_expectation) +
           ",\"condition\":" + condition_report_json(condition) + "}";
}

} // namespace pslab
