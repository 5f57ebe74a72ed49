// A complete seeded experiment in a few lines: regime diagnostics for the
// config, a handful of reproducible trials, per-trial CSV, and the summary.

#include <cstdio>

#include <pslab/pslab.hpp>

int main() {
    const pslab::experiment_config config{{20000, 10000}, {0.004, 0.008}, {2, 1}};

    const auto condition = pslab::condition_ratios(config);
    std::printf("# regime: %s\n", pslab::condition_report_json(condition).c_str());

    const auto [records, summary] = pslab::run_trials(config, 10, 0.15, 424242);
    std::printf("%s", pslab::trials_csv(records, config.set_count()).c_str());
    std::printf("%s\n", pslab::summary_json(summary, condition).c_str());
    return 0;
}
