// Distinct entries of the n x n multiplication table for doubling n, as a
// CSV of n, pair count, distinct products, and the occupancy distinct / n^2.
// The occupancy column shrinking with n is the multiplication-table effect.

#include <cstdio>
#include <vector>

#include <pslab/productset.hpp>

int main() {
    std::printf("n,pairs,distinct,occupancy\n");
    for (std::uint64_t n = 4; n <= 512; n *= 2) {
        std::vector<std::uint64_t> all(n);
        for (std::uint64_t e = 1; e <= n; ++e) all[e - 1] = e;
        const auto stats = pslab::compute_product_statistics({{all}, {2}});
        std::printf("%llu,%s,%s,%.6f\n", static_cast<unsigned long long>(n),
                    stats.tuple_count.str().c_str(), stats.distinct_count.str().c_str(),
                    stats.distinct_count.convert_to<double>() /
                        (static_cast<double>(n) * static_cast<double>(n)));
    }
    return 0;
}
