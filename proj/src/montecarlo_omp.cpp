#include <atomic>
#include <exception>
#include <numeric>
#include <vector>

#include "pivot_buffon/montecarlo.hpp"

namespace pivot_buffon {

namespace {

EstimateReport run_parallel(const SimulationConfig& config, std::optional<double> phi) {
    validate(config);
    const auto n_chunks = static_cast<std::int64_t>(config.n_chunks);
    std::vector<TallyCounts> partial(config.n_chunks);

    std::atomic_flag failed = ATOMIC_FLAG_INIT;
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < n_chunks; ++c) {
        try {
            const auto chunk = static_cast<std::uint32_t>(c);
            partial[chunk] =
                tally_range(config, chunk_range(config.n_throws, config.n_chunks, chunk), phi);
        } catch (...) {
            if (!failed.test_and_set()) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    const auto total = std::accumulate(partial.begin(), partial.end(), TallyCounts{});
    return make_report(total, config.seed, phi);
}

}  // namespace

EstimateReport run(const SimulationConfig& config) { return run_parallel(config, std::nullopt); }

EstimateReport run_fixed_angle(const SimulationConfig& config, double phi) {
    return run_parallel(config, phi);
}

}  // namespace pivot_buffon
