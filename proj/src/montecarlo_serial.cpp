#include "pivot_buffon/montecarlo.hpp"

// Reference implementation: chunks are simulated one after another on the
// calling thread. Tests compare the OpenMP runner against this.

namespace pivot_buffon::serial {

namespace {

EstimateReport run_chunks(const SimulationConfig& config, std::optional<double> phi) {
    validate(config);
    TallyCounts total;
    for (std::uint32_t c = 0; c < config.n_chunks; ++c) {
        total += tally_range(config, chunk_range(config.n_throws, config.n_chunks, c), phi);
    }
    return make_report(total, config.seed, phi);
}

}  // namespace

EstimateReport run(const SimulationConfig& config) { return run_chunks(config, std::nullopt); }

EstimateReport run_fixed_angle(const SimulationConfig& config, double phi) {
    return run_chunks(config, phi);
}

}  // namespace pivot_buffon::serial
