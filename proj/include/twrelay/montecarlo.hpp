#pragma once

#include "twrelay/model.hpp"

#include <cstdint>

namespace twrelay {

/// Stateless counter-based generator: the value stream is a pure function
/// of (seed, trial index), so trial batches can be partitioned across any
/// number of workers without changing a single draw.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state_(mix64(mix64(seed ^ 0x5851f42d4c957f2dULL) + trial))
    {
    }

    std::uint64_t next_u64()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Exponential with the given mean; a zero mean gives the point mass at 0.
    double exponential(double mean)
    {
        return mean <= 0.0 ? 0.0 : -mean * std::log1p(-uniform());
    }

private:
    static std::uint64_t mix64(std::uint64_t z)
    {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

/// Squared channel gains of one coherence frame, drawn in this exact order.
struct TrialDraw {
    double g_h1;
    double g_h2;
    double g_g1;
    double g_g2;
    double g_bc;
};

TrialDraw draw_frame(TrialRng& rng, const SystemConfig& cfg);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct McOutage {
    McEstimate u1r;
    McEstimate u2r;
    McEstimate bc;
    McEstimate system;
};

/// Signal-level simulation of the power-splitting scheme.  Bit-identical
/// for a given (cfg, psr, trials, seed) regardless of workers.
McOutage simulate_outage_psr(const SystemConfig& cfg, const PsrConfig& psr,
                             std::uint64_t trials, std::uint64_t seed, int workers = 1);

McOutage simulate_outage_tsr(const SystemConfig& cfg, const TsrConfig& tsr,
                             std::uint64_t trials, std::uint64_t seed, int workers = 1);

McOutage simulate_outage_baseline(const SystemConfig& cfg, const PsrConfig& psr,
                                  BaselinePrelog prelog, std::uint64_t trials,
                                  std::uint64_t seed, int workers = 1);

/// Mean relay broadcast power (watts) with sample standard error.
McEstimate simulate_harvest_power_psr(const SystemConfig& cfg, const PsrConfig& psr,
                                      std::uint64_t trials, std::uint64_t seed,
                                      int workers = 1);

McEstimate simulate_harvest_power_tsr(const SystemConfig& cfg, const TsrConfig& tsr,
                                      std::uint64_t trials, std::uint64_t seed,
                                      int workers = 1);

} // namespace twrelay
