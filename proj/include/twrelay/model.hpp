#pragma once

#include <vector>

namespace twrelay {

/// Physical parameters of the two-way relay network.  Distances are in
/// meters, powers in watts, rates in bits/s/Hz.  Channel power gains
/// |h|^2, |g|^2 are exponential with the corresponding omega_* as mean.
///
/// Co-channel interference is driven by the single inr_db knob: the mean
/// received CCI power at the relay is noise_decode_1 * 10^(inr_db/10) and
/// the interferer gain is sampled unit-mean.  omega_bc is retained for
/// config completeness but is absorbed by that composite convention.
struct SystemConfig {
    double p1_tx = 1.5;
    double p2_tx = 1.5;
    double user_distance = 14.0;
    double relay_offset = 7.0;
    double pathloss_exp = 2.7;
    double eta = 0.8;
    double noise_decode_1 = 1e-6;
    double noise_decode_2 = 1e-6;
    double noise_dest_1 = 1e-6;
    double noise_dest_2 = 1e-6;
    double target_rate = 0.9;
    double inr_db = 10.0;
    double omega_h1 = 1.0;
    double omega_h2 = 1.0;
    double omega_g1 = 1.0;
    double omega_g2 = 1.0;
    double omega_bc = 1.0;

    double relay_dist_1() const { return relay_offset; }
    double relay_dist_2() const { return user_distance - relay_offset; }

    /// Mean received CCI power at the relay (watts), referenced to the
    /// slot-1 decode noise floor.
    double cci_recv_power() const;

    /// Mean interference-to-noise ratio at the relay, linear.
    double mean_inr_linear() const;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Power-splitting factors: fraction alpha_k of the received power goes to
/// information decoding, 1 - alpha_k to harvesting.
struct PsrConfig {
    double alpha1 = 0.14;
    double alpha2 = 0.14;

    void validate() const;
};

/// Time-switching factors: user slot k lasts rho_k * T/2, harvesting gets
/// (1 - rho1 - rho2) * T/2.
struct TsrConfig {
    double rho1 = 0.32;
    double rho2 = 0.32;

    void validate() const;
};

/// Per-link decode statistics: the SNR and INR means of the exponential
/// pair plus the SINR threshold the link must clear.
struct LinkStats {
    double mean_snr = 0.0;
    double mean_inr = 0.0;
    double threshold = 0.0;
};

struct PsrThresholds {
    double link;      // 2^(4 R1) - 1, same for both users
    double broadcast; // 2^(2 R1) - 1
};

struct TsrThresholds {
    double link1;     // 2^(2 R1 / rho1) - 1
    double link2;     // 2^(2 R1 / rho2) - 1
    double broadcast; // 2^(2 R1) - 1
};

/// Coefficients of the relay broadcast power X = a|h1|^2 + b|h2|^2 + c|b_c|^2.
struct HarvestCoeffs {
    double user1 = 0.0;
    double user2 = 0.0;
    double cci = 0.0;
};

/// Distribution of a weighted sum of independent exponentials, stored as a
/// signed mixture of exponential densities: f(x) = sum_i w_i r_i e^(-r_i x).
/// Zero-mean components are dropped; an empty mixture is the point mass at 0.
/// Coinciding rates are split by a relative 1e-6 nudge before the
/// partial-fraction weights are formed, so rates are pairwise distinct and
/// the weights always sum to 1.
class ExpMixture {
public:
    ExpMixture() = default;

    /// Builds the mixture of a sum of exponentials with the given means.
    static ExpMixture from_component_means(const std::vector<double>& means);

    const std::vector<double>& rates() const { return rates_; }
    const std::vector<double>& weights() const { return weights_; }
    bool empty() const { return rates_.empty(); }

    /// E[X] = sum_i w_i / r_i.
    double mean() const;

    /// Pr[X <= x]; the empty mixture is deterministic zero.
    double cdf(double x) const;

private:
    std::vector<double> rates_;
    std::vector<double> weights_;
};

/// Received signal power p_tx * gain / d^nu.  Throws std::domain_error on
/// non-positive distance.
double received_power(double p_tx, double gain, double distance, double nu);

PsrThresholds psr_thresholds(double r1);
TsrThresholds tsr_thresholds(double r1, const TsrConfig& tsr);

/// Decode-link statistics for user 1 or 2.
LinkStats link_stats_psr(const SystemConfig& cfg, const PsrConfig& psr, int user);
LinkStats link_stats_tsr(const SystemConfig& cfg, const TsrConfig& tsr, int user);

HarvestCoeffs harvest_coeffs_psr(const SystemConfig& cfg, const PsrConfig& psr);
HarvestCoeffs harvest_coeffs_tsr(const SystemConfig& cfg, const TsrConfig& tsr);

ExpMixture harvest_mixture_psr(const SystemConfig& cfg, const PsrConfig& psr);
ExpMixture harvest_mixture_tsr(const SystemConfig& cfg, const TsrConfig& tsr);

/// Exponential rate of L = min(|g1|^2/(d1^nu s1), |g2|^2/(d2^nu s2)), the
/// weaker-destination channel coefficient of the broadcast phase.
double dest_min_rate_coeff(const SystemConfig& cfg);

/// The CCI-free reference system: power-splitting relaying over three
/// equal slots (prelog 1/3) or over the standard quarter/quarter/half
/// frame (prelog 1/4 links, 1/2 broadcast).
enum class BaselinePrelog { ThirdSlots, QuarterSlots };

struct BaselineThresholds {
    double link;
    double broadcast;
};

BaselineThresholds baseline_thresholds(double r1, BaselinePrelog prelog);
LinkStats link_stats_baseline(const SystemConfig& cfg, const PsrConfig& psr, int user,
                              BaselinePrelog prelog);
HarvestCoeffs harvest_coeffs_baseline(const SystemConfig& cfg, const PsrConfig& psr,
                                      BaselinePrelog prelog);
ExpMixture harvest_mixture_baseline(const SystemConfig& cfg, const PsrConfig& psr,
                                    BaselinePrelog prelog);

} // namespace twrelay
