#include "twrelay/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace twrelay {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

int check_user(int user)
{
    if (user != 1 && user != 2)
        throw std::invalid_argument("user index must be 1 or 2, got " + std::to_string(user));
    return user;
}

} // namespace

double SystemConfig::cci_recv_power() const
{
    return noise_decode_1 * std::pow(10.0, inr_db / 10.0);
}

double SystemConfig::mean_inr_linear() const
{
    return std::pow(10.0, inr_db / 10.0);
}

void SystemConfig::validate() const
{
    require(p1_tx > 0.0 && std::isfinite(p1_tx), "system.p1_tx must be > 0");
    require(p2_tx > 0.0 && std::isfinite(p2_tx), "system.p2_tx must be > 0");
    require(user_distance > 0.0, "system.user_distance must be > 0");
    require(relay_offset > 0.0 && relay_offset < user_distance,
            "system.relay_offset must lie strictly between 0 and user_distance");
    require(pathloss_exp >= 2.0, "system.pathloss_exp must be >= 2");
    require(eta > 0.0 && eta <= 1.0, "system.eta must be in (0, 1]");
    require(noise_decode_1 > 0.0, "system.noise_decode_1 must be > 0");
    require(noise_decode_2 > 0.0, "system.noise_decode_2 must be > 0");
    require(noise_dest_1 > 0.0, "system.noise_dest_1 must be > 0");
    require(noise_dest_2 > 0.0, "system.noise_dest_2 must be > 0");
    require(target_rate > 0.0, "system.target_rate must be > 0");
    require(!std::isnan(inr_db) && inr_db < std::numeric_limits<double>::infinity(),
            "system.inr_db must be a number or -inf");
    require(omega_h1 > 0.0, "system.omega_h1 must be > 0");
    require(omega_h2 > 0.0, "system.omega_h2 must be > 0");
    require(omega_g1 > 0.0, "system.omega_g1 must be > 0");
    require(omega_g2 > 0.0, "system.omega_g2 must be > 0");
    require(omega_bc > 0.0, "system.omega_bc must be > 0");
}

void PsrConfig::validate() const
{
    require(alpha1 > 0.0 && alpha1 < 1.0, "psr.alpha1 must be in (0, 1)");
    require(alpha2 > 0.0 && alpha2 < 1.0, "psr.alpha2 must be in (0, 1)");
}

void TsrConfig::validate() const
{
    require(rho1 > 0.0, "tsr.rho1 must be > 0");
    require(rho2 > 0.0, "tsr.rho2 must be > 0");
    require(rho1 + rho2 < 1.0, "tsr.rho1 + tsr.rho2 must be < 1");
}

ExpMixture ExpMixture::from_component_means(const std::vector<double>& means)
{
    ExpMixture mix;
    for (double m : means) {
        if (m < 0.0 || !std::isfinite(m))
            throw std::invalid_argument("ExpMixture component means must be finite and >= 0");
        if (m > 0.0)
            mix.rates_.push_back(1.0 / m);
    }
    // Split coinciding rates so the partial-fraction form stays finite.
    for (std::size_t i = 0; i < mix.rates_.size(); ++i) {
        bool clash = true;
        while (clash) {
            clash = false;
            for (std::size_t j = 0; j < i; ++j) {
                if (std::abs(mix.rates_[i] - mix.rates_[j]) <= 1e-9 * mix.rates_[j]) {
                    mix.rates_[i] *= 1.0 + 1e-6;
                    clash = true;
                }
            }
        }
    }
    mix.weights_.resize(mix.rates_.size());
    for (std::size_t i = 0; i < mix.rates_.size(); ++i) {
        double w = 1.0;
        for (std::size_t j = 0; j < mix.rates_.size(); ++j) {
            if (j != i)
                w *= mix.rates_[j] / (mix.rates_[j] - mix.rates_[i]);
        }
        mix.weights_[i] = w;
    }
    return mix;
}

double ExpMixture::mean() const
{
    double m = 0.0;
    for (std::size_t i = 0; i < rates_.size(); ++i)
        m += weights_[i] / rates_[i];
    return m;
}

double ExpMixture::cdf(double x) const
{
    if (x <= 0.0)
        return empty() ? (x >= 0.0 ? 1.0 : 0.0) : 0.0;
    if (empty())
        return 1.0;
    double ccdf = 0.0;
    for (std::size_t i = 0; i < rates_.size(); ++i)
        ccdf += weights_[i] * std::exp(-rates_[i] * x);
    return std::clamp(1.0 - ccdf, 0.0, 1.0);
}

double received_power(double p_tx, double gain, double distance, double nu)
{
    if (distance <= 0.0 || !std::isfinite(distance))
        throw std::domain_error("received_power: distance must be finite and > 0");
    return p_tx * gain / std::pow(distance, nu);
}

PsrThresholds psr_thresholds(double r1)
{
    return {std::exp2(4.0 * r1) - 1.0, std::exp2(2.0 * r1) - 1.0};
}

TsrThresholds tsr_thresholds(double r1, const TsrConfig& tsr)
{
    return {std::exp2(2.0 * r1 / tsr.rho1) - 1.0,
            std::exp2(2.0 * r1 / tsr.rho2) - 1.0,
            std::exp2(2.0 * r1) - 1.0};
}

LinkStats link_stats_psr(const SystemConfig& cfg, const PsrConfig& psr, int user)
{
    const bool first = check_user(user) == 1;
    const double alpha = first ? psr.alpha1 : psr.alpha2;
    const double p_tx = first ? cfg.p1_tx : cfg.p2_tx;
    const double omega = first ? cfg.omega_h1 : cfg.omega_h2;
    const double dist = first ? cfg.relay_dist_1() : cfg.relay_dist_2();
    const double noise = first ? cfg.noise_decode_1 : cfg.noise_decode_2;
    return {alpha * received_power(p_tx, omega, dist, cfg.pathloss_exp) / noise,
            alpha * cfg.mean_inr_linear(),
            psr_thresholds(cfg.target_rate).link};
}

LinkStats link_stats_tsr(const SystemConfig& cfg, const TsrConfig& tsr, int user)
{
    const bool first = check_user(user) == 1;
    const double p_tx = first ? cfg.p1_tx : cfg.p2_tx;
    const double omega = first ? cfg.omega_h1 : cfg.omega_h2;
    const double dist = first ? cfg.relay_dist_1() : cfg.relay_dist_2();
    const double noise = first ? cfg.noise_decode_1 : cfg.noise_decode_2;
    const TsrThresholds u = tsr_thresholds(cfg.target_rate, tsr);
    return {received_power(p_tx, omega, dist, cfg.pathloss_exp) / noise,
            cfg.mean_inr_linear(),
            first ? u.link1 : u.link2};
}

HarvestCoeffs harvest_coeffs_psr(const SystemConfig& cfg, const PsrConfig& psr)
{
    // Each user slot lasts T/4 and the broadcast T/2, hence the half.
    const double d1 = std::pow(cfg.relay_dist_1(), cfg.pathloss_exp);
    const double d2 = std::pow(cfg.relay_dist_2(), cfg.pathloss_exp);
    return {cfg.eta * cfg.p1_tx * (1.0 - psr.alpha1) / (2.0 * d1),
            cfg.eta * cfg.p2_tx * (1.0 - psr.alpha2) / (2.0 * d2),
            cfg.eta * cfg.cci_recv_power() * (2.0 - psr.alpha1 - psr.alpha2) / 2.0};
}

HarvestCoeffs harvest_coeffs_tsr(const SystemConfig& cfg, const TsrConfig& tsr)
{
    // One harvest slot of (1 - rho1 - rho2) T/2 feeding a T/2 broadcast.
    const double window = 1.0 - tsr.rho1 - tsr.rho2;
    const double d1 = std::pow(cfg.relay_dist_1(), cfg.pathloss_exp);
    const double d2 = std::pow(cfg.relay_dist_2(), cfg.pathloss_exp);
    return {window * cfg.eta * cfg.p1_tx / d1,
            window * cfg.eta * cfg.p2_tx / d2,
            window * cfg.eta * cfg.cci_recv_power()};
}

namespace {

ExpMixture mixture_from_coeffs(const HarvestCoeffs& k, const SystemConfig& cfg)
{
    // The CCI gain is unit-mean under the composite INR convention.
    return ExpMixture::from_component_means(
        {k.user1 * cfg.omega_h1, k.user2 * cfg.omega_h2, k.cci});
}

} // namespace

ExpMixture harvest_mixture_psr(const SystemConfig& cfg, const PsrConfig& psr)
{
    return mixture_from_coeffs(harvest_coeffs_psr(cfg, psr), cfg);
}

ExpMixture harvest_mixture_tsr(const SystemConfig& cfg, const TsrConfig& tsr)
{
    return mixture_from_coeffs(harvest_coeffs_tsr(cfg, tsr), cfg);
}

double dest_min_rate_coeff(const SystemConfig& cfg)
{
    const double d1 = std::pow(cfg.relay_dist_1(), cfg.pathloss_exp);
    const double d2 = std::pow(cfg.relay_dist_2(), cfg.pathloss_exp);
    return d1 * cfg.noise_dest_1 / cfg.omega_g1 + d2 * cfg.noise_dest_2 / cfg.omega_g2;
}

BaselineThresholds baseline_thresholds(double r1, BaselinePrelog prelog)
{
    if (prelog == BaselinePrelog::ThirdSlots) {
        const double u = std::exp2(3.0 * r1) - 1.0;
        return {u, u};
    }
    const PsrThresholds u = psr_thresholds(r1);
    return {u.link, u.broadcast};
}

LinkStats link_stats_baseline(const SystemConfig& cfg, const PsrConfig& psr, int user,
                              BaselinePrelog prelog)
{
    LinkStats stats = link_stats_psr(cfg, psr, user);
    stats.mean_inr = 0.0;
    stats.threshold = baseline_thresholds(cfg.target_rate, prelog).link;
    return stats;
}

HarvestCoeffs harvest_coeffs_baseline(const SystemConfig& cfg, const PsrConfig& psr,
                                      BaselinePrelog prelog)
{
    HarvestCoeffs k = harvest_coeffs_psr(cfg, psr);
    k.cci = 0.0;
    if (prelog == BaselinePrelog::ThirdSlots) {
        // Equal T/3 slots: harvest window matches the broadcast window.
        k.user1 *= 2.0;
        k.user2 *= 2.0;
    }
    return k;
}

ExpMixture harvest_mixture_baseline(const SystemConfig& cfg, const PsrConfig& psr,
                                    BaselinePrelog prelog)
{
    return mixture_from_coeffs(harvest_coeffs_baseline(cfg, psr, prelog), cfg);
}

} // namespace twrelay
