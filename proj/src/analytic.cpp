#include "twrelay/analytic.hpp"

#include "twrelay/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twrelay {

namespace {

void check_link_stats(const LinkStats& stats)
{
    if (!(stats.threshold > 0.0))
        throw std::domain_error("link_outage: threshold must be > 0");
    if (!(stats.mean_snr > 0.0))
        throw std::domain_error("link_outage: mean_snr must be > 0");
    if (stats.mean_inr < 0.0)
        throw std::domain_error("link_outage: mean_inr must be >= 0");
}

OutageBreakdown combine(double u1, double u2, double bc)
{
    return {u1, u2, bc, 1.0 - (1.0 - u1) * (1.0 - u2) * (1.0 - bc)};
}

} // namespace

double link_outage(const LinkStats& stats, LinkFormula formula)
{
    check_link_stats(stats);
    if (formula == LinkFormula::PaperPrinted)
        return std::clamp(link_outage_paper_raw(stats), 0.0, 1.0);
    const double decay = std::exp(-stats.threshold / stats.mean_snr);
    if (decay == 0.0)
        return 1.0; // threshold overwhelms the link; avoids inf*0 below
    return 1.0 - decay * stats.mean_snr /
           (stats.mean_snr + stats.threshold * stats.mean_inr);
}

double link_outage_paper_raw(const LinkStats& stats)
{
    check_link_stats(stats);
    if (stats.mean_inr == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::exp(1.0 / stats.mean_inr) /
           (stats.mean_snr * (1.0 / stats.mean_snr +
                              1.0 / (stats.threshold * stats.mean_inr)));
}

double broadcast_success(const ExpMixture& mix, double lambda_l, double u_bc)
{
    if (!(lambda_l > 0.0) || !std::isfinite(lambda_l))
        throw std::domain_error("broadcast_success: lambda_l must be finite and > 0");
    if (!(u_bc > 0.0))
        throw std::domain_error("broadcast_success: u_bc must be > 0");
    if (mix.empty() || !std::isfinite(u_bc))
        return 0.0;
    double success = 0.0;
    for (std::size_t i = 0; i < mix.rates().size(); ++i) {
        const double c = lambda_l * u_bc * mix.rates()[i];
        if (c > 1400.0)
            continue; // K1 underflow region; the term is numerically zero
        const double z = 2.0 * std::sqrt(c);
        success += mix.weights()[i] * z * specfun::bessel_k1(z);
    }
    return std::clamp(success, 0.0, 1.0);
}

OutageBreakdown system_outage_psr(const SystemConfig& cfg, const PsrConfig& psr,
                                  LinkFormula formula)
{
    cfg.validate();
    psr.validate();
    const double u1 = link_outage(link_stats_psr(cfg, psr, 1), formula);
    const double u2 = link_outage(link_stats_psr(cfg, psr, 2), formula);
    const double bc = 1.0 - broadcast_success(harvest_mixture_psr(cfg, psr),
                                              dest_min_rate_coeff(cfg),
                                              psr_thresholds(cfg.target_rate).broadcast);
    return combine(u1, u2, bc);
}

OutageBreakdown system_outage_tsr(const SystemConfig& cfg, const TsrConfig& tsr,
                                  LinkFormula formula)
{
    cfg.validate();
    tsr.validate();
    const double u1 = link_outage(link_stats_tsr(cfg, tsr, 1), formula);
    const double u2 = link_outage(link_stats_tsr(cfg, tsr, 2), formula);
    const double bc = 1.0 - broadcast_success(harvest_mixture_tsr(cfg, tsr),
                                              dest_min_rate_coeff(cfg),
                                              tsr_thresholds(cfg.target_rate, tsr).broadcast);
    return combine(u1, u2, bc);
}

OutageBreakdown system_outage_baseline(const SystemConfig& cfg, const PsrConfig& psr,
                                       BaselinePrelog prelog)
{
    cfg.validate();
    psr.validate();
    const double u1 = link_outage(link_stats_baseline(cfg, psr, 1, prelog));
    const double u2 = link_outage(link_stats_baseline(cfg, psr, 2, prelog));
    const double bc =
        1.0 - broadcast_success(harvest_mixture_baseline(cfg, psr, prelog),
                                dest_min_rate_coeff(cfg),
                                baseline_thresholds(cfg.target_rate, prelog).broadcast);
    return combine(u1, u2, bc);
}

} // namespace twrelay
