#pragma once

#include "twrelay/model.hpp"

namespace twrelay {

/// Selects which closed form evaluates the decode-link outage.
/// PaperPrinted keeps the exp(+1/mu)-style expression for side-by-side
/// comparison; Rederived carries the success-region integral through and
/// is the default everywhere.
enum class LinkFormula { PaperPrinted, Rederived };

struct OutageBreakdown {
    double out_u1r = 0.0;
    double out_u2r = 0.0;
    double out_bc = 0.0;
    double out_system = 0.0;
};

/// Outage probability of one decode link under exponential SNR/INR.
/// Rederived: 1 - exp(-u/snr) * snr / (snr + u*inr), natively in [0, 1].
/// PaperPrinted: the exp(1/inr)-form, clamped to [0, 1].
/// Throws std::domain_error on non-positive threshold or mean SNR, or
/// negative mean INR.
double link_outage(const LinkStats& stats, LinkFormula formula = LinkFormula::Rederived);

/// The unclamped PaperPrinted value, for discrepancy reporting.  Returns
/// +infinity when mean_inr == 0.
double link_outage_paper_raw(const LinkStats& stats);

/// Pr[X * L >= u_bc] where X follows the mixture and L is exponential with
/// rate lambda_l: sum_i w_i * 2 sqrt(c_i) K1(2 sqrt(c_i)), c_i = lambda_l *
/// u_bc * r_i.  Terms with c_i > 1400 underflow and contribute 0.  An empty
/// mixture (X identically 0) gives 0.
/// Throws std::domain_error on non-positive lambda_l or u_bc.
double broadcast_success(const ExpMixture& mix, double lambda_l, double u_bc);

OutageBreakdown system_outage_psr(const SystemConfig& cfg, const PsrConfig& psr,
                                  LinkFormula formula = LinkFormula::Rederived);
OutageBreakdown system_outage_tsr(const SystemConfig& cfg, const TsrConfig& tsr,
                                  LinkFormula formula = LinkFormula::Rederived);

/// The CCI-free reference curve used by the comparison figures.
OutageBreakdown system_outage_baseline(const SystemConfig& cfg, const PsrConfig& psr,
                                       BaselinePrelog prelog = BaselinePrelog::ThirdSlots);

} // namespace twrelay
