#include "taskecon/errors.hpp"
#include "taskecon/extensions.hpp"

namespace taskecon {

SkillWages skill_wages(const EconomyParams& params, const TaskDistribution& skills, double K,
                       const AutomationShare& share, double log_I) {
    params.validate();
    const auto ups = skills.share_at_log(log_I);
    if (ups.automated > share.automated)
        throw DomainError("skill distribution exceeds the automated share: Phi(I) >= Upsilon(I) required");
    SkillWages out;
    out.substituted = ups.automated;
    out.w_low = params.A;
    if (ups.full()) {
        out.w_high = params.A;
        out.R = params.A;
        out.Y = params.A * (K + params.L);
        return out;
    }
    // Substituted workers join the capital stock as effective machines.
    EconomyParams shifted = params;
    shifted.L = params.L * ups.unautomated;
    const auto eq = static_equilibrium(shifted, K + params.L * ups.automated, share);
    out.w_high = eq.w;
    out.R = eq.R;
    out.Y = eq.Y;
    return out;
}

}  // namespace taskecon
