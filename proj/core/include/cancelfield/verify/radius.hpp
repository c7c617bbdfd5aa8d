#pragma once

#include <vector>

namespace cancelfield::verify {

/// q(m, ρ̃) = m (ρ̃/ρ)^m (ρ − ρ̃)/ρ.
double radius_q(unsigned m, double rho_tilde, double rho) noexcept;

struct RadiusRow {
    unsigned m{0};
    double max_sampled{0.0};
    double argmax_sampled{0.0};
    double maximizer{0.0};       // ρ m/(m+1)
    double q_at_maximizer{0.0};  // radius_q evaluated there
    double closed_form{0.0};     // (m/(m+1))^{m+1}
};

struct RadiusReport {
    double rho{1.0};
    unsigned samples{0};
    std::vector<RadiusRow> rows;
    double max_q{0.0};               // over all m and samples
    double max_closed_form_dev{0.0}; // max |q_at_maximizer − closed_form|
    bool sampled_below_closed_form{true};
    bool all_le_one{true};
};

/// Samples ρ̃_j = ρ (j + 1/2)/samples for j < samples, for every m in
/// [1, m_max]. Throws Error unless m_max ≥ 1, rho > 0 and samples ≥ 10.
RadiusReport radius_inequality_check(unsigned m_max, double rho, unsigned samples);

} // namespace cancelfield::verify
