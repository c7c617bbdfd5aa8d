#include "cancelfield/verify/radius.hpp"

#include "cancelfield/error.hpp"

#include <algorithm>
#include <cmath>

namespace cancelfield::verify {

double radius_q(unsigned m, double rho_tilde, double rho) noexcept {
    const double x = rho_tilde / rho;
    return m * std::pow(x, m) * (1.0 - x);
}

RadiusReport radius_inequality_check(unsigned m_max, double rho, unsigned samples) {
    if (m_max < 1) throw Error("radius check: m_max must be at least 1");
    if (!(rho > 0.0)) throw Error("radius check: rho must be positive");
    if (samples < 10) throw Error("radius check: need at least 10 samples");
    RadiusReport r;
    r.rho = rho;
    r.samples = samples;
    r.rows.reserve(m_max);
    for (unsigned m = 1; m <= m_max; ++m) {
        RadiusRow row;
        row.m = m;
        for (unsigned j = 0; j < samples; ++j) {
            const double rt = rho * (j + 0.5) / samples;
            const double q = radius_q(m, rt, rho);
            if (q > row.max_sampled) {
                row.max_sampled = q;
                row.argmax_sampled = rt;
            }
        }
        const double md = m;
        row.maximizer = rho * md / (md + 1.0);
        row.q_at_maximizer = radius_q(m, row.maximizer, rho);
        row.closed_form = std::exp((md + 1.0) * std::log1p(-1.0 / (md + 1.0)));
        r.max_q = std::max({r.max_q, row.max_sampled, row.q_at_maximizer});
        r.max_closed_form_dev = std::max(r.max_closed_form_dev, std::abs(row.q_at_maximizer - row.closed_form));
        // Sampled maxima may only touch the closed form from below.
        if (row.max_sampled > row.closed_form * (1.0 + 1e-12)) r.sampled_below_closed_form = false;
        r.rows.push_back(row);
    }
    r.all_le_one = r.max_q <= 1.0;
    return r;
}

} // namespace cancelfield::verify
