#include "cancelfield/jetalg/diff_expr.hpp"

#include "cancelfield/error.hpp"

#include <algorithm>
#include <set>

namespace cancelfield::jet {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(const JetVar& j, std::uint32_t power) {
    if (power > 0) factors_.emplace_back(j, power);
}

Monomial Monomial::mu_power(std::uint32_t n) {
    Monomial m;
    m.mu_ = n;
    return m;
}

Monomial Monomial::kappa_power(std::uint32_t n) {
    Monomial m;
    m.kappa_ = n;
    return m;
}

std::uint32_t Monomial::degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& [j, p] : factors_) d += p;
    return d;
}

std::uint32_t Monomial::power_of(const JetVar& j) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), j,
                               [](const Factor& f, const JetVar& v) { return f.first < v; });
    return (it != factors_.end() && it->first == j) ? it->second : 0;
}

Monomial Monomial::without(const JetVar& j) const {
    Monomial m = *this;
    std::erase_if(m.factors_, [&](const Factor& f) { return f.first == j; });
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.mu_ = a.mu_ + b.mu_;
    r.kappa_ = a.kappa_ + b.kappa_;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
            r.factors_.push_back(*ia++);
        } else if (ia == a.factors_.end() || ib->first < ia->first) {
            r.factors_.push_back(*ib++);
        } else {
            r.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.factors_ <=> b.factors_; c != 0) return c;
    if (auto c = a.mu_ <=> b.mu_; c != 0) return c;
    return a.kappa_ <=> b.kappa_;
}

// ---------------------------------------------------------------------------
// DiffExpr
// ---------------------------------------------------------------------------

DiffExpr::DiffExpr(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

DiffExpr::DiffExpr(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.emplace(m, c);
}

Rational DiffExpr::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DiffExpr::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<JetVar> DiffExpr::jets() const {
    std::set<JetVar> seen;
    for (const auto& [m, c] : terms_) {
        for (const auto& [j, p] : m.factors()) seen.insert(j);
    }
    return {seen.begin(), seen.end()};
}

bool DiffExpr::contains(const std::function<bool(const JetVar&)>& pred) const {
    for (const auto& [m, c] : terms_) {
        for (const auto& [j, p] : m.factors()) {
            if (pred(j)) return true;
        }
    }
    return false;
}

DiffExpr& DiffExpr::operator+=(const DiffExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffExpr& DiffExpr::operator-=(const DiffExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffExpr& DiffExpr::operator*=(const DiffExpr& o) {
    *this = *this * o;
    return *this;
}

DiffExpr& DiffExpr::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) {
    DiffExpr r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

DiffExpr operator-(DiffExpr a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

DiffExpr DiffExpr::pow(std::uint32_t n) const {
    DiffExpr result(1);
    DiffExpr base = *this;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Calculus and substitution
// ---------------------------------------------------------------------------

namespace {

// d/d(axis) of a single jet, as an expression.
DiffExpr derive_jet(const JetVar& j, Axis axis) {
    if (j.base == Base::zcoord) return DiffExpr(axis == Axis::z ? 1 : 0);
    return DiffExpr::jet(j.derived(axis));
}

DiffExpr differentiate_once(const DiffExpr& e, Axis axis) {
    DiffExpr out;
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [j, p] : m.factors()) {
            DiffExpr dj = derive_jet(j, axis);
            if (dj.is_zero()) continue;
            Monomial rest = m.without(j);
            if (p > 1) rest = rest * Monomial(j, p - 1);
            for (const auto& [mj, cj] : dj.terms()) out.add_term(rest * mj, c * p * cj);
        }
    }
    return out;
}

} // namespace

DiffExpr differentiate(const DiffExpr& e, Axis axis, unsigned times) {
    DiffExpr r = e;
    for (unsigned i = 0; i < times && !r.is_zero(); ++i) r = differentiate_once(r, axis);
    return r;
}

DiffExpr substitute(const DiffExpr& e, const JetVar& target, const DiffExpr& replacement) {
    DiffExpr out;
    std::vector<DiffExpr> powers{DiffExpr(1)};
    for (const auto& [m, c] : e.terms()) {
        std::uint32_t p = m.power_of(target);
        if (p == 0) {
            out.add_term(m, c);
            continue;
        }
        while (powers.size() <= p) powers.push_back(powers.back() * replacement);
        Monomial rest = m.without(target);
        for (const auto& [mr, cr] : powers[p].terms()) out.add_term(rest * mr, c * cr);
    }
    return out;
}

DiffExpr substitute_all(const DiffExpr& e, const std::function<std::optional<DiffExpr>(const JetVar&)>& f) {
    DiffExpr out;
    for (const auto& [m, c] : e.terms()) {
        DiffExpr term(Monomial::mu_power(m.mu()) * Monomial::kappa_power(m.kappa()), c);
        for (const auto& [j, p] : m.factors()) {
            if (auto r = f(j)) {
                term *= r->pow(p);
            } else {
                term *= DiffExpr(Monomial(j, p));
            }
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

DiffExpr evaluate_parameters(const DiffExpr& e, const Rational& mu, const Rational& kappa) {
    DiffExpr out;
    for (const auto& [m, c] : e.terms()) {
        Rational scale = c;
        for (std::uint32_t i = 0; i < m.mu(); ++i) scale *= mu;
        for (std::uint32_t i = 0; i < m.kappa(); ++i) scale *= kappa;
        Monomial stripped;
        for (const auto& [j, p] : m.factors()) stripped = stripped * Monomial(j, p);
        out.add_term(stripped, scale);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tangential order
// ---------------------------------------------------------------------------

const TangentialWeights& default_tangential_weights() {
    static const TangentialWeights weights = {
        {Base::u, 0},      {Base::f, 0},    {Base::psi, 0},  {Base::test, 0}, {Base::pE, 0},
        {Base::theta1, 0}, {Base::theta2, 0}, {Base::w, 1},  {Base::h, 1},    {Base::ubar, 0},
        {Base::wbar, 1},   {Base::src, 0},  {Base::zcoord, 0},
    };
    return weights;
}

int tangential_order(const Monomial& m, const TangentialWeights& weights) {
    int order = 0;
    for (const auto& [j, p] : m.factors()) {
        if (j.has_time()) throw TimeJetPresent("time jet " + to_string(j) + " present; reduce first");
        auto it = weights.find(j.base);
        int w = it == weights.end() ? 0 : it->second;
        order = std::max(order, static_cast<int>(j.dx) + w);
    }
    return order;
}

int tangential_order(const DiffExpr& e, const TangentialWeights& weights) {
    int order = 0;
    for (const auto& [m, c] : e.terms()) order = std::max(order, tangential_order(m, weights));
    return order;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string to_string(const Monomial& m) {
    std::string s;
    auto append = [&](const std::string& factor, std::uint32_t p) {
        if (!s.empty()) s += '*';
        s += factor;
        if (p > 1) s += '^' + std::to_string(p);
    };
    if (m.mu() > 0) append("mu", m.mu());
    if (m.kappa() > 0) append("kappa", m.kappa());
    for (const auto& [j, p] : m.factors()) append(to_string(j), p);
    return s.empty() ? "1" : s;
}

std::string to_string(const DiffExpr& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_constant()) {
            s += mag.str();
        } else if (mag == 1) {
            s += to_string(m);
        } else {
            s += mag.str() + '*' + to_string(m);
        }
    }
    return s;
}

} // namespace cancelfield::jet
