#pragma once

#include "cancelfield/jetalg/jet_var.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cancelfield::jet {

using Rational = boost::multiprecision::cpp_rational;

/// A product of jet powers times μ^mu · κ^kappa. Factors are kept sorted by
/// JetVar with strictly positive powers, so equal products compare equal.
class Monomial {
public:
    using Factor = std::pair<JetVar, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(const JetVar& j, std::uint32_t power = 1);

    static Monomial mu_power(std::uint32_t n);
    static Monomial kappa_power(std::uint32_t n);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::uint32_t mu() const noexcept { return mu_; }
    std::uint32_t kappa() const noexcept { return kappa_; }

    /// Total jet degree (parameters excluded).
    std::uint32_t degree() const noexcept;
    bool is_constant() const noexcept { return factors_.empty() && mu_ == 0 && kappa_ == 0; }
    std::uint32_t power_of(const JetVar& j) const noexcept;

    /// Same monomial with every occurrence of `j` removed.
    Monomial without(const JetVar& j) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// Canonical order: graded by degree, then lexicographic on the sorted
    /// factor list (base, dt, dx, dz, power), then parameter powers.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<Factor> factors_;
    std::uint32_t mu_{0};
    std::uint32_t kappa_{0};
};

/// Exact-coefficient polynomial over jets and the parameters μ, κ.
class DiffExpr {
public:
    using TermMap = std::map<Monomial, Rational>;

    DiffExpr() = default;
    DiffExpr(const Rational& c); // NOLINT(google-explicit-constructor)
    DiffExpr(long long c) : DiffExpr(Rational(c)) {} // NOLINT(google-explicit-constructor)
    DiffExpr(int c) : DiffExpr(Rational(c)) {}       // NOLINT(google-explicit-constructor)
    DiffExpr(const Monomial& m, const Rational& c = 1);

    static DiffExpr jet(const JetVar& j) { return DiffExpr(Monomial(j)); }
    static DiffExpr jet(Base b, std::uint16_t dt = 0, std::uint16_t dx = 0, std::uint16_t dz = 0) {
        return jet(jv(b, dt, dx, dz));
    }
    static DiffExpr mu() { return DiffExpr(Monomial::mu_power(1)); }
    static DiffExpr kappa() { return DiffExpr(Monomial::kappa_power(1)); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    /// Every distinct jet appearing anywhere, in canonical order.
    std::vector<JetVar> jets() const;
    bool contains(const std::function<bool(const JetVar&)>& pred) const;

    DiffExpr& operator+=(const DiffExpr& o);
    DiffExpr& operator-=(const DiffExpr& o);
    DiffExpr& operator*=(const DiffExpr& o);
    DiffExpr& operator*=(const Rational& c);

    friend DiffExpr operator+(DiffExpr a, const DiffExpr& b) { return a += b; }
    friend DiffExpr operator-(DiffExpr a, const DiffExpr& b) { return a -= b; }
    friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
    friend DiffExpr operator*(DiffExpr a, const Rational& c) { return a *= c; }
    friend DiffExpr operator*(const Rational& c, DiffExpr a) { return a *= c; }
    friend DiffExpr operator-(DiffExpr a);
    friend bool operator==(const DiffExpr& a, const DiffExpr& b) = default;

    DiffExpr pow(std::uint32_t n) const;

    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

/// Formal total derivative along `axis` (Leibniz rule over jets).
DiffExpr differentiate(const DiffExpr& e, Axis axis, unsigned times = 1);

/// Replace every occurrence of jet `target` by `replacement`.
DiffExpr substitute(const DiffExpr& e, const JetVar& target, const DiffExpr& replacement);

/// Map each jet through `f`; jets for which `f` returns nullopt are kept.
DiffExpr substitute_all(const DiffExpr& e, const std::function<std::optional<DiffExpr>(const JetVar&)>& f);

/// Set μ and/or κ to the given rational values.
DiffExpr evaluate_parameters(const DiffExpr& e, const Rational& mu, const Rational& kappa);

using TangentialWeights = std::map<Base, int>;

/// u, f, ψ, p^E, θ and test weigh 0; w and h weigh +1 (w ~ ∫∂_x u dz).
const TangentialWeights& default_tangential_weights();

int tangential_order(const Monomial& m, const TangentialWeights& weights = default_tangential_weights());

/// Max over terms and factors of dx + weight(base). Throws TimeJetPresent
/// if any ∂_t-jet survives; 0 for constants.
int tangential_order(const DiffExpr& e, const TangentialWeights& weights = default_tangential_weights());

std::string to_string(const Monomial& m);
std::string to_string(const DiffExpr& e);

} // namespace cancelfield::jet
