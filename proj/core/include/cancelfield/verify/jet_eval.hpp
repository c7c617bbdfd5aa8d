#pragma once

#include "cancelfield/jetalg/diff_expr.hpp"
#include "cancelfield/numerics/field.hpp"
#include "cancelfield/verify/manufactured.hpp"

#include <map>
#include <optional>

namespace cancelfield::verify {

using jet::DiffExpr;
using jet::JetVar;
using num::Grid2D;
using num::ScalarField2D;

/// Supplies grid samples of spatial jets. ∂_t-jets are rejected: callers
/// eliminate them symbolically first.
class JetSource {
public:
    virtual ~JetSource() = default;
    virtual const Grid2D& grid() const = 0;
    virtual double mu() const = 0;
    virtual double kappa() const = 0;
    /// Cached; throws TimeJetPresent for dt > 0 and Error for bases the
    /// source does not know.
    const ScalarField2D& jet(const JetVar& j);

protected:
    virtual ScalarField2D compute(const JetVar& j) = 0;

private:
    std::map<JetVar, ScalarField2D> cache_;
};

/// Exact derivatives of the case's closed forms at time t. p^E jets come
/// from the closed-form ∂_x p^E, so only dx ≥ 1, dz = 0 is defined (dz > 0
/// gives 0). `test` supplies the test base.
class ClosedFormJets : public JetSource {
public:
    ClosedFormJets(const ManufacturedCase& c, const Grid2D& g, double t, std::optional<ClosedForm> test = std::nullopt);
    const Grid2D& grid() const override { return grid_; }
    double mu() const override { return case_.mu; }
    double kappa() const override { return case_.kappa; }

protected:
    ScalarField2D compute(const JetVar& j) override;

private:
    const ManufacturedCase& case_;
    Grid2D grid_;
    double t_;
    std::optional<ClosedForm> test_;
    ClosedForm px_;
};

/// Jets by the discrete stencils from sampled u (and f): w = reconstruct_w(u),
/// (ψ, h) = reconstruct_psi_h(f). Pairs of like derivatives use the 3-point
/// second-derivative stencil. p^E and test stay exact, as in ClosedFormJets.
class DiscreteJets : public JetSource {
public:
    DiscreteJets(const ManufacturedCase& c, const Grid2D& g, double t, std::optional<ClosedForm> test = std::nullopt);
    const Grid2D& grid() const override { return grid_; }
    double mu() const override { return case_.mu; }
    double kappa() const override { return case_.kappa; }

protected:
    ScalarField2D compute(const JetVar& j) override;

private:
    const ManufacturedCase& case_;
    Grid2D grid_;
    double t_;
    std::optional<ClosedForm> test_;
    ClosedForm px_;
    std::map<jet::Base, ScalarField2D> base_;
};

/// Σ coefficient · Π jet^power · μ^a κ^b on the grid.
ScalarField2D evaluate(const DiffExpr& e, JetSource& src);

} // namespace cancelfield::verify
