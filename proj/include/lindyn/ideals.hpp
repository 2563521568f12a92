#pragma once

#include "lindyn/operators.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace lindyn {

enum class IdealKind { schatten, operator_norm };

/// Admissible ideal at finite truncation. Two concrete models: Schatten-p and
/// the operator-norm ideal (K(X) analogue). Both are anchored on the self-dual
/// base l^2_d, where the rank-one axiom holds exactly.
struct IdealDesc {
    IdealKind kind = IdealKind::schatten;
    double schatten_p = 2.0;
    SpaceDesc base;

    static IdealDesc schatten(double p, const SpaceDesc& base_space) {
        if (p == inf_exponent) return opnorm(base_space);
        if (!(p >= 1.0)) throw ValidationError("Schatten exponent must satisfy p >= 1");
        require_hilbert_base(base_space);
        IdealDesc d;
        d.kind = IdealKind::schatten;
        d.schatten_p = p;
        d.base = base_space;
        return d;
    }

    static IdealDesc opnorm(const SpaceDesc& base_space) {
        require_hilbert_base(base_space);
        IdealDesc d;
        d.kind = IdealKind::operator_norm;
        d.schatten_p = inf_exponent;
        d.base = base_space;
        return d;
    }

    std::string name() const {
        if (kind == IdealKind::operator_norm) return "operator_norm";
        return "schatten(" + std::to_string(schatten_p) + ")";
    }

    bool operator==(const IdealDesc&) const = default;

private:
    static void require_hilbert_base(const SpaceDesc& s) {
        if (s.p != 2.0)
            throw ValidationError("ideal norms are SVD-based; the base space must have p = 2");
    }
};

struct IdealElement {
    MatOp op;
    IdealDesc ideal;

    IdealElement(MatOp t, IdealDesc d) : op(std::move(t)), ideal(std::move(d)) {
        if (op.dim() != ideal.base.dim)
            throw DimensionError("ideal element does not match the ideal's base space");
    }
};

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const Mat& m);

/// Schatten-p norm (l^p of the singular values) or operator norm (largest one).
double ideal_norm(const Mat& m, const IdealDesc& ideal);
double ideal_norm(const IdealElement& e);

/// Both sides of the multiplication bounds at once:
/// left_lhs = |TA|_J, right_lhs = |AT|_J, rhs = |T| |A|_J.
struct MultNormBounds {
    double left_lhs;
    double right_lhs;
    double rhs;
};
MultNormBounds mult_norm_bound_check(const MatOp& t, const IdealElement& a);

struct AxiomCheck {
    std::string axiom;
    int samples = 0;
    double worst_slack = 0.0;  // signed slack for bounds, relative error for equalities
    std::string witness;
    bool ok = true;
};

struct AuditReport {
    IdealDesc ideal;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<AxiomCheck> checks;

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Randomized audit of the four Banach-ideal axioms on `samples` seeded draws.
/// Failures land in the report, never as exceptions.
AuditReport audit_ideal_axioms(const IdealDesc& ideal, int samples, std::uint64_t seed);

struct FiniteRankTerm {
    Complex coeff;
    SpaceVec x;
    Functional phi;
};

/// F = sum_i coeff_i x_i (x) phi_i, the spanning elements of Lemma-style
/// approximations. Kept with its decomposition; matrix() materializes it.
struct FiniteRankCombo {
    std::vector<FiniteRankTerm> terms;

    Mat matrix() const {
        if (terms.empty()) throw ValidationError("finite-rank combo must be nonempty");
        const Index d = terms.front().x.space.dim;
        Mat acc = Mat::Zero(d, d);
        for (const auto& t : terms)
            acc += t.coeff * (t.x.coords * t.phi.coords.transpose());
        return acc;
    }
};

/// Countable dense generator: dyadic-rational complex grid with a resolution cap.
/// snap() picks the coarsest level meeting a requested l^2 budget.
struct DyadicGrid {
    int max_level = 40;
};

/// Thrown when a per-term budget cannot be met at the grid's resolution cap.
struct GridResolutionError : ValidationError {
    double failing_budget;
    GridResolutionError(const std::string& msg, double budget)
        : ValidationError(msg), failing_budget(budget) {}
};

/// Nearest grid point at the coarsest level whose worst-case rounding error is
/// strictly below `budget`; throws GridResolutionError past the cap.
Vec snap_to_grid(const Vec& v, const DyadicGrid& grid, double budget);

struct Lemma1Step {
    Complex coeff;
    double budget_phi = 0.0;
    double achieved_phi = 0.0;
    double budget_x = 0.0;
    double achieved_x = 0.0;
};

struct Lemma1Result {
    FiniteRankCombo combo;
    double finite_rank_error = 0.0;        // |target - F|_J after SVD truncation
    double residual = 0.0;                 // |target - combo|_J, recomputed
    double triangle_bound = 0.0;           // eps/2 + sum of per-term contributions
    std::vector<Lemma1Step> steps;
};

/// Constructive approximation from the density lemma: SVD-truncated finite-rank
/// stage within eps/2, then per-term substitution onto the grids within the
/// eps/(4N |alpha| |.|) budgets, functional first, then vector.
Lemma1Result lemma1_approximate(const IdealElement& target, const DyadicGrid& d_grid,
                                const DyadicGrid& phi_grid, double eps);

}  // namespace lindyn
