#include "lindyn/ideals.hpp"
#include "lindyn/random.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace lindyn {

Eigen::VectorXd singular_values(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues();
}

namespace {

double lp_norm_real(const Eigen::VectorXd& v, double p) {
    if (v.size() == 0) return 0.0;
    if (p == inf_exponent) return v.cwiseAbs().maxCoeff();
    if (p == 1.0) return v.cwiseAbs().sum();
    if (p == 2.0) return v.norm();
    const double peak = v.cwiseAbs().maxCoeff();
    if (peak == 0.0) return 0.0;
    double acc = 0.0;
    for (Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]) / peak, p);
    return peak * std::pow(acc, 1.0 / p);
}

}  // namespace

double ideal_norm(const Mat& m, const IdealDesc& ideal) {
    const Eigen::VectorXd sv = singular_values(m);
    if (ideal.kind == IdealKind::operator_norm) return sv.size() ? sv(0) : 0.0;
    return lp_norm_real(sv, ideal.schatten_p);
}

double ideal_norm(const IdealElement& e) { return ideal_norm(e.op.entries, e.ideal); }

MultNormBounds mult_norm_bound_check(const MatOp& t, const IdealElement& a) {
    if (t.dim() != a.op.dim()) throw DimensionError("mult_norm_bound_check dimension mismatch");
    const double na = ideal_norm(a);
    MultNormBounds out;
    out.left_lhs = ideal_norm(left_mult(t, a.op).entries, a.ideal);
    out.right_lhs = ideal_norm(right_mult(t, a.op).entries, a.ideal);
    out.rhs = operator_norm(t) * na;
    return out;
}

namespace {

struct WorstTracker {
    bool is_equality;    // equality: track largest relative error; bound: smallest slack
    double worst;
    int at = -1;

    explicit WorstTracker(bool equality)
        : is_equality(equality), worst(equality ? 0.0 : std::numeric_limits<double>::infinity()) {}

    void feed(double lhs, double rhs, int sample) {
        if (is_equality) {
            const double err = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
            if (err > worst) { worst = err; at = sample; }
        } else {
            const double slack = (rhs - lhs) / std::max(std::abs(rhs), 1e-300);
            if (slack < worst) { worst = slack; at = sample; }
        }
    }

    AxiomCheck to_check(const std::string& axiom, int samples, double tol) const {
        AxiomCheck c;
        c.axiom = axiom;
        c.samples = samples;
        c.worst_slack = worst;
        c.witness = at >= 0 ? ("sample " + std::to_string(at)) : "none";
        c.ok = is_equality ? (worst <= tol) : (worst >= -tol);
        return c;
    }
};

}  // namespace

AuditReport audit_ideal_axioms(const IdealDesc& ideal, int samples, std::uint64_t seed) {
    if (samples < 1) throw ValidationError("audit needs at least one sample");
    const Index d = ideal.base.dim;
    std::mt19937_64 rng(seed);

    WorstTracker homogeneity(true), triangle(false), dominance(false), submult(false),
        rank_one(true);

    for (int s = 0; s < samples; ++s) {
        const Mat s1 = random_mat(d, d, rng);
        const Mat s2 = random_mat(d, d, rng);
        const Mat a = random_mat(d, d, rng);
        const Mat b = random_mat(d, d, rng);
        const Complex alpha = random_complex(rng);
        const Vec x = random_vec(d, rng);
        const Vec xs = random_vec(d, rng);

        homogeneity.feed(ideal_norm(alpha * s1, ideal), std::abs(alpha) * ideal_norm(s1, ideal), s);
        triangle.feed(ideal_norm(s1 + s2, ideal), ideal_norm(s1, ideal) + ideal_norm(s2, ideal), s);
        dominance.feed(singular_values(s1)(0), ideal_norm(s1, ideal), s);
        submult.feed(ideal_norm(a * s1 * b, ideal),
                     singular_values(a)(0) * ideal_norm(s1, ideal) * singular_values(b)(0), s);
        rank_one.feed(ideal_norm(x * xs.transpose(), ideal), x.norm() * xs.norm(), s);
    }

    AuditReport report;
    report.ideal = ideal;
    report.seed = seed;
    report.samples = samples;
    report.checks.push_back(homogeneity.to_check("i.linearity.homogeneity", samples, 1e-9));
    report.checks.push_back(triangle.to_check("i.linearity.triangle", samples, 1e-9));
    report.checks.push_back(dominance.to_check("ii.norm_dominance", samples, 1e-9));
    report.checks.push_back(submult.to_check("iii.two_sided_bound", samples, 1e-9));
    report.checks.push_back(rank_one.to_check("iv.rank_one", samples, 1e-10));
    return report;
}

Vec snap_to_grid(const Vec& v, const DyadicGrid& grid, double budget) {
    if (!(budget > 0.0))
        throw GridResolutionError("grid snap budget must be positive", budget);
    const double d = static_cast<double>(v.size());
    int level = 0;
    if (std::isfinite(budget)) {
        // Worst-case l^2 rounding error at level L is 2^{-(L+1)} sqrt(2 d).
        const double need = std::sqrt(2.0 * d) / (0.999 * budget);
        if (need > 1.0) level = std::max(0, static_cast<int>(std::ceil(std::log2(need))) - 1);
    }
    for (; level <= grid.max_level; ++level) {
        const double scale = std::ldexp(1.0, level);
        Vec snapped(v.size());
        for (Index i = 0; i < v.size(); ++i)
            snapped[i] = Complex(std::round(v[i].real() * scale) / scale,
                                 std::round(v[i].imag() * scale) / scale);
        if (!std::isfinite(budget) || (v - snapped).norm() < budget) return snapped;
    }
    throw GridResolutionError("grid resolution cap " + std::to_string(grid.max_level) +
                                  " cannot meet the per-term budget " + std::to_string(budget),
                              budget);
}

Lemma1Result lemma1_approximate(const IdealElement& target, const DyadicGrid& d_grid,
                                const DyadicGrid& phi_grid, double eps) {
    if (!(eps > 0.0)) throw ValidationError("lemma approximation needs eps > 0");
    const IdealDesc& ideal = target.ideal;
    const SpaceDesc base = ideal.base;
    const Mat& t = target.op.entries;

    Eigen::JacobiSVD<Mat> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd sigma = svd.singularValues();
    const Index n_sv = sigma.size();

    // Smallest rank whose dropped tail stays strictly inside the eps/2 budget.
    auto tail_norm = [&](Index r) {
        if (r >= n_sv) return 0.0;
        if (ideal.kind == IdealKind::operator_norm) return sigma(r);
        return lp_norm_real(sigma.tail(n_sv - r), ideal.schatten_p);
    };
    Index rank = 0;
    while (tail_norm(rank) >= eps / 2.0) ++rank;

    Lemma1Result result;
    Mat f_mat = Mat::Zero(base.dim, base.dim);
    struct RawTerm {
        double alpha;
        Vec a;
        Vec phi;
    };
    std::vector<RawTerm> raw;
    for (Index i = 0; i < rank; ++i) {
        if (sigma(i) == 0.0) continue;  // zero coefficients are dropped before budgets
        RawTerm rt{sigma(i), svd.matrixU().col(i), svd.matrixV().col(i).conjugate()};
        f_mat += rt.alpha * (rt.a * rt.phi.transpose());
        raw.push_back(std::move(rt));
    }
    result.finite_rank_error = ideal_norm(t - f_mat, ideal);

    if (raw.empty()) {
        // Target is itself within eps/2 of zero; the zero combo represents it.
        FiniteRankTerm zero{Complex(0.0, 0.0), basis_vector(base, 0), basis_functional(base, 0)};
        result.combo.terms.push_back(std::move(zero));
        result.residual = ideal_norm(t - result.combo.matrix(), ideal);
        result.triangle_bound = result.finite_rank_error;
        return result;
    }

    const double n_terms = static_cast<double>(raw.size());
    double substitution_total = 0.0;
    for (const RawTerm& rt : raw) {
        Lemma1Step step;
        step.coeff = Complex(rt.alpha, 0.0);
        const double a_norm = rt.a.norm();

        step.budget_phi = eps / (4.0 * n_terms * rt.alpha * a_norm);
        const Vec phi_snapped = snap_to_grid(rt.phi, phi_grid, step.budget_phi);
        step.achieved_phi = (rt.phi - phi_snapped).norm();

        const double phi_norm = phi_snapped.norm();
        Vec a_snapped;
        if (phi_norm == 0.0) {
            // Term vanishes entirely; any grid point for the vector factor will do.
            step.budget_x = inf_exponent;
            a_snapped = snap_to_grid(rt.a, d_grid, inf_exponent);
        } else {
            step.budget_x = eps / (4.0 * n_terms * rt.alpha * phi_norm);
            a_snapped = snap_to_grid(rt.a, d_grid, step.budget_x);
        }
        step.achieved_x = (rt.a - a_snapped).norm();

        substitution_total += rt.alpha * (a_norm * step.achieved_phi + step.achieved_x * phi_norm);
        result.combo.terms.push_back(
            {Complex(rt.alpha, 0.0), SpaceVec(base, a_snapped), Functional(base, phi_snapped)});
        result.steps.push_back(step);
    }

    result.residual = ideal_norm(t - result.combo.matrix(), ideal);
    result.triangle_bound = result.finite_rank_error + substitution_total;
    return result;
}

}  // namespace lindyn
