#include "lindyn/spaces.hpp"

#include <cmath>

namespace lindyn {

double lp_norm(const Vec& v, double p) {
    if (v.size() == 0) return 0.0;
    if (p == inf_exponent) return v.cwiseAbs().maxCoeff();
    if (p == 1.0) return v.cwiseAbs().sum();
    if (p == 2.0) return v.norm();
    // General p: rescale by the max modulus to keep powers in range.
    const double peak = v.cwiseAbs().maxCoeff();
    if (peak == 0.0) return 0.0;
    double acc = 0.0;
    for (Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]) / peak, p);
    return peak * std::pow(acc, 1.0 / p);
}

double norm(const SpaceVec& v) { return lp_norm(v.coords, v.space.p); }

double dual_norm(const Functional& f) {
    return lp_norm(f.coords, f.space.conjugate_exponent());
}

Complex dual_pair(const Functional& f, const SpaceVec& z) {
    if (f.space != z.space)
        throw DimensionError("pairing requires functional and vector on the same space");
    return (f.coords.array() * z.coords.array()).sum();
}

SpaceVec rank_one_apply(const RankOne& r, const SpaceVec& z) {
    const Complex c = dual_pair(r.right, z);
    return SpaceVec(r.left.space, c * r.left.coords);
}

namespace {

// Minimum-Frobenius-norm W with columns^T * W = I_m, via complete orthogonal
// decomposition. Throws RankError when the columns are dependent.
Mat min_norm_biorthogonal(const Mat& columns) {
    const Index m = columns.cols();
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(columns.transpose());
    if (cod.rank() < m)
        throw RankError("linear dependence: numerical rank " + std::to_string(cod.rank()) +
                            " < " + std::to_string(m),
                        cod.rank());
    return cod.solve(Mat::Identity(m, m));
}

}  // namespace

std::vector<Functional> dual_basis(const std::vector<SpaceVec>& xs) {
    if (xs.empty()) throw ValidationError("dual_basis needs at least one vector");
    const SpaceDesc space = xs.front().space;
    const Index m = static_cast<Index>(xs.size());
    if (m > space.dim)
        throw ValidationError("more vectors than the space dimension");
    Mat columns(space.dim, m);
    for (Index j = 0; j < m; ++j) {
        if (xs[j].space != space)
            throw DimensionError("dual_basis vectors live on different spaces");
        columns.col(j) = xs[j].coords;
    }
    const Mat w = min_norm_biorthogonal(columns);
    std::vector<Functional> out;
    out.reserve(static_cast<std::size_t>(m));
    for (Index j = 0; j < m; ++j) out.emplace_back(space, w.col(j));
    return out;
}

std::vector<SpaceVec> dual_vectors(const std::vector<Functional>& fs) {
    if (fs.empty()) throw ValidationError("dual_vectors needs at least one functional");
    const SpaceDesc space = fs.front().space;
    const Index m = static_cast<Index>(fs.size());
    if (m > space.dim)
        throw ValidationError("more functionals than the space dimension");
    Mat columns(space.dim, m);
    for (Index j = 0; j < m; ++j) {
        if (fs[j].space != space)
            throw DimensionError("dual_vectors functionals live on different spaces");
        columns.col(j) = fs[j].coords;
    }
    const Mat w = min_norm_biorthogonal(columns);
    std::vector<SpaceVec> out;
    out.reserve(static_cast<std::size_t>(m));
    for (Index j = 0; j < m; ++j) out.emplace_back(space, w.col(j));
    return out;
}

SpaceVec basis_vector(const SpaceDesc& space, Index i) {
    Vec v = Vec::Zero(space.dim);
    v[i] = Complex(1.0, 0.0);
    return SpaceVec(space, std::move(v));
}

Functional basis_functional(const SpaceDesc& space, Index i) {
    Vec v = Vec::Zero(space.dim);
    v[i] = Complex(1.0, 0.0);
    return Functional(space, std::move(v));
}

Index support_width(const Vec& v, double tol) {
    for (Index i = v.size(); i > 0; --i)
        if (std::abs(v[i - 1]) > tol) return i;
    return 0;
}

}  // namespace lindyn
