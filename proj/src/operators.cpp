#include "lindyn/operators.hpp"

#include <Eigen/SVD>

namespace lindyn {

MatOp identity_op(const SpaceDesc& space) {
    return MatOp(space, Mat::Identity(space.dim, space.dim));
}

MatOp zero_op(const SpaceDesc& space) {
    return MatOp(space, Mat::Zero(space.dim, space.dim));
}

SpaceVec apply(const MatOp& t, const SpaceVec& x) {
    if (t.domain.dim != x.space.dim)
        throw DimensionError("operator/vector dimension mismatch");
    return SpaceVec(t.codomain, t.entries * x.coords);
}

namespace {

void check_weights(const std::vector<Complex>& weights, Index d) {
    if (static_cast<Index>(weights.size()) < d - 1)
        throw ValidationError("shift needs at least dim-1 weights");
    for (const Complex& w : weights)
        if (w == Complex(0.0, 0.0)) throw ValidationError("shift weights must be nonzero");
}

}  // namespace

MatOp weighted_backward_shift(const std::vector<Complex>& weights, const SpaceDesc& space) {
    check_weights(weights, space.dim);
    Mat m = Mat::Zero(space.dim, space.dim);
    for (Index i = 0; i + 1 < space.dim; ++i) m(i, i + 1) = weights[static_cast<std::size_t>(i)];
    return MatOp(space, std::move(m));
}

MatOp forward_shift(const std::vector<Complex>& weights, const SpaceDesc& space) {
    check_weights(weights, space.dim);
    Mat m = Mat::Zero(space.dim, space.dim);
    for (Index i = 1; i < space.dim; ++i) m(i, i - 1) = weights[static_cast<std::size_t>(i - 1)];
    return MatOp(space, std::move(m));
}

MatOp adjoint(const MatOp& t) {
    return MatOp(t.codomain.dual(), t.domain.dual(), t.entries.transpose());
}

MatOp left_mult(const MatOp& t, const MatOp& a) {
    if (t.dim() != a.dim()) throw DimensionError("left_mult dimension mismatch");
    return MatOp(a.domain, t.codomain, t.entries * a.entries);
}

MatOp right_mult(const MatOp& t, const MatOp& a) {
    if (t.dim() != a.dim()) throw DimensionError("right_mult dimension mismatch");
    return MatOp(t.domain, a.codomain, a.entries * t.entries);
}

MatOp compose(const MatOp& a, const MatOp& b) {
    if (a.dim() != b.dim()) throw DimensionError("compose dimension mismatch");
    return MatOp(b.domain, a.codomain, a.entries * b.entries);
}

MatOp op_power(const MatOp& t, long n) {
    if (n < 0) throw ValidationError("op_power takes a nonnegative exponent");
    Mat acc = Mat::Identity(t.dim(), t.dim());
    for (long i = 0; i < n; ++i) acc = t.entries * acc;
    return MatOp(t.domain, t.codomain, std::move(acc));
}

MatOp scale(const Complex& c, const MatOp& t) {
    return MatOp(t.domain, t.codomain, c * t.entries);
}

MatOp sum(const MatOp& a, const MatOp& b) {
    if (a.dim() != b.dim()) throw DimensionError("sum dimension mismatch");
    return MatOp(a.domain, a.codomain, a.entries + b.entries);
}

MatOp difference(const MatOp& a, const MatOp& b) {
    if (a.dim() != b.dim()) throw DimensionError("difference dimension mismatch");
    return MatOp(a.domain, a.codomain, a.entries - b.entries);
}

double operator_norm(const MatOp& t) {
    Eigen::JacobiSVD<Mat> svd(t.entries);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

MatOp inverse(const MatOp& t) {
    Eigen::FullPivLU<Mat> lu(t.entries);
    if (!lu.isInvertible())
        throw RankError("operator is not invertible (numerical rank " +
                            std::to_string(lu.rank()) + ")",
                        lu.rank());
    return MatOp(t.codomain, t.domain, lu.inverse());
}

ScaledOrbit orbit(const MatOp& t, const SpaceVec& x, long N) {
    if (N < 0) throw ValidationError("orbit horizon must be nonnegative");
    if (t.domain.dim != x.space.dim)
        throw DimensionError("orbit operator/vector dimension mismatch");
    ScaledOrbit out{x, t, N, {}};
    out.samples.reserve(static_cast<std::size_t>(N) + 1);
    out.samples.push_back(x);
    for (long n = 1; n <= N; ++n) out.samples.push_back(apply(t, out.samples.back()));
    return out;
}

}  // namespace lindyn
