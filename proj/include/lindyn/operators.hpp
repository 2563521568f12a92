#pragma once

#include "lindyn/spaces.hpp"

namespace lindyn {

/// Bounded operator on a truncated space, stored as a dense complex matrix.
struct MatOp {
    SpaceDesc domain;
    SpaceDesc codomain;
    Mat entries;

    MatOp() : entries(Mat::Zero(1, 1)) {}

    MatOp(SpaceDesc space, Mat m) : domain(space), codomain(space), entries(std::move(m)) {
        if (entries.rows() != entries.cols())
            throw DimensionError("truncated operators are square");
        if (entries.rows() != domain.dim)
            throw DimensionError("matrix size does not match the space dimension");
        if (!entries.allFinite())
            throw ValidationError("operator entries must be finite");
    }

    MatOp(SpaceDesc dom, SpaceDesc cod, Mat m)
        : domain(dom), codomain(cod), entries(std::move(m)) {
        if (domain.dim != codomain.dim || entries.rows() != entries.cols())
            throw DimensionError("truncated operators are square");
        if (entries.rows() != domain.dim)
            throw DimensionError("matrix size does not match the space dimension");
        if (!entries.allFinite())
            throw ValidationError("operator entries must be finite");
    }

    Index dim() const { return entries.rows(); }
};

MatOp identity_op(const SpaceDesc& space);
MatOp zero_op(const SpaceDesc& space);

SpaceVec apply(const MatOp& t, const SpaceVec& x);

/// Unilateral weighted backward shift: (Bx)_i = w_i x_{i+1}, last coordinate 0.
MatOp weighted_backward_shift(const std::vector<Complex>& weights, const SpaceDesc& space);

/// Weighted forward shift: (Fx)_i = w_{i-1} x_{i-1} for i >= 1, first coordinate 0.
MatOp forward_shift(const std::vector<Complex>& weights, const SpaceDesc& space);

/// Adjoint under the bilinear pairing: plain transpose, living on the dual space,
/// so that <T*f, x> = <f, Tx>.
MatOp adjoint(const MatOp& t);

MatOp left_mult(const MatOp& t, const MatOp& a);   // L_T(A) = TA
MatOp right_mult(const MatOp& t, const MatOp& a);  // R_T(A) = AT

MatOp compose(const MatOp& a, const MatOp& b);

/// T^n by iterated multiplication; preserves exact nilpotency of shift truncations.
MatOp op_power(const MatOp& t, long n);

MatOp scale(const Complex& c, const MatOp& t);
MatOp sum(const MatOp& a, const MatOp& b);
MatOp difference(const MatOp& a, const MatOp& b);

/// Largest singular value (operator norm on the l^2 truncation).
double operator_norm(const MatOp& t);

MatOp inverse(const MatOp& t);

/// Orbit of x under T up to a horizon: samples[n] = T^n x for n = 0..N.
struct ScaledOrbit {
    SpaceVec base;
    MatOp op;
    long horizon = 0;
    std::vector<SpaceVec> samples;
};

ScaledOrbit orbit(const MatOp& t, const SpaceVec& x, long N);

}  // namespace lindyn
