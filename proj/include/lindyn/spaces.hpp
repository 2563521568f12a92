#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lindyn {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using Index = Eigen::Index;

inline constexpr double inf_exponent = std::numeric_limits<double>::infinity();

/// Thrown when operands live on incompatible spaces or have mismatched sizes.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown on invalid parameters (bad exponent, empty index list, zero scalar, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a solve meets a rank-deficient system; carries the numerical rank.
struct RankError : std::invalid_argument {
    Index numerical_rank;
    RankError(const std::string& msg, Index rank)
        : std::invalid_argument(msg), numerical_rank(rank) {}
};

/// Descriptor of a truncated complex sequence space l^p_d.
struct SpaceDesc {
    double p = 2.0;
    Index dim = 1;

    SpaceDesc() = default;
    SpaceDesc(double p_, Index dim_) : p(p_), dim(dim_) {
        if (!(p >= 1.0))
            throw ValidationError("space exponent must satisfy p >= 1 (or be infinite)");
        if (dim < 1)
            throw ValidationError("space dimension must be at least 1");
    }

    /// Conjugate exponent q with 1/p + 1/q = 1.
    double conjugate_exponent() const {
        if (p == inf_exponent) return 1.0;
        if (p == 1.0) return inf_exponent;
        return p / (p - 1.0);
    }

    /// Descriptor of the dual space l^q_d.
    SpaceDesc dual() const { return SpaceDesc(conjugate_exponent(), dim); }

    bool operator==(const SpaceDesc&) const = default;
};

/// Element of a truncated space: d complex coordinates.
struct SpaceVec {
    SpaceDesc space;
    Vec coords;

    SpaceVec() : coords(Vec::Zero(1)) {}
    SpaceVec(SpaceDesc s, Vec c) : space(s), coords(std::move(c)) {
        if (coords.size() != space.dim)
            throw DimensionError("vector has " + std::to_string(coords.size()) +
                                 " coordinates, space has dim " + std::to_string(space.dim));
    }
};

/// Element of the truncated dual: coordinates read in l^q, q conjugate to p.
/// `space` is the descriptor of the predual.
struct Functional {
    SpaceDesc space;
    Vec coords;

    Functional() : coords(Vec::Zero(1)) {}
    Functional(SpaceDesc s, Vec c) : space(s), coords(std::move(c)) {
        if (coords.size() != space.dim)
            throw DimensionError("functional has " + std::to_string(coords.size()) +
                                 " coordinates, space has dim " + std::to_string(space.dim));
    }
};

/// Rank one operator x (x) x* acting as z -> <x*, z> x.
struct RankOne {
    SpaceVec left;
    Functional right;

    RankOne(SpaceVec x, Functional f) : left(std::move(x)), right(std::move(f)) {
        if (left.space != right.space)
            throw DimensionError("rank-one factors live on different spaces");
    }

    /// Dense matrix x * phi^T (bilinear pairing, no conjugation).
    Mat matrix() const { return left.coords * right.coords.transpose(); }
};

/// l^p norm of raw coordinates; max modulus when p is infinite.
double lp_norm(const Vec& v, double p);

/// Norm of a space element in its own l^p.
double norm(const SpaceVec& v);

/// Dual norm: l^q of the coordinates, q conjugate to the predual's p.
double dual_norm(const Functional& f);

/// Bilinear pairing <f, z> = sum f_i z_i. No conjugation is applied.
Complex dual_pair(const Functional& f, const SpaceVec& z);

/// (x (x) x*)(z) = <x*, z> x.
SpaceVec rank_one_apply(const RankOne& r, const SpaceVec& z);

/// Functionals phi_1..phi_m with <phi_i, x_j> = delta_ij; minimum-Euclidean-norm
/// solution of the biorthogonality system. Throws RankError when the xs are
/// linearly dependent (message carries the numerical rank).
std::vector<Functional> dual_basis(const std::vector<SpaceVec>& xs);

/// Vectors v_1..v_m with <f_i, v_j> = delta_ij, same minimum-norm convention.
std::vector<SpaceVec> dual_vectors(const std::vector<Functional>& fs);

SpaceVec basis_vector(const SpaceDesc& space, Index i);
Functional basis_functional(const SpaceDesc& space, Index i);

/// Number of leading coordinates carrying the support: 1 + largest index with
/// |coord| > tol, or 0 for the zero vector.
Index support_width(const Vec& v, double tol = 0.0);

}  // namespace lindyn
