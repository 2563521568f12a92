#pragma once

#include "lindyn/spaces.hpp"

#include <cstdint>
#include <random>

namespace lindyn {

/// Standard complex Gaussian draws from a seeded engine. All stochastic code in
/// the library goes through these so runs are reproducible per seed.
inline Complex random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return Complex(g(rng), g(rng));
}

inline Vec random_vec(Index d, std::mt19937_64& rng) {
    Vec v(d);
    for (Index i = 0; i < d; ++i) v[i] = random_complex(rng);
    return v;
}

inline Mat random_mat(Index rows, Index cols, std::mt19937_64& rng) {
    Mat m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = random_complex(rng);
    return m;
}

/// Uniform point on the unit sphere of l^2_d (normalized complex Gaussian).
inline Vec random_unit_vec(Index d, std::mt19937_64& rng) {
    Vec v = random_vec(d, rng);
    double n = v.norm();
    while (n == 0.0) {
        v = random_vec(d, rng);
        n = v.norm();
    }
    return v / n;
}

/// Haar-ish random unitary via QR of a complex Gaussian matrix.
inline Mat random_unitary(Index d, std::mt19937_64& rng) {
    Eigen::HouseholderQR<Mat> qr(random_mat(d, d, rng));
    Mat q = qr.householderQ();
    return q;
}

}  // namespace lindyn
