#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ltmv {

using Complex = std::complex<double>;

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using CVec2 = Eigen::Vector2cd;
using CMat2 = Eigen::Matrix2cd;

/// Diagonal matrix with entries (d0, d1).
inline Mat2 diag2(double d0, double d1) {
    Mat2 m;
    m << d0, 0.0, 0.0, d1;
    return m;
}

}  // namespace ltmv
