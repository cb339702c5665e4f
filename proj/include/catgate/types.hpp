#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace catgate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Time is in microseconds and every frequency or rate is in rad/us.
// Inputs quoted as "2pi x f MHz" convert to 2 pi f rad/us.
constexpr double two_pi_mhz(double f_mhz) { return kTwoPi * f_mhz; }
constexpr double to_mhz(double rad_per_us) { return rad_per_us / kTwoPi; }

}  // namespace catgate
