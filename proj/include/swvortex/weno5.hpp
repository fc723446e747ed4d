#pragma once

// Fifth-order WENO reconstruction from five consecutive cell averages
// v[0..4] (cells i-2..i+2, unit width, central cell on [-1/2, 1/2]) to point
// values inside the central cell.  Three quadratic candidates on the
// sub-stencils {i-2,i-1,i}, {i-1,i,i+1}, {i,i+1,i+2} are blended with
// Jiang-Shu nonlinear weights
//
//     alpha_k = d_k(xi) / (eps + beta_k)^2,   w_k = alpha_k / sum(alpha)
//
// where d_k(xi) are the linear weights that recover the quartic
// reconstruction at xi.  eps = 1e-6.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace swvortex {

inline constexpr double kWenoEpsilon = 1e-6;

/// Weights c such that sum_m c[m] * a[m] is the value at xi of the degree
/// (n-1) polynomial whose averages over cells first..first+n-1 equal a.
/// Cell j occupies [j - 1/2, j + 1/2].
std::vector<double> reconstruction_coefficients(int first, int n, double xi);

/// Jiang-Shu smoothness indicators of the three candidate stencils.
inline std::array<double, 3> weno5_smoothness(const double* v) {
  auto sq = [](double a) { return a * a; };
  return {13.0 / 12.0 * sq(v[0] - 2.0 * v[1] + v[2]) + 0.25 * sq(v[0] - 4.0 * v[1] + 3.0 * v[2]),
          13.0 / 12.0 * sq(v[1] - 2.0 * v[2] + v[3]) + 0.25 * sq(v[1] - v[3]),
          13.0 / 12.0 * sq(v[2] - 2.0 * v[3] + v[4]) + 0.25 * sq(3.0 * v[2] - 4.0 * v[3] + v[4])};
}

/// Precomputed WENO5 reconstruction to a fixed set of points in the central
/// cell.  The linear weights must be positive at every point, which holds at
/// the faces and at Gauss-Legendre nodes.
template <std::size_t N>
class Weno5Points {
 public:
  explicit Weno5Points(const std::array<double, N>& xi);

  /// Writes the reconstructed value at each point into out.
  void evaluate(const double* v, double* out) const;
  /// Same with the linear (optimal) weights only.
  void evaluate_linear(const double* v, double* out) const;

  const std::array<std::array<double, 3>, N>& linear_weights() const { return linear_; }

 private:
  // candidate_[pt][k][m]: weight of v[k + m] in candidate k at point pt.
  std::array<std::array<std::array<double, 3>, 3>, N> candidate_{};
  std::array<std::array<double, 3>, N> linear_{};
};

struct FaceValues {
  double left = 0.0;   ///< value at xi = -1/2
  double right = 0.0;  ///< value at xi = +1/2
};

/// Classical WENO5 reconstruction to both faces of the central cell.
FaceValues weno5_reconstruct(std::span<const double, 5> v);

/// WENO5 reconstruction to a single point xi of the central cell.
double weno5_point(std::span<const double, 5> v, double xi);

// ---------------------------------------------------------------------------

template <std::size_t N>
Weno5Points<N>::Weno5Points(const std::array<double, N>& xi) {
  for (std::size_t pt = 0; pt < N; ++pt) {
    for (int k = 0; k < 3; ++k) {
      const auto c = reconstruction_coefficients(k - 2, 3, xi[pt]);
      for (int m = 0; m < 3; ++m) candidate_[pt][k][m] = c[m];
    }
    const auto full = reconstruction_coefficients(-2, 5, xi[pt]);
    // v[0] only enters candidate 0 and v[4] only candidate 2.
    const double d0 = full[0] / candidate_[pt][0][0];
    const double d2 = full[4] / candidate_[pt][2][2];
    linear_[pt] = {d0, 1.0 - d0 - d2, d2};
  }
}

template <std::size_t N>
void Weno5Points<N>::evaluate(const double* v, double* out) const {
  const auto [b0, b1, b2] = weno5_smoothness(v);
  const double s0 = 1.0 / ((kWenoEpsilon + b0) * (kWenoEpsilon + b0));
  const double s1 = 1.0 / ((kWenoEpsilon + b1) * (kWenoEpsilon + b1));
  const double s2 = 1.0 / ((kWenoEpsilon + b2) * (kWenoEpsilon + b2));
  for (std::size_t pt = 0; pt < N; ++pt) {
    const auto& c = candidate_[pt];
    const double p0 = c[0][0] * v[0] + c[0][1] * v[1] + c[0][2] * v[2];
    const double p1 = c[1][0] * v[1] + c[1][1] * v[2] + c[1][2] * v[3];
    const double p2 = c[2][0] * v[2] + c[2][1] * v[3] + c[2][2] * v[4];
    const double a0 = linear_[pt][0] * s0;
    const double a1 = linear_[pt][1] * s1;
    const double a2 = linear_[pt][2] * s2;
    out[pt] = (a0 * p0 + a1 * p1 + a2 * p2) / (a0 + a1 + a2);
  }
}

template <std::size_t N>
void Weno5Points<N>::evaluate_linear(const double* v, double* out) const {
  for (std::size_t pt = 0; pt < N; ++pt) {
    const auto& c = candidate_[pt];
    const double p0 = c[0][0] * v[0] + c[0][1] * v[1] + c[0][2] * v[2];
    const double p1 = c[1][0] * v[1] + c[1][1] * v[2] + c[1][2] * v[3];
    const double p2 = c[2][0] * v[2] + c[2][1] * v[3] + c[2][2] * v[4];
    out[pt] = linear_[pt][0] * p0 + linear_[pt][1] * p1 + linear_[pt][2] * p2;
  }
}

}  // namespace swvortex
