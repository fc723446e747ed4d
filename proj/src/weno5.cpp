#include "swvortex/weno5.hpp"

#include <stdexcept>

namespace swvortex {

std::vector<double> reconstruction_coefficients(int first, int n, double xi) {
  if (n < 1) {
    throw std::invalid_argument("reconstruction_coefficients: n must be >= 1");
  }
  // The reconstruction is the derivative of the polynomial interpolating the
  // primitive W(x_l) = sum_{m < l} a_m at the n + 1 cell edges x_l.
  const int nodes = n + 1;
  std::vector<double> x(nodes);
  for (int l = 0; l < nodes; ++l) x[l] = first - 0.5 + l;

  std::vector<double> dlag(nodes, 0.0);
  for (int l = 0; l < nodes; ++l) {
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) {
      if (j == l) continue;
      double term = 1.0 / (x[l] - x[j]);
      for (int k = 0; k < nodes; ++k) {
        if (k == l || k == j) continue;
        term *= (xi - x[k]) / (x[l] - x[k]);
      }
      sum += term;
    }
    dlag[l] = sum;
  }
  std::vector<double> coeff(n, 0.0);
  for (int m = 0; m < n; ++m) {
    for (int l = m + 1; l < nodes; ++l) coeff[m] += dlag[l];
  }
  return coeff;
}

FaceValues weno5_reconstruct(std::span<const double, 5> v) {
  static const Weno5Points<2> faces({-0.5, 0.5});
  double out[2];
  faces.evaluate(v.data(), out);
  return FaceValues{out[0], out[1]};
}

double weno5_point(std::span<const double, 5> v, double xi) {
  const Weno5Points<1> rule({xi});
  double out = 0.0;
  rule.evaluate(v.data(), &out);
  return out;
}

}  // namespace swvortex
