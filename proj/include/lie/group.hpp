#ifndef LIE_GROUP_HPP
#define LIE_GROUP_HPP

#include <array>

#include "lie/reps.hpp"

namespace lie {

/// Rotation angles (radians) and boost rapidities of a proper orthochronous
/// Lorentz transformation close to the identity.
struct LorentzParams {
  std::array<double, 3> theta{0, 0, 0};
  std::array<double, 3> gamma{0, 0, 0};

  LorentzParams negated() const {
    return {{-theta[0], -theta[1], -theta[2]}, {-gamma[0], -gamma[1], -gamma[2]}};
  }
};

/// diag(-1, 1, 1, 1).
CMat minkowski_metric();

/// Scaling-and-squaring matrix exponential with a series core once the
/// 1-norm is at most 1/2. expm(0) is the identity exactly.
CMat expm(const CMat& m, double tol = 1e-12);

/// D = exp(sum_a theta_a rho(eta_a) + gamma_a rho(K_a)) in the given
/// representation of so13.
CMat lorentz_element(const LorentzParams& p, const NumericRep& rep, double tol = 1e-12);

/// Left Weyl block exp(-(i theta + gamma)·sigma / 2); equals lorentz_element
/// in the (1/2, 0) representation.
CMat lambda_left(const LorentzParams& p, double tol = 1e-12);

/// Right Weyl block exp(-(i theta - gamma)·sigma / 2), the form that
/// satisfies lambda_left = (lambda_right†)^{-1}; equals lorentz_element in
/// the (0, 1/2) representation.
CMat lambda_right(const LorentzParams& p, double tol = 1e-12);

/// diag(lambda_left, lambda_right) on Dirac spinors.
CMat lambda_dirac(const LorentzParams& p, double tol = 1e-12);

/// Pauli matrices sigma_1, sigma_2, sigma_3.
std::array<CMat, 3> pauli_matrices();

}  // namespace lie

#endif
