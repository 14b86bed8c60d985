// Numeric quadrature of the H-kernel moments. Used only as an independent
// check on the closed forms in kernel.hpp (tests and `check kernel`).
#pragma once

namespace wpv::numeric {

/// Upper cutoff for the semi-infinite integrals; the integrands decay like
/// exp(-x/2).
double truncation_cutoff(double b);

/// int_0^inf x^(2k+1) H(x,b) dx by adaptive Gauss-Kronrod on [0, cutoff].
double F_moment(int k, double b, double tol = 1e-12);

/// int_0^inf int_0^inf x^(2i+1) y^(2j+1) H(x+y,b) dx dy.
double double_moment(int i, int j, double b, double tol = 1e-10);

}  // namespace wpv::numeric
