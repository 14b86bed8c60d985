// Closed-form integral kernels of the volume recursion.
//
// Every integral the recursion needs is a moment of
//   H(s,t) = 1/(1+exp((s+t)/2)) + 1/(1+exp((s-t)/2)),
// and those moments are polynomials in pi^2 and b^2 whose coefficients are
// built from the even zeta values. Nothing here integrates numerically.
#pragma once

#include "wpv/exactalg.hpp"

namespace wpv {

/// zeta(2i)/pi^(2i) as an exact rational; zeta(0) = -1/2.
Rational zeta_even_coefficient(int i);

/// zeta(2i) as a single pi^(2i) monomial. Memoized.
GradedPoly zeta_even(int i);

/// F_{2k+1}(b) = int_0^inf x^(2k+1) H(x,b) dx, an even polynomial in b of
/// degree 2k+2, homogeneous of weight k+1.
struct KernelPoly {
    int k;
    GradedPoly poly;  // in slot 1
};

KernelPoly F_poly(int k);

/// F_{2k+1} written in an arbitrary slot.
GradedPoly F_poly_in(int k, Slot slot);

double H_num(double s, double t);

/// int_0^inf x^(2i-1)/(1+e^x) dx = zeta(2i) (2i-1)! (1 - 2^(1-2i)).
GradedPoly odd_moment(int i);

/// F_{2k+1}(b_A + b_B) + F_{2k+1}(b_A - b_B) as a polynomial in b_A^2, b_B^2.
GradedPoly even_shift_expand(int k, Slot a, Slot b);

/// (2i+1)!(2j+1)!/(2i+2j+3)!, the factor turning the double moment
/// int int x^(2i+1) y^(2j+1) H(x+y,b) into F_{2i+2j+3}(b).
Rational double_reduce(int i, int j);

}  // namespace wpv
