// Display forms of polynomials. Terms are ordered by decreasing pi power,
// then by monomial.
#pragma once

#include <string>
#include <vector>

#include "wpv/exactalg.hpp"

namespace wpv {

/// "1/12*pi^2 + 1/48*b1^2"
std::string render_plain(const GradedPoly& p);

/// "\frac{\pi^2}{12}+\frac{b_1^2}{48}"
std::string render_latex(const GradedPoly& p);

/// Canonical JSON text of a volume (the serialize schema).
std::string render_json(const VolumePoly& v);

/// Terms in display order.
std::vector<std::pair<Monomial, Rational>> display_order(const GradedPoly& p);

}  // namespace wpv
