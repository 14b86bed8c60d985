#include "wpv/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wpv/kernel.hpp"

namespace wpv::numeric {

using boost::math::quadrature::gauss_kronrod;

double truncation_cutoff(double b) { return 200.0 + 10.0 * b; }

double F_moment(int k, double b, double tol)
{
    auto f = [k, b](double x) { return std::pow(x, 2 * k + 1) * H_num(x, b); };
    return gauss_kronrod<double, 61>::integrate(f, 0.0, truncation_cutoff(b), 30, tol);
}

double double_moment(int i, int j, double b, double tol)
{
    const double cut = truncation_cutoff(b);
    auto inner = [=](double x) {
        auto g = [=](double y) { return std::pow(y, 2 * j + 1) * H_num(x + y, b); };
        return std::pow(x, 2 * i + 1) *
               gauss_kronrod<double, 61>::integrate(g, 0.0, cut, 30, tol);
    };
    return gauss_kronrod<double, 61>::integrate(inner, 0.0, cut, 30, tol);
}

}  // namespace wpv::numeric
