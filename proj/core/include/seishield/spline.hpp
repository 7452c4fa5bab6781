#pragma once

#include <vector>

namespace seishield {

// Natural cubic spline through (x_j, y_j): second derivative vanishes at both
// endpoints. Abscissae must be strictly increasing. Evaluation outside the
// knot range clamps to the boundary intervals' polynomials.
class CubicSpline {
public:
    CubicSpline(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;

private:
    std::vector<double> xs_, ys_;
    std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace seishield
