#include "seishield/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace seishield {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n)
        throw std::invalid_argument("CubicSpline: need >= 2 knots and matching value count");
    for (std::size_t j = 1; j < n; ++j)
        if (!(xs_[j] > xs_[j - 1]))
            throw std::invalid_argument("CubicSpline: abscissae must be strictly increasing");

    // Tridiagonal system for the interior second derivatives (Thomas algorithm),
    // with natural boundary conditions m[0] = m[n-1] = 0.
    m_.assign(n, 0.0);
    if (n == 2) return;

    const std::size_t k = n - 2;
    std::vector<double> diag(k), rhs(k), upper(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        const double h0 = xs_[j + 1] - xs_[j];
        const double h1 = xs_[j + 2] - xs_[j + 1];
        diag[j] = 2.0 * (h0 + h1);
        if (j + 1 < k) upper[j] = h1;
        rhs[j] = 6.0 * ((ys_[j + 2] - ys_[j + 1]) / h1 - (ys_[j + 1] - ys_[j]) / h0);
    }
    for (std::size_t j = 1; j < k; ++j) {
        const double h0 = xs_[j + 1] - xs_[j];  // sub-diagonal entry of row j
        const double w = h0 / diag[j - 1];
        diag[j] -= w * upper[j - 1];
        rhs[j] -= w * rhs[j - 1];
    }
    m_[k] = rhs[k - 1] / diag[k - 1];
    for (std::size_t j = k - 1; j > 0; --j)
        m_[j] = (rhs[j - 1] - upper[j - 1] * m_[j + 1]) / diag[j - 1];
}

double CubicSpline::operator()(double x) const {
    const std::size_t n = xs_.size();
    std::size_t j;
    if (x <= xs_.front()) {
        j = 0;
    } else if (x >= xs_.back()) {
        j = n - 2;
    } else {
        j = static_cast<std::size_t>(
                std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin()) - 1;
    }
    const double h = xs_[j + 1] - xs_[j];
    const double a = (xs_[j + 1] - x) / h;
    const double b = (x - xs_[j]) / h;
    return a * ys_[j] + b * ys_[j + 1] +
           ((a * a * a - a) * m_[j] + (b * b * b - b) * m_[j + 1]) * h * h / 6.0;
}

}  // namespace seishield
