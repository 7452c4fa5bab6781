#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace seishield {

// A digitized complex baseband sequence stored as separate I and Q rails.
// This is the unit of all signal processing in the toolkit.
struct IQSignal {
    std::vector<float> i;
    std::vector<float> q;

    IQSignal() = default;
    explicit IQSignal(std::size_t length) : i(length, 0.0f), q(length, 0.0f) {}

    std::size_t size() const { return i.size(); }

    std::complex<double> at(std::size_t n) const {
        return {static_cast<double>(i[n]), static_cast<double>(q[n])};
    }
    void set(std::size_t n, std::complex<double> v) {
        i[n] = static_cast<float>(v.real());
        q[n] = static_cast<float>(v.imag());
    }

    double mean_power() const {
        if (i.empty()) return 0.0;
        double acc = 0.0;
        for (std::size_t n = 0; n < i.size(); ++n)
            acc += static_cast<double>(i[n]) * i[n] + static_cast<double>(q[n]) * q[n];
        return acc / static_cast<double>(i.size());
    }

    bool all_finite() const {
        for (float v : i)
            if (!std::isfinite(v)) return false;
        for (float v : q)
            if (!std::isfinite(v)) return false;
        return true;
    }

    bool operator==(const IQSignal& o) const { return i == o.i && q == o.q; }
};

}  // namespace seishield
