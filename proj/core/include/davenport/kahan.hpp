#pragma once

#include <cmath>

namespace davenport {

// Neumaier variant of compensated summation. Terms are always fed in a fixed
// ascending order, which together with the compensation makes every series
// value bitwise reproducible across runs and thread counts.
struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        const double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }

    double value() const { return s + c; }
};

} // namespace davenport
