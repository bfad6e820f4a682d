#pragma once

// Neumaier-compensated accumulation. Keeps the error of long floating
// sums at machine precision independent of term count.

namespace apcheck {

struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace apcheck
