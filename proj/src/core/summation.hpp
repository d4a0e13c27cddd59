#pragma once

namespace shiftlat {

/// Kahan compensated accumulator; the series handled here mix terms spanning
/// many orders of magnitude.
struct KahanSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }

    double value() const { return s; }
};

}  // namespace shiftlat
