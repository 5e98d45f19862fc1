#pragma once

#include "solvable/poly.hpp"

#include <optional>

namespace solvable {

// Open interval; a missing endpoint is infinite.
struct Interval {
    std::optional<Rational> lo, hi;
    static Interval real_line() { return {}; }
    bool contains(const Rational& v) const { return (!lo || v > *lo) && (!hi || v < *hi); }
};

// Distinct real roots of p in the open interval, by Sturm sequences.
int real_root_count(const Poly& p, const Interval& interval);

}  // namespace solvable
