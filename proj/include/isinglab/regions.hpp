#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "isinglab/errors.hpp"
#include "isinglab/polynomial.hpp"

namespace isinglab {

// D(r) = {b : |(b-1)/(b+1)| <= r}; via the x = (b-1)/(b+1) map this is the
// x-plane disk |x| <= r. Its real diameter is [(1-r)/(1+r), (1+r)/(1-r)].
struct DiskRegion {
    double radius;

    explicit DiskRegion(double r) : radius(r) {
        if (!(r >= 0.0 && r < 1.0)) throw ArgumentError("disk radius must lie in [0,1)");
    }
    double diameter_lo() const { return (1.0 - radius) / (1.0 + radius); }
    double diameter_hi() const { return (1.0 + radius) / (1.0 - radius); }
    bool contains_x(Complex x, double tol = 1e-9) const { return std::abs(x) <= radius + tol; }
    bool contains_b(Complex b, double tol = 1e-9) const {
        if (b == Complex(-1.0, 0.0)) return false;
        return std::abs((b - 1.0) / (b + 1.0)) <= radius + tol;
    }
};

inline Complex b_to_x(Complex b) {
    require_finite(b, "b_to_x");
    if (b == Complex(-1.0, 0.0)) throw ArgumentError("b_to_x: pole at b = -1");
    return (b - 1.0) / (b + 1.0);
}

inline Complex x_to_b(Complex x) {
    require_finite(x, "x_to_b");
    if (x == Complex(1.0, 0.0)) throw ArgumentError("x_to_b: pole at x = 1");
    return (1.0 + x) / (1.0 - x);
}

// n_Delta = (1 - 1/sqrt(2(Delta-1)))^2 / (Delta-1)
inline double n_delta(int delta) {
    if (delta < 3) throw ArgumentError("n_delta requires Delta >= 3");
    double t = 1.0 - 1.0 / std::sqrt(2.0 * (delta - 1));
    return t * t / (delta - 1);
}

// eps_Delta = tan(pi / (4(Delta-1))), the comparison radius.
inline double eps_delta(int delta) {
    if (delta < 3) throw ArgumentError("eps_delta requires Delta >= 3");
    return std::tan(std::atan(1.0) / (delta - 1));  // pi/4 / (Delta-1)
}

// Threshold T with admissibility g+2 >= T, i.e.
// T = log(2 eps^2 (Delta-1)^2 / Delta) / log(1-eps); 0 once the log argument
// reaches 1 (the condition then holds for every g).
inline double girth_threshold(int delta, double eps) {
    if (delta < 3) throw ArgumentError("girth_threshold requires Delta >= 3");
    if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("girth_threshold requires eps in (0,1)");
    double arg = 2.0 * eps * eps * (delta - 1.0) * (delta - 1.0) / delta;
    if (arg >= 1.0) return 0.0;
    return std::log(arg) / std::log(1.0 - eps);
}

// Admissible (Delta, g, eps) with the derived polymer constants a = eps,
// c = 1 - eps.
struct TheoremConstants {
    int delta;
    int g;
    double eps;
    double a() const { return eps; }
    double c() const { return 1.0 - eps; }
    bool valid() const {
        return delta >= 3 && g >= 3 && eps > 0.0 && eps < 1.0 &&
               g + 2 >= girth_threshold(delta, eps);
    }
    double radius() const { return (1.0 - eps) * (1.0 - eps) / (delta - 1); }
};

struct CorollaryReport {
    bool holds;
    double min_slack;
    int argmin_delta;
};

// (1 - 1/sqrt(2(Delta-1)))^5 <= (Delta-1)/Delta for 2 <= Delta <= delta_max.
inline CorollaryReport corollary_inequality_check(int delta_max) {
    if (delta_max < 2) throw ArgumentError("corollary check requires delta_max >= 2");
    CorollaryReport rep{true, std::numeric_limits<double>::infinity(), -1};
    for (int d = 2; d <= delta_max; ++d) {
        double lhs = std::pow(1.0 - 1.0 / std::sqrt(2.0 * (d - 1)), 5);
        double rhs = (d - 1.0) / d;
        double slack = rhs - lhs;
        if (slack < rep.min_slack) { rep.min_slack = slack; rep.argmin_delta = d; }
        if (lhs > rhs) rep.holds = false;
    }
    return rep;
}

// Largest (1-eps)^2/(Delta-1) over admissible eps for this (Delta, g).
// Admissibility (1-eps)^(g+2) <= 2 eps^2 (Delta-1)^2/Delta is monotone in
// eps, so a coarse scan locates the boundary and bisection refines it.
inline double max_radius_for_girth(int delta, int g) {
    if (delta < 3 || g < 3) throw ArgumentError("max_radius_for_girth requires Delta, g >= 3");
    auto feasible = [&](double eps) {
        return std::pow(1.0 - eps, g + 2) <= 2.0 * eps * eps * (delta - 1.0) * (delta - 1.0) / delta;
    };
    double lo = 0.0, hi = 1.0;
    for (double e = 1e-3; e < 1.0; e += 1e-3) {
        if (feasible(e)) { hi = e; lo = e - 1e-3; break; }
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (feasible(mid)) hi = mid; else lo = mid;
    }
    double eps_star = hi;
    return (1.0 - eps_star) * (1.0 - eps_star) / (delta - 1);
}

}  // namespace isinglab
