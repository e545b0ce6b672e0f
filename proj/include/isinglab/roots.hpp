#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "isinglab/errors.hpp"
#include "isinglab/polynomial.hpp"

namespace isinglab {

struct RootConvergenceError : ConvergenceError {
    RootConvergenceError(const std::string& what, std::vector<Complex> iterates)
        : ConvergenceError(what), best_iterates(std::move(iterates)) {}
    std::vector<Complex> best_iterates;
};

namespace detail {

inline IntegerPolynomial derivative(const IntegerPolynomial& p) {
    std::vector<BigInt> c;
    const auto& a = p.coefficients();
    for (std::size_t k = 1; k < a.size(); ++k) c.push_back(BigInt(k) * a[k]);
    return IntegerPolynomial(std::move(c));
}

inline Complex horner(const std::vector<Complex>& a, Complex z) {
    Complex r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * z + *it;
    return r;
}

}  // namespace detail

// All complex roots of p with multiplicity. Aberth simultaneous iteration
// from a perturbed circle, then high-precision Newton polish; every returned
// z satisfies |p(z)| <= tol * ||p||_inf * max(1,|z|)^deg, certified by
// extended-precision evaluation of the exact polynomial.
inline std::vector<Complex> roots(const IntegerPolynomial& p, double tol = 1e-12,
                                  int max_iterations = 1000) {
    if (p.is_zero()) throw ArgumentError("roots: zero polynomial");
    if (tol <= 0) throw ArgumentError("roots: tol must be positive");

    const auto& coeffs = p.coefficients();
    int zero_roots = 0;
    while (zero_roots < static_cast<int>(coeffs.size()) && coeffs[zero_roots] == 0) ++zero_roots;

    std::vector<Complex> a;  // deflated by x^zero_roots, scaled to unit norm
    double norm = p.coefficient_norm();
    for (std::size_t k = zero_roots; k < coeffs.size(); ++k) {
        double v = static_cast<double>(coeffs[k]) / norm;
        if (!std::isfinite(v)) throw SizeError("roots: coefficient exceeds double range");
        a.push_back(Complex(v, 0.0));
    }
    const int d = static_cast<int>(a.size()) - 1;
    std::vector<Complex> zs(zero_roots, Complex(0, 0));
    if (d >= 1) {
        std::vector<Complex> da;
        for (int k = 1; k <= d; ++k) da.push_back(a[k] * double(k));

        // initial points: circle at the root centroid, radius from |a0/ad|^(1/d),
        // slightly spiralled so symmetric polynomials do not stall
        Complex center = -a[d - 1] / (a[d] * double(d));
        double r0 = std::pow(std::abs(a[0] / a[d]), 1.0 / d);
        r0 = std::max(r0, 1e-3);
        std::vector<Complex> z(d);
        const double two_pi = 6.283185307179586;
        for (int j = 0; j < d; ++j) {
            double ang = two_pi * j / d + 0.4;
            z[j] = center + std::polar(r0 * (1.0 + 0.05 * j / std::max(d, 1)), ang);
        }

        bool settled = false;
        for (int it = 0; it < max_iterations && !settled; ++it) {
            settled = true;
            for (int j = 0; j < d; ++j) {
                Complex pv = detail::horner(a, z[j]);
                Complex dv = detail::horner(da, z[j]);
                if (std::abs(dv) == 0.0) {
                    z[j] += Complex(1e-8, 1e-8);
                    settled = false;
                    continue;
                }
                Complex w = pv / dv;
                Complex s = 0;
                for (int k = 0; k < d; ++k)
                    if (k != j) s += 1.0 / (z[j] - z[k]);
                Complex den = 1.0 - w * s;
                Complex dz = (std::abs(den) == 0.0) ? w : w / den;
                z[j] -= dz;
                if (std::abs(dz) > 1e-14 * (1.0 + std::abs(z[j]))) settled = false;
            }
        }

        // Newton polish against the exact integer polynomial in extended precision;
        // improves clustered/multiple roots beyond double noise.
        IntegerPolynomial dp = detail::derivative(p);
        for (int j = 0; j < d; ++j) {
            HpComplex zz(z[j].real(), z[j].imag());
            for (int step = 0; step < 4; ++step) {
                HpComplex pv = p.eval_hp(zz);
                HpComplex dv = dp.eval_hp(zz);
                if (abs(dv) == 0) break;
                HpComplex nz = zz - pv / dv;
                // stay with the polish only while it improves the residual
                if (abs(p.eval_hp(nz)) < abs(pv)) zz = nz; else break;
            }
            z[j] = Complex(static_cast<double>(zz.real()), static_cast<double>(zz.imag()));
        }
        zs.insert(zs.end(), z.begin(), z.end());
    }

    // certify residuals on the full polynomial
    const int deg = p.degree();
    for (Complex z : zs) {
        double bound = tol * norm * std::pow(std::max(1.0, std::abs(z)), deg);
        double residual = static_cast<double>(abs(p.eval_hp(z)));
        if (!(residual <= bound))
            throw RootConvergenceError("roots: residual certification failed", zs);
    }
    std::sort(zs.begin(), zs.end(), [](Complex x, Complex y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return zs;
}

}  // namespace isinglab
