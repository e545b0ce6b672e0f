#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "isinglab/errors.hpp"

namespace isinglab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using HpReal = boost::multiprecision::cpp_bin_float_50;
using HpComplex = boost::multiprecision::cpp_complex_50;
using Complex = std::complex<double>;

inline void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ArgumentError(std::string(what) + ": non-finite complex value");
}

// Dense univariate polynomial with exact integer coefficients; index = degree.
// The zero polynomial has an empty coefficient vector.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    static IntegerPolynomial constant(BigInt v) {
        return IntegerPolynomial(std::vector<BigInt>{std::move(v)});
    }
    static IntegerPolynomial monomial(BigInt v, int degree) {
        std::vector<BigInt> c(degree + 1);
        c[degree] = std::move(v);
        return IntegerPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coefficients() const { return c_; }
    BigInt coefficient(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : BigInt(0);
    }

    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        return a.c_ == b.c_;
    }

    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return IntegerPolynomial(std::move(c));
    }
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] -= b.c_[i];
        }
        return IntegerPolynomial(std::move(c));
    }
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntegerPolynomial(std::move(c));
    }
    friend IntegerPolynomial operator*(const BigInt& s, const IntegerPolynomial& p) {
        if (s == 0) return {};
        std::vector<BigInt> c = p.c_;
        for (auto& x : c) x *= s;
        return IntegerPolynomial(std::move(c));
    }

    // p * x^k
    IntegerPolynomial shifted(int k) const {
        if (is_zero()) return {};
        std::vector<BigInt> c(c_.size() + k);
        std::copy(c_.begin(), c_.end(), c.begin() + k);
        return IntegerPolynomial(std::move(c));
    }

    IntegerPolynomial pow(int e) const {
        IntegerPolynomial r = constant(1), base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Complex eval(Complex z) const {
        require_finite(z, "eval");
        Complex r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * z + Complex(static_cast<double>(*it), 0.0);
        return r;
    }

    // High-precision Horner for residual certification near disk boundaries.
    HpComplex eval_hp(const HpComplex& z) const {
        HpComplex r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + HpComplex(HpReal(*it));
        return r;
    }
    HpComplex eval_hp(Complex z) const { return eval_hp(HpComplex(z.real(), z.imag())); }

    // Largest |coefficient| as double.
    double coefficient_norm() const {
        BigInt m = 0;
        for (const auto& c : c_) m = std::max(m, BigInt(abs(c)));
        return static_cast<double>(m);
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

// Exact rational-coefficient polynomial; just enough for internal transforms.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    RationalPolynomial(const IntegerPolynomial& p) {
        for (const auto& a : p.coefficients()) c_.emplace_back(a);
    }
    const std::vector<BigRational>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }
    BigRational eval(const BigRational& x) const {
        BigRational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

private:
    std::vector<BigRational> c_;
};

// p(s*x) for rational s, exact.
inline RationalPolynomial compose_scale(const IntegerPolynomial& p, const BigRational& s) {
    std::vector<BigRational> c;
    BigRational pw = 1;
    for (const auto& a : p.coefficients()) {
        c.push_back(BigRational(a) * pw);
        pw *= s;
    }
    return RationalPolynomial(std::move(c));
}

inline Complex eval_complex(const IntegerPolynomial& p, Complex z) { return p.eval(z); }

inline std::string to_decimal_string(const BigInt& v) { return v.str(); }

}  // namespace isinglab
