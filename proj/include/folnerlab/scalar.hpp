#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace folnerlab {

enum class ScalarMode { exact, floating };

std::string to_string(ScalarMode mode);
ScalarMode parse_scalar_mode(std::string_view text);

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws on anything else.
mpq_class parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string rational_string(const mpq_class& q);

/// Exact complex rational re + i*im. Always canonical (reduced fractions).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(mpq_class re, mpq_class im = 0);
    GaussianRational(long re);

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

using Complex = std::complex<double>;

/// A coefficient of Pol(G): exact Gaussian rational or complex double.
/// The mode is fixed by the ambient algebra; arithmetic across modes throws ModeMismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(GaussianRational v) : v_(std::move(v)) {}
    Scalar(Complex v) : v_(v) {}

    static Scalar zero(ScalarMode mode);
    static Scalar one(ScalarMode mode);
    static Scalar from_int(long v, ScalarMode mode);

    ScalarMode mode() const
    {
        return std::holds_alternative<GaussianRational>(v_) ? ScalarMode::exact : ScalarMode::floating;
    }
    bool is_exact() const { return mode() == ScalarMode::exact; }

    /// Literal zero (no tolerance in floating mode).
    bool is_zero() const;
    double abs() const;
    Complex to_complex() const;
    const GaussianRational& exact() const;
    const Complex& floating() const;

    Scalar conj() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    /// Exact equality in exact mode, bitwise equality in floating mode.
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

    std::string to_string() const;

private:
    std::variant<GaussianRational, Complex> v_{GaussianRational{}};
};

} // namespace folnerlab
