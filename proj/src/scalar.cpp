#include "folnerlab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "folnerlab/error.hpp"

namespace folnerlab {

std::string to_string(ScalarMode mode)
{
    return mode == ScalarMode::exact ? "exact" : "float";
}

ScalarMode parse_scalar_mode(std::string_view text)
{
    if (text == "exact")
        return ScalarMode::exact;
    if (text == "float")
        return ScalarMode::floating;
    throw PreconditionError("unknown scalar mode '" + std::string(text) + "'");
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

mpq_class parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw PreconditionError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string rational_string(const mpq_class& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational::GaussianRational(long re) : re_(re), im_(0) {}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (o.is_zero())
        throw PreconditionError("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0)
        return rational_string(re_);
    return rational_string(re_) + (sgn(im_) < 0 ? "-" : "+") + rational_string(abs(im_)) + "i";
}

Scalar Scalar::zero(ScalarMode mode)
{
    return from_int(0, mode);
}

Scalar Scalar::one(ScalarMode mode)
{
    return from_int(1, mode);
}

Scalar Scalar::from_int(long v, ScalarMode mode)
{
    if (mode == ScalarMode::exact)
        return Scalar(GaussianRational(v));
    return Scalar(Complex(static_cast<double>(v), 0.0));
}

bool Scalar::is_zero() const
{
    if (auto* q = std::get_if<GaussianRational>(&v_))
        return q->is_zero();
    const auto& c = std::get<Complex>(v_);
    return c.real() == 0.0 && c.imag() == 0.0;
}

double Scalar::abs() const
{
    return std::abs(to_complex());
}

Complex Scalar::to_complex() const
{
    if (auto* q = std::get_if<GaussianRational>(&v_))
        return q->to_complex();
    return std::get<Complex>(v_);
}

const GaussianRational& Scalar::exact() const
{
    if (auto* q = std::get_if<GaussianRational>(&v_))
        return *q;
    throw ModeMismatch("exact scalar requested from a floating scalar");
}

const Complex& Scalar::floating() const
{
    if (auto* c = std::get_if<Complex>(&v_))
        return *c;
    throw ModeMismatch("floating scalar requested from an exact scalar");
}

Scalar Scalar::conj() const
{
    if (auto* q = std::get_if<GaussianRational>(&v_))
        return Scalar(q->conj());
    return Scalar(std::conj(std::get<Complex>(v_)));
}

namespace {

template <class Op>
void combine(std::variant<GaussianRational, Complex>& lhs, const std::variant<GaussianRational, Complex>& rhs, Op op)
{
    if (lhs.index() != rhs.index())
        throw ModeMismatch("mixed exact/floating scalar arithmetic");
    if (auto* q = std::get_if<GaussianRational>(&lhs))
        op(*q, std::get<GaussianRational>(rhs));
    else
        op(std::get<Complex>(lhs), std::get<Complex>(rhs));
}

} // namespace

Scalar& Scalar::operator+=(const Scalar& o)
{
    combine(v_, o.v_, [](auto& a, const auto& b) { a += b; });
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    combine(v_, o.v_, [](auto& a, const auto& b) { a -= b; });
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    combine(v_, o.v_, [](auto& a, const auto& b) { a *= b; });
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw PreconditionError("division by zero");
    combine(v_, o.v_, [](auto& a, const auto& b) { a /= b; });
    return *this;
}

Scalar Scalar::operator-() const
{
    if (auto* q = std::get_if<GaussianRational>(&v_))
        return Scalar(-*q);
    return Scalar(-std::get<Complex>(v_));
}

std::string Scalar::to_string() const
{
    if (auto* q = std::get_if<GaussianRational>(&v_))
        return q->to_string();
    std::ostringstream os;
    os.precision(17);
    const auto& c = std::get<Complex>(v_);
    os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    return os.str();
}

} // namespace folnerlab
