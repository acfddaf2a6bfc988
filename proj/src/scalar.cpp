#include "hodge1/scalar.hpp"

#include <sstream>
#include <utility>

#include "hodge1/errors.hpp"

namespace hodge1 {

Rational parse_rational(const std::string& text)
{
    if (text.empty()) throw InvalidInput("empty rational");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/') {
            if (slash) throw InvalidInput("malformed rational '" + text + "'");
            slash = true;
        } else if (ch >= '0' && ch <= '9') {
            (slash ? digit_after : digit_before) = true;
        } else {
            throw InvalidInput("exact rationals required, got '" + text + "'");
        }
    }
    if (!digit_before || (slash && !digit_after))
        throw InvalidInput("malformed rational '" + text + "'");
    Rational q;
    std::string body = text[0] == '+' ? text.substr(1) : text;
    if (q.set_str(body, 10) != 0) throw InvalidInput("malformed rational '" + text + "'");
    if (slash && sgn(q.get_den()) == 0) throw InvalidInput("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

bool is_square_free(std::int64_t d)
{
    if (d < 1) return false;
    for (std::int64_t f = 2; f * f <= d; ++f)
        if (d % (f * f) == 0) return false;
    return true;
}

Scalar::Scalar(Rational a, Rational b, Rational c, Rational e, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), e_(std::move(e)), d_(d)
{
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    e_.canonicalize();
    if (d_ == 1) {
        // sqrt(1) = 1: fold the radical coordinates back.
        a_ += c_;
        b_ += e_;
        c_ = 0;
        e_ = 0;
    } else if (!is_square_free(d_)) {
        throw InvalidInput("radicand must be a square-free positive integer, got " +
                           std::to_string(d_));
    }
}

bool Scalar::is_zero() const
{
    return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(e_) == 0;
}

std::int64_t Scalar::join(const Scalar& x, const Scalar& y)
{
    if (!x.has_radical()) return y.has_radical() ? y.d_ : std::max(x.d_, y.d_);
    if (!y.has_radical() || x.d_ == y.d_) return x.d_;
    throw InvalidInput("scalars from different fields: sqrt(" + std::to_string(x.d_) +
                       ") and sqrt(" + std::to_string(y.d_) + ")");
}

Scalar Scalar::conj() const
{
    Scalar r = *this;
    r.b_ = -b_;
    r.e_ = -e_;
    return r;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    r.c_ = -c_;
    r.e_ = -e_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    d_ = join(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    e_ += o.e_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    d_ = join(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    e_ -= o.e_;
    return *this;
}

namespace {

// Gaussian rationals x + y i, used for the Q(i)[r] / (r^2 - d) arithmetic.
struct Gauss {
    Rational re, im;
};

bool vanishes(const Gauss& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }

Gauss mul(const Gauss& x, const Gauss& y)
{
    if (vanishes(x) || vanishes(y)) return {};
    if (sgn(x.im) == 0 && sgn(y.im) == 0) return {x.re * y.re, 0};
    if (sgn(x.im) == 0) return {x.re * y.re, x.re * y.im};
    if (sgn(y.im) == 0) return {x.re * y.re, x.im * y.re};
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Gauss add(const Gauss& x, const Gauss& y) { return {x.re + y.re, x.im + y.im}; }

Gauss scale(const Gauss& x, const Rational& k) { return {x.re * k, x.im * k}; }

}  // namespace

Scalar& Scalar::operator*=(const Scalar& o)
{
    std::int64_t d = join(*this, o);
    Gauss x0{a_, b_}, x1{c_, e_}, y0{o.a_, o.b_}, y1{o.c_, o.e_};
    Gauss r0 = mul(x0, y0), r1;
    if (!vanishes(x1) || !vanishes(y1)) {
        r0 = add(r0, scale(mul(x1, y1), Rational(d)));
        r1 = add(mul(x0, y1), mul(x1, y0));
    }
    a_ = std::move(r0.re);
    b_ = std::move(r0.im);
    c_ = std::move(r1.re);
    e_ = std::move(r1.im);
    d_ = d;
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw InvalidInput("division by zero scalar");
    // (X0 + X1 r)^{-1} = (X0 - X1 r) / (X0^2 - d X1^2), norm in Q(i).
    Gauss x0{a_, b_}, x1{c_, e_};
    Gauss n = add(mul(x0, x0), scale(mul(x1, x1), Rational(-d_)));
    Rational nn = n.re * n.re + n.im * n.im;
    Gauss ninv{n.re / nn, -n.im / nn};
    Gauss r0 = mul(x0, ninv);
    Gauss r1 = mul(scale(x1, Rational(-1)), ninv);
    Scalar r;
    r.a_ = r0.re;
    r.b_ = r0.im;
    r.c_ = r1.re;
    r.e_ = r1.im;
    r.d_ = d_;
    return r;
}

bool operator==(const Scalar& x, const Scalar& y)
{
    if (x.a_ != y.a_ || x.b_ != y.b_ || x.c_ != y.c_ || x.e_ != y.e_) return false;
    return !x.has_radical() || x.d_ == y.d_;
}

std::string Scalar::str() const
{
    if (is_rational()) return to_string(a_);
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& q, const std::string& unit) {
        if (sgn(q) == 0) return;
        if (!first) os << (sgn(q) > 0 ? " + " : " - ");
        else if (sgn(q) < 0) os << "-";
        Rational m = abs(q);
        if (unit.empty()) {
            os << to_string(m);
        } else {
            if (m != 1) os << to_string(m) << "*";
            os << unit;
        }
        first = false;
    };
    std::string r = "sqrt(" + std::to_string(d_) + ")";
    term(a_, "");
    term(b_, "i");
    term(c_, r);
    term(e_, "i*" + r);
    if (first) return "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

int expansion_degree(std::int64_t d)
{
    return d > 1 ? 4 : 2;
}

std::array<Rational, 4> expand(const Scalar& s)
{
    return s.coordinates();
}

Scalar collapse(const Rational* coords, int degree, std::int64_t d)
{
    if (degree == 2) return {coords[0], coords[1], 0, 0, 1};
    return {coords[0], coords[1], coords[2], coords[3], d};
}

}  // namespace hodge1
