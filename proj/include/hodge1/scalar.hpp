#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

namespace hodge1 {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
bool is_square_free(std::int64_t d);

/// Element a + b i + c sqrt(d) + e i sqrt(d) of Q(i, sqrt(d)).
///
/// The radicand d travels with the value.  d == 1 means "no radical"; the
/// radical coordinates are then always zero.  Mixing two different radicands
/// with non-zero radical parts throws InvalidInput.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Integer& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& v) : a_(v) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    Scalar(Rational a, Rational b, Rational c, Rational e, std::int64_t d);

    static Scalar imaginary_unit() { return {0, 1, 0, 0, 1}; }
    static Scalar sqrt_of(std::int64_t d) { return {0, 0, 1, 0, d}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& e() const { return e_; }
    std::int64_t radicand() const { return d_; }
    std::array<Rational, 4> coordinates() const { return {a_, b_, c_, e_}; }

    bool is_zero() const;
    bool has_radical() const { return sgn(c_) != 0 || sgn(e_) != 0; }
    /// b = c = e = 0.
    bool is_rational() const { return sgn(b_) == 0 && !has_radical(); }
    bool is_integer() const { return is_rational() && a_.get_den() == 1; }
    /// b = e = 0: lies in Q(sqrt(d)); the radical is never evaluated.
    bool is_rational_real() const { return sgn(b_) == 0 && sgn(e_) == 0; }

    Scalar conj() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    Scalar operator-() const;

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y);
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    std::string str() const;

private:
    static std::int64_t join(const Scalar& x, const Scalar& y);

    Rational a_{0}, b_{0}, c_{0}, e_{0};
    std::int64_t d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline Rational conj(const Rational& q) { return q; }
inline Integer conj(const Integer& z) { return z; }
inline Scalar conj(const Scalar& s) { return s.conj(); }

/// Coordinates of s over the Q-basis {1, i} (d == 1) or {1, i, r, i r}.
int expansion_degree(std::int64_t d);
std::array<Rational, 4> expand(const Scalar& s);
Scalar collapse(const Rational* coords, int degree, std::int64_t d);

}  // namespace hodge1
