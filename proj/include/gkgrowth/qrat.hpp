#pragma once

#include <string>

#include "gkgrowth/qpoly.hpp"

namespace gkgrowth {

/// Element of the fraction field of Z[q].
///
/// Canonical form: the denominator is nonzero with positive leading
/// coefficient and gcd(num, den) = 1 up to sign. Equality is equality of
/// canonical forms.
class QRat {
public:
    QRat() : num_(0), den_(1) {}
    QRat(long c) : num_(c), den_(1) {}
    QRat(const Int& c) : num_(c), den_(1) {}
    QRat(QPoly num) : num_(std::move(num)), den_(1) {}
    QRat(QPoly num, QPoly den);

    static QRat ratio(long num, long den) { return QRat(QPoly(num), QPoly(den)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the denominator is the constant 1.
    bool is_polynomial() const { return den_.is_one(); }
    /// True when the value is a (possibly negative) integer constant.
    bool is_integer_constant() const { return den_.is_one() && num_.degree() <= 0; }

    QRat operator-() const;
    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    QRat inverse() const;

    /// Exact evaluation at an integer q0; throws Error when the
    /// denominator vanishes there.
    mpq_class eval(const Int& q0) const;

    QRat substitute_power(int m) const;
    QRat compress_power(int m) const;
    bool exponents_divisible(int m) const {
        return num_.exponents_divisible(m) && den_.exponents_divisible(m);
    }

    /// Sign of the leading numerator coefficient (0 for zero).
    int sign() const;

    std::string str(const std::string& var = "q") const;

private:
    void canonicalize();
    QPoly num_;
    QPoly den_;
};

}  // namespace gkgrowth
