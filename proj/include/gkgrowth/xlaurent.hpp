#pragma once

#include <map>
#include <string>

#include "gkgrowth/qrat.hpp"

namespace gkgrowth {

/// Laurent polynomial in X with coefficients in the fraction field of
/// Z[q]. X stands for q^{N-1}; a finished growth polynomial has
/// polynomial coefficients and nonnegative exponents (see is_integral).
///
/// No stored term has a zero coefficient.
class XLaurent {
public:
    XLaurent() = default;
    XLaurent(QRat c) { set(0, std::move(c)); }
    XLaurent(long c) : XLaurent(QRat(c)) {}

    /// The variable X.
    static XLaurent x() { return term(QRat(1), 1); }
    /// c * X^k.
    static XLaurent term(QRat c, int k);

    const std::map<int, QRat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    QRat coeff(int k) const;
    /// Largest X-exponent; requires a nonzero polynomial.
    int leading_exponent() const;
    QRat leading_coeff() const;

    XLaurent operator-() const;
    XLaurent& operator+=(const XLaurent& o);
    XLaurent& operator-=(const XLaurent& o);
    friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
    friend XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }
    friend XLaurent operator*(const XLaurent& a, const XLaurent& b);
    XLaurent& operator*=(const XLaurent& o) { return *this = *this * o; }
    bool operator==(const XLaurent& o) const { return t_ == o.t_; }
    bool operator!=(const XLaurent& o) const { return !(*this == o); }

    XLaurent scaled(const QRat& c) const;
    /// Multiply by X^dk.
    XLaurent shifted(int dk) const;
    /// k-th power; negative k requires a single-term polynomial.
    XLaurent pow(int k) const;

    /// True iff every coefficient lies in Z[q] and every exponent is a
    /// nonnegative integer.
    bool is_integral() const;

    /// Exact value at X = q0^{N-1}, q = q0 (q0 >= 2, N >= 1). Throws
    /// NonIntegralEvaluation when the result is not an integer.
    Int eval_dim(const Int& q0, int N) const;

    /// q -> q^m in every coefficient.
    XLaurent substitute_coeff_power(int m) const;
    XLaurent compress_coeff_power(int m) const;

    /// Canonical rendering: terms in descending X-exponent, coefficients
    /// as fully expanded q-polynomials, e.g. "(q + 1)*X - 2".
    std::string str(const std::string& var = "q") const;
    /// Inverse of str; also accepts general +,-,*,/,^ expressions in the
    /// given coefficient variable and X.
    static XLaurent parse(const std::string& text, const std::string& var = "q");

private:
    void set(int k, QRat c);
    std::map<int, QRat> t_;
};

}  // namespace gkgrowth
