#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gkgrowth {

using Int = mpz_class;

/// Integer-coefficient polynomial in the formal residue-size variable q.
///
/// Coefficients are stored densely by ascending power, with no trailing
/// zeros; the zero polynomial is the empty sequence. Equality is
/// coefficient-wise equality of this canonical form.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c);
    QPoly(const Int& c);

    /// The variable q itself.
    static QPoly var();
    /// c * q^k, k >= 0.
    static QPoly monomial(Int c, int k);
    /// Build from ascending coefficients (trailing zeros stripped).
    static QPoly from_coeffs(std::vector<Int> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of q^k (zero outside the stored range).
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }
    /// Leading coefficient; requires a nonzero polynomial.
    const Int& leading() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }
    /// Lexicographic-by-coefficient order; used only for containers.
    bool operator<(const QPoly& o) const;

    Int eval(const Int& q0) const;

    /// Substitute q -> q^m, m >= 1.
    QPoly substitute_power(int m) const;
    /// Inverse of substitute_power; every nonzero exponent must be a
    /// multiple of m.
    QPoly compress_power(int m) const;
    /// True iff every exponent with a nonzero coefficient is a multiple
    /// of m.
    bool exponents_divisible(int m) const;

    /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;
    QPoly primitive_part() const;

    /// Exact quotient; throws std::logic_error if division leaves a
    /// remainder or a coefficient quotient is non-integral.
    QPoly divexact(const QPoly& d) const;

    /// gcd in Z[q], normalized to a positive leading coefficient.
    static QPoly gcd(const QPoly& a, const QPoly& b);

    /// Expanded rendering, descending powers, e.g. "q^2 + 2*q + 1".
    std::string str(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Int> c_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; rejects n < 1.
QPoly q_int(int n);
/// [n!]_q = [1]_q [2]_q ... [n]_q; the empty product is 1.
QPoly q_factorial(int n);
/// [r!]_{q^m}: the q-factorial with q replaced by q^m.
QPoly q_factorial_base(int r, int m);
/// Gaussian binomial [n choose k]_q.
QPoly q_binomial(int n, int k);
/// [n; n_1,...,n_r]_q = [n!]_q / prod [n_i!]_q; parts must be positive
/// and sum to n. The division is exact in Z[q].
QPoly q_multinomial(int n, const std::vector<int>& parts);

}  // namespace gkgrowth
