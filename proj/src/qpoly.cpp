#include "gkgrowth/qpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

namespace {
const Int kZero = 0;
}

QPoly::QPoly(long c) {
    if (c != 0) c_.push_back(Int(c));
}

QPoly::QPoly(const Int& c) {
    if (c != 0) c_.push_back(c);
}

QPoly QPoly::var() { return monomial(1, 1); }

QPoly QPoly::monomial(Int c, int k) {
    QPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, kZero);
    p.c_[static_cast<size_t>(k)] = std::move(c);
    return p;
}

QPoly QPoly::from_coeffs(std::vector<Int> coeffs) {
    QPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Int& QPoly::leading() const {
    if (c_.empty()) throw std::logic_error("QPoly::leading on zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly::from_coeffs(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

bool QPoly::operator<(const QPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

Int QPoly::eval(const Int& q0) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + c_[i];
    return acc;
}

QPoly QPoly::substitute_power(int m) const {
    if (m < 1) throw std::logic_error("QPoly::substitute_power: m must be >= 1");
    if (m == 1 || is_zero()) return *this;
    std::vector<Int> out(static_cast<size_t>(degree()) * m + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i * m] = c_[i];
    return from_coeffs(std::move(out));
}

QPoly QPoly::compress_power(int m) const {
    if (m < 1) throw std::logic_error("QPoly::compress_power: m must be >= 1");
    if (m == 1 || is_zero()) return *this;
    std::vector<Int> out(c_.size() / m + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % m != 0) throw std::logic_error("QPoly::compress_power: exponent not divisible");
        out[i / m] = c_[i];
    }
    return from_coeffs(std::move(out));
}

bool QPoly::exponents_divisible(int m) const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && i % static_cast<size_t>(m) != 0) return false;
    return true;
}

Int QPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    QPoly r = *this;
    for (auto& c : r.c_) c /= g;
    return r;
}

QPoly QPoly::divexact(const QPoly& d) const {
    if (d.is_zero()) throw std::logic_error("QPoly::divexact: division by zero");
    if (is_zero()) return QPoly();
    if (degree() < d.degree()) throw std::logic_error("QPoly::divexact: remainder nonzero");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - d.c_.size() + 1, 0);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Int& top = rem[static_cast<size_t>(k + d.degree())];
        if (top == 0) continue;
        Int qc, rc;
        mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        if (rc != 0)
            throw std::logic_error("QPoly::divexact: leading coefficient does not divide");
        quot[static_cast<size_t>(k)] = qc;
        for (size_t i = 0; i < d.c_.size(); ++i)
            rem[static_cast<size_t>(k) + i] -= qc * d.c_[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("QPoly::divexact: remainder nonzero");
    return from_coeffs(std::move(quot));
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) return QPoly();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;

    Int gc;
    mpz_gcd(gc.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

    // Primitive pseudo-remainder sequence.
    QPoly u = a.primitive_part();
    QPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // Pseudo-remainder lc(v)^(deg u - deg v + 1) * u mod v; scaling
        // up front keeps every leading-term cancellation integral.
        const Int lcv = v.leading();
        Int lc_pow;
        mpz_pow_ui(lc_pow.get_mpz_t(), lcv.get_mpz_t(),
                   static_cast<unsigned long>(u.degree() - v.degree() + 1));
        QPoly r = u;
        for (auto& c : r.c_) c *= lc_pow;
        while (!r.is_zero() && r.degree() >= v.degree()) {
            Int factor, check;
            mpz_tdiv_qr(factor.get_mpz_t(), check.get_mpz_t(), r.leading().get_mpz_t(),
                        lcv.get_mpz_t());
            if (check != 0) throw std::logic_error("QPoly::gcd: pseudo-division step not exact");
            int dk = r.degree() - v.degree();
            for (size_t i = 0; i < v.c_.size(); ++i)
                r.c_[i + static_cast<size_t>(dk)] -= factor * v.c_[i];
            r.trim();
        }
        u = std::move(v);
        v = r.is_zero() ? QPoly() : r.primitive_part();
    }
    QPoly g = u.primitive_part();
    for (auto& c : g.c_) c *= gc;
    if (g.leading() < 0) g = -g;
    return g;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeff(k);
        if (c == 0) continue;
        Int ab = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << ab.get_str();
        } else {
            if (ab != 1) os << ab.get_str() << "*";
            os << var;
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

QPoly q_int(int n) {
    if (n < 1) throw Error("q_int: argument must be positive, got " + std::to_string(n));
    std::vector<Int> c(static_cast<size_t>(n), 1);
    return QPoly::from_coeffs(std::move(c));
}

QPoly q_factorial(int n) {
    if (n < 0) throw Error("q_factorial: argument must be nonnegative");
    QPoly acc(1);
    for (int k = 1; k <= n; ++k) acc *= q_int(k);
    return acc;
}

QPoly q_factorial_base(int r, int m) {
    if (m < 1) throw Error("q_factorial_base: base exponent must be positive");
    return q_factorial(r).substitute_power(m);
}

QPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) return QPoly(0);
    if (k == 0 || k == n) return QPoly(1);
    return q_multinomial(n, {k, n - k});
}

QPoly q_multinomial(int n, const std::vector<int>& parts) {
    if (parts.empty()) throw Error("q_multinomial: parts must be nonempty");
    int sum = 0;
    for (int p : parts) {
        if (p < 1) throw Error("q_multinomial: parts must be positive");
        sum += p;
    }
    if (sum != n) throw Error("q_multinomial: parts must sum to n");
    QPoly acc = q_factorial(n);
    for (int p : parts) acc = acc.divexact(q_factorial(p));
    return acc;
}

}  // namespace gkgrowth
