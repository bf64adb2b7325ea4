#include "gkgrowth/qrat.hpp"

#include <sstream>

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("QRat: zero denominator");
    canonicalize();
}

void QRat::canonicalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat& QRat::operator+=(const QRat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

QRat& QRat::operator*=(const QRat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& o) {
    if (o.is_zero()) throw Error("QRat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    if (den_.is_zero()) throw Error("QRat: division by zero");
    canonicalize();
    return *this;
}

QRat QRat::inverse() const {
    if (is_zero()) throw Error("QRat: inverse of zero");
    return QRat(den_, num_);
}

mpq_class QRat::eval(const Int& q0) const {
    Int d = den_.eval(q0);
    if (d == 0) throw Error("QRat::eval: denominator vanishes at q = " + q0.get_str());
    mpq_class r(num_.eval(q0), d);
    r.canonicalize();
    return r;
}

QRat QRat::substitute_power(int m) const {
    return QRat(num_.substitute_power(m), den_.substitute_power(m));
}

QRat QRat::compress_power(int m) const {
    return QRat(num_.compress_power(m), den_.compress_power(m));
}

int QRat::sign() const {
    if (num_.is_zero()) return 0;
    return num_.leading() > 0 ? 1 : -1;
}

namespace {

bool needs_parens_as_factor(const QPoly& p) {
    // A single positive term like "q^2" or "3" stands alone; anything
    // with a sign, a sum, or an inner '*' must be wrapped.
    if (p.is_zero()) return false;
    int nonzero = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++nonzero;
    if (nonzero > 1) return true;
    if (p.leading() < 0) return true;
    return p.leading() != 1 && p.degree() > 0;  // "3*q" would misparse after '/'
}

}  // namespace

std::string QRat::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    std::ostringstream os;
    if (needs_parens_as_factor(num_))
        os << "(" << num_.str(var) << ")";
    else
        os << num_.str(var);
    os << "/";
    if (needs_parens_as_factor(den_))
        os << "(" << den_.str(var) << ")";
    else
        os << den_.str(var);
    return os.str();
}

}  // namespace gkgrowth
