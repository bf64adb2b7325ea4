#include "gkgrowth/cuspidal.hpp"

#include <algorithm>

#include "gkgrowth/errors.hpp"
#include "gkgrowth/orbits.hpp"

namespace gkgrowth {

std::pair<QPoly, int> cusp_leading(int n1) {
    if (n1 < 1) throw Error("cusp_leading: size must be positive");
    return {q_factorial(n1), n1 * (n1 - 1) / 2};
}

namespace {

Int factorial(int k) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

int orbit_sign(int n, int r) { return (n + r) % 2 == 0 ? 1 : -1; }

}  // namespace

XLaurent murnaghan_unramified(int n, int j) {
    if (n < 1) throw Error("murnaghan_unramified: n must be positive");
    if (j < 0) throw Error("murnaghan_unramified: level must be nonnegative");
    XLaurent g;
    for (const auto& p : partitions_of(n)) {
        int r = p.rows();
        int dim = orbit_dim(p);
        // exponent of q: (n^2 - n - dim O) j / 2, a nonnegative integer
        int e = (n * n - n - dim) * j / 2;
        QRat scalar(QPoly(Int(orbit_sign(n, r) * n) * factorial(r - 1)), QPoly(w_orbit(p)));
        QRat coeff = scalar * QRat(QPoly::monomial(1, e)) * QRat(q_multinomial(n, p.parts));
        g += XLaurent::term(coeff, dim / 2);
    }
    return g;
}

RamifiedGrowth murnaghan_ramified(int n, int j) {
    if (n < 1) throw Error("murnaghan_ramified: n must be positive");
    if (j < 0) throw Error("murnaghan_ramified: level must be nonnegative");
    const int m = 2 * n;  // s^m = q
    XLaurent g;
    for (const auto& p : partitions_of(n)) {
        int r = p.rows();
        int dim = orbit_dim(p);
        QRat scalar(QPoly(Int(orbit_sign(n, r)) * factorial(r - 1)), QPoly(w_orbit(p)));
        // q/(q-1) * (r - sum_i q^{-n_i}), written with nonnegative
        // exponents: (r q^a - sum q^{a - n_i}) / (q^{a-1} (q - 1)),
        // a = max part.
        int a = p.parts.front();
        QPoly num = QPoly::monomial(r, a);
        for (int part : p.parts) num -= QPoly::monomial(1, a - part);
        QPoly den = QPoly::monomial(1, a - 1) * (QPoly::var() - QPoly(1));
        QRat qfactor = QRat(num, den).substitute_power(m);
        // s-power carrying the level: s^{(n^2 - n - dim O) j}
        int s_exp = (n * n - n - dim) * j;
        QRat coeff = scalar * qfactor * QRat(QPoly::monomial(1, s_exp)) *
                     QRat(q_multinomial(n, p.parts).substitute_power(m));
        g += XLaurent::term(coeff, dim / 2);
    }
    RamifiedGrowth out;
    out.in_s = std::move(g);
    out.n = n;
    out.exponents_integral = true;
    for (const auto& [k, c] : out.in_s.terms())
        out.exponents_integral = out.exponents_integral && c.exponents_divisible(m);
    return out;
}

XLaurent RamifiedGrowth::in_q() const {
    if (!exponents_integral)
        throw InsufficientCuspidalData(
            "murnaghan_ramified: fractional q-exponents (level and n leave "
            "j(n^2-n-dim O)/(2n) non-integral); result only exists over s = q^(1/" +
            std::to_string(2 * n) + ")");
    return in_s.compress_coeff_power(2 * n);
}

XLaurent level_zero(int n) {
    if (n < 1) throw Error("level_zero: n must be positive");
    XLaurent g;
    for (const auto& p : partitions_of(n)) {
        int r = p.rows();
        int dim = orbit_dim(p);
        QRat scalar(QPoly(Int(orbit_sign(n, r) * n) * factorial(r - 1)), QPoly(w_orbit(p)));
        g += XLaurent::term(scalar * QRat(q_multinomial(n, p.parts)), dim / 2);
    }
    return g;
}

XLaurent gl2_growth(const Gl2Case& c) {
    XLaurent lead = XLaurent::term(QRat(q_int(2)), 1);  // (q+1) X
    return lead - XLaurent(QRat(gl2_jl_dim(c)));
}

QPoly gl2_jl_dim(const Gl2Case& c) {
    switch (c.kind) {
        case Gl2Case::Kind::Level0:
            return QPoly(2);
        case Gl2Case::Kind::E2:
            if (c.level < 1) throw Error("gl2: stratum level must be positive");
            return q_int(2) * QPoly::monomial(1, c.level / 2);
        case Gl2Case::Kind::E1:
            if (c.level < 1) throw Error("gl2: stratum level must be positive");
            return QPoly::monomial(2, c.level);
    }
    throw Error("gl2: unknown case");
}

XLaurent ai_unramified_quadratic(int ell) {
    if (ell < 0) throw Error("ai_unramified_quadratic: level must be nonnegative");
    return XLaurent::term(QRat(q_int(2)), 1) - XLaurent(QRat(QPoly::monomial(2, ell)));
}

CuspidalGrowth CuspidalGrowth::leading_only(int n1) {
    if (n1 < 1) throw Error("CuspidalGrowth: size must be positive");
    CuspidalGrowth c;
    c.kind_ = Kind::LeadingOnly;
    c.n1_ = n1;
    return c;
}

CuspidalGrowth CuspidalGrowth::explicit_poly(int n1, XLaurent poly, int threshold) {
    if (n1 < 1) throw Error("CuspidalGrowth: size must be positive");
    if (threshold < 1) throw SemanticError("explicit growth source: threshold must be >= 1");
    if (!poly.is_integral())
        throw SemanticError("explicit growth source: polynomial is not integral");
    auto [lead, exp] = cusp_leading(n1);
    if (poly.is_zero() || poly.leading_exponent() != exp ||
        poly.leading_coeff() != QRat(lead))
        throw SemanticError("explicit growth source: leading term must be [" +
                            std::to_string(n1) + "!]_q * X^" + std::to_string(exp));
    CuspidalGrowth c;
    c.kind_ = Kind::Explicit;
    c.n1_ = n1;
    c.threshold_ = threshold;
    c.poly_ = std::move(poly);
    return c;
}

CuspidalGrowth CuspidalGrowth::murnaghan_unr(int n, int j) {
    CuspidalGrowth c;
    c.kind_ = Kind::MurnaghanUnramified;
    c.n1_ = n;
    c.level_ = j;
    c.poly_ = murnaghan_unramified(n, j);
    return c;
}

CuspidalGrowth CuspidalGrowth::murnaghan_ram(int n, int j) {
    if (n < 1) throw Error("CuspidalGrowth: size must be positive");
    if (j < 0) throw Error("CuspidalGrowth: level must be nonnegative");
    CuspidalGrowth c;
    c.kind_ = Kind::MurnaghanRamified;
    c.n1_ = n;
    c.level_ = j;
    return c;
}

CuspidalGrowth CuspidalGrowth::level0(int n) {
    CuspidalGrowth c;
    c.kind_ = Kind::LevelZero;
    c.n1_ = n;
    c.poly_ = level_zero(n);
    return c;
}

CuspidalGrowth CuspidalGrowth::gl2(Gl2Case g) {
    CuspidalGrowth c;
    c.kind_ = Kind::Gl2;
    c.n1_ = 2;
    c.level_ = g.level;
    c.gl2_ = g;
    c.poly_ = gl2_growth(g);
    return c;
}

CuspidalGrowth CuspidalGrowth::ai_quad(int ell) {
    CuspidalGrowth c;
    c.kind_ = Kind::AiQuad;
    c.n1_ = 2;
    c.level_ = ell;
    c.poly_ = ai_unramified_quadratic(ell);
    return c;
}

bool CuspidalGrowth::has_full() const {
    switch (kind_) {
        case Kind::LeadingOnly:
            return false;
        case Kind::MurnaghanRamified:
            return murnaghan_ramified(n1_, level_).exponents_integral;
        default:
            return true;
    }
}

XLaurent CuspidalGrowth::full_polynomial() const {
    switch (kind_) {
        case Kind::LeadingOnly:
            throw InsufficientCuspidalData(
                "growth source only determines the leading term; a full polynomial was "
                "requested");
        case Kind::MurnaghanRamified:
            return murnaghan_ramified(n1_, level_).in_q();
        default:
            return poly_;
    }
}

}  // namespace gkgrowth
