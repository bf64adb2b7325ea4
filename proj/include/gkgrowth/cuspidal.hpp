#pragma once

#include <utility>

#include "gkgrowth/xlaurent.hpp"

namespace gkgrowth {

/// Leading term of the growth polynomial of a supercuspidal of GL_{n1}:
/// ([n1!]_q, n1(n1-1)/2).
std::pair<QPoly, int> cusp_leading(int n1);

/// Full growth polynomial for the supercuspidal attached to a generic
/// character of an unramified degree-n extension whose wild part has
/// level j.
XLaurent murnaghan_unramified(int n, int j);

/// Totally ramified counterpart. The exponents j(n^2-n-dim O)/(2n) are
/// carried exactly in the variable s = q^{1/(2n)}.
struct RamifiedGrowth {
    XLaurent in_s;
    int n = 1;
    /// True iff every s-exponent is a multiple of 2n, i.e. the result is
    /// a genuine Laurent polynomial over rational functions of q.
    bool exponents_integral = false;

    /// Rewritten in q; requires exponents_integral.
    XLaurent in_q() const;
};

RamifiedGrowth murnaghan_ramified(int n, int j);

/// Growth polynomial of a level-zero supercuspidal of GL_n; agrees with
/// murnaghan_unramified(n, 0) identically.
XLaurent level_zero(int n);

/// The three GL_2 supercuspidal cases, by stratum shape.
struct Gl2Case {
    enum class Kind { Level0, E2, E1 };
    Kind kind = Kind::Level0;
    int level = 0;  // stratum level n; ignored for Level0

    static Gl2Case level0() { return {Kind::Level0, 0}; }
    static Gl2Case e2(int level) { return {Kind::E2, level}; }
    static Gl2Case e1(int level) { return {Kind::E1, level}; }
};

XLaurent gl2_growth(const Gl2Case& c);

/// Dimension of the Jacquet-Langlands transfer to the quaternion algebra
/// in each GL_2 case, as a polynomial in q: 2, (q+1)q^{floor(n/2)}, 2q^n.
QPoly gl2_jl_dim(const Gl2Case& c);

/// Automorphic induction of a generic character theta of an unramified
/// quadratic extension, theta^tau theta^{-1} of level ell:
/// (q+1)X - 2q^ell.
XLaurent ai_unramified_quadratic(int ell);

/// A growth-polynomial source for one supercuspidal building block.
class CuspidalGrowth {
public:
    enum class Kind {
        LeadingOnly,
        Explicit,
        MurnaghanUnramified,
        MurnaghanRamified,
        LevelZero,
        Gl2,
        AiQuad,
    };

    CuspidalGrowth() = default;

    static CuspidalGrowth leading_only(int n1);
    /// Validates integrality, the leading term, and threshold >= 1;
    /// throws SemanticError otherwise.
    static CuspidalGrowth explicit_poly(int n1, XLaurent poly, int threshold);
    static CuspidalGrowth murnaghan_unr(int n, int j);
    static CuspidalGrowth murnaghan_ram(int n, int j);
    static CuspidalGrowth level0(int n);
    static CuspidalGrowth gl2(Gl2Case c);
    static CuspidalGrowth ai_quad(int ell);

    Kind kind() const { return kind_; }
    /// Matrix size n1 of the underlying GL_{n1}.
    int size() const { return n1_; }
    /// Level parameter (j, ell, or the stratum level), when meaningful.
    int level() const { return level_; }
    const Gl2Case& gl2_case() const { return gl2_; }
    /// Smallest N for which the polynomial is declared valid.
    int threshold() const { return threshold_; }

    /// True when full_polynomial() would succeed.
    bool has_full() const;
    /// The full growth polynomial; throws InsufficientCuspidalData for
    /// LeadingOnly sources and for ramified sources with fractional
    /// q-exponents.
    XLaurent full_polynomial() const;
    /// Leading term, available for every variant.
    std::pair<QPoly, int> leading() const { return cusp_leading(n1_); }

private:
    Kind kind_ = Kind::LeadingOnly;
    int n1_ = 1;
    int level_ = 0;
    int threshold_ = 1;
    XLaurent poly_;
    Gl2Case gl2_;
};

}  // namespace gkgrowth
