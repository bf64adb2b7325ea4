#pragma once

#include <vector>

#include "gkgrowth/segments.hpp"
#include "gkgrowth/xlaurent.hpp"

namespace gkgrowth {

/// Leading term of a growth polynomial: coeff * X^exponent.
struct LeadingTerm {
    QRat coeff;
    long exponent = 0;

    bool operator==(const LeadingTerm& o) const {
        return coeff == o.coeff && exponent == o.exponent;
    }
};

/// |P_lambda \ G / K_N| as a polynomial in X:
/// [n; parts]_q * X^{(n^2 - sum parts_i^2)/2}.
XLaurent parabolic_coset_count(const std::vector<int>& parts);

/// Growth polynomial of the normalized induction pi_1 x ... x pi_r from
/// the block sizes and factor growth polynomials.
XLaurent product_growth(const std::vector<std::pair<int, XLaurent>>& factors);

/// Growth polynomial of the segment representation <Delta> by the closed
/// form [r!]_{q^{n1}}^{-1} [n; n1,...,n1]_q X^{n1(n1-1)r(r-1)/2} G_rho^r.
/// Throws InsufficientCuspidalData when the source has no full
/// polynomial.
XLaurent segment_growth(const Segment& d, const CuspidalGrowth& source);

/// Same value by unrolling the one-step recursion
/// G_Delta = [n-1 choose n1-1]_q X^{n(n1-1)} G_{Delta^-} G_rho; kept as
/// an independent route for verification.
XLaurent segment_growth_by_recursion(const Segment& d, const CuspidalGrowth& source);

/// Leading term of G_<a>: [n!]_q / prod [r_i!]_{q^{n_i}} times
/// X^{(n^2 - sum n_i r_i^2)/2}. Works for leading-only sources.
LeadingTerm leading_term(const Multisegment& a, const SymbolTable& symbols);

/// Gelfand-Kirillov dimension (n^2 - sum n_i r_i^2)/2 as an exact
/// integer.
long gk_dimension(const Multisegment& a, const SymbolTable& symbols);

/// Exact growth polynomial of the Langlands quotient <a> for a
/// single-symbol multisegment with pairwise disjoint segments, via the
/// alternating Grothendieck-ring sum over poset_below(a). Throws
/// UnsupportedMultisegment otherwise.
XLaurent langlands_quotient_growth_disjoint(const Multisegment& a, const SymbolTable& symbols);

/// The normalization homomorphism: scale by [n!]_q^{-1} and shift
/// X-exponents by -(n^2-n)/2.
XLaurent normalize_I(int n, const XLaurent& g);

/// Exact growth polynomial for the supported classes: per symbol either
/// a single segment or pairwise disjoint segments, assembled across
/// symbols with product_growth. Throws UnsupportedMultisegment for
/// linked same-symbol segments and InsufficientCuspidalData for
/// leading-only sources.
XLaurent exact_growth(const Multisegment& a, const SymbolTable& symbols);

}  // namespace gkgrowth
