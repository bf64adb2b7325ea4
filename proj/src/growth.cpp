#include "gkgrowth/growth.hpp"

#include <map>
#include <string>

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

XLaurent parabolic_coset_count(const std::vector<int>& parts) {
    int n = 0, sq = 0;
    for (int p : parts) {
        n += p;
        sq += p * p;
    }
    return XLaurent::term(QRat(q_multinomial(n, parts)), (n * n - sq) / 2);
}

XLaurent product_growth(const std::vector<std::pair<int, XLaurent>>& factors) {
    if (factors.empty()) throw Error("product_growth: empty factor list");
    std::vector<int> sizes;
    sizes.reserve(factors.size());
    for (const auto& [ni, gi] : factors) {
        if (ni < 1) throw Error("product_growth: sizes must be positive");
        sizes.push_back(ni);
    }
    XLaurent g = parabolic_coset_count(sizes);
    for (const auto& [ni, gi] : factors) g *= gi;
    return g;
}

XLaurent segment_growth(const Segment& d, const CuspidalGrowth& source) {
    int n1 = source.size();
    int r = d.length;
    int n = n1 * r;
    XLaurent rho = source.full_polynomial();
    if (r == 1) return rho;
    QRat coeff(q_multinomial(n, std::vector<int>(static_cast<size_t>(r), n1)),
               q_factorial_base(r, n1));
    int exp = n1 * (n1 - 1) * r * (r - 1) / 2;
    return XLaurent::term(coeff, exp) * rho.pow(r);
}

XLaurent segment_growth_by_recursion(const Segment& d, const CuspidalGrowth& source) {
    int n1 = source.size();
    XLaurent rho = source.full_polynomial();
    XLaurent g = rho;
    for (int k = 2; k <= d.length; ++k) {
        int n = n1 * k;
        // One derivative step: the coset count of the (n-n1, n1-1) flag
        // in GL_{n-1} carries the X-exponent (n-n1)(n1-1).
        g = XLaurent::term(QRat(q_binomial(n - 1, n1 - 1)), (n - n1) * (n1 - 1)) * g * rho;
    }
    return g;
}

LeadingTerm leading_term(const Multisegment& a, const SymbolTable& symbols) {
    int n = a.total_size(symbols);
    if (n == 0) throw SemanticError("leading_term: empty multisegment");
    QPoly denom(1);
    long weighted_sq = 0;
    for (const auto& s : a.segments()) {
        int ni = symbols.at(s.symbol).size;
        denom *= q_factorial_base(s.length, ni);
        weighted_sq += static_cast<long>(ni) * s.length * s.length;
    }
    LeadingTerm lt;
    lt.coeff = QRat(q_factorial(n), denom);
    lt.exponent = (static_cast<long>(n) * n - weighted_sq) / 2;
    return lt;
}

long gk_dimension(const Multisegment& a, const SymbolTable& symbols) {
    int n = a.total_size(symbols);
    long weighted_sq = 0;
    for (const auto& s : a.segments())
        weighted_sq += static_cast<long>(symbols.at(s.symbol).size) * s.length * s.length;
    long diff = static_cast<long>(n) * n - weighted_sq;
    // n^2 and sum n_i r_i^2 always share parity: n_i r_i^2 = n_i r_i (mod 2).
    if (diff % 2 != 0) throw std::logic_error("gk_dimension: parity violation");
    return diff / 2;
}

namespace {

// product_growth over the segments of one multisegment, each factor a
// segment growth polynomial.
XLaurent standard_module_growth(const Multisegment& b, const CuspidalGrowth& source) {
    std::vector<std::pair<int, XLaurent>> factors;
    factors.reserve(b.size());
    for (const auto& s : b.segments())
        factors.emplace_back(source.size() * s.length, segment_growth(s, source));
    return product_growth(factors);
}

}  // namespace

XLaurent langlands_quotient_growth_disjoint(const Multisegment& a, const SymbolTable& symbols) {
    if (a.empty()) throw SemanticError("langlands_quotient_growth_disjoint: empty multisegment");
    if (!supports_pairwise_disjoint(a))
        throw UnsupportedMultisegment(
            "exact growth of <a> requires pairwise disjoint segments on a single symbol; "
            "general multisegments need Zelevinsky multiplicities");
    const CuspidalGrowth& source = symbols.at(a[0].symbol).source;
    Poset poset = poset_below(a);
    XLaurent g;
    size_t top_count = a.size();
    for (const auto& b : poset.nodes) {
        XLaurent pb = standard_module_growth(b, source);
        if ((top_count - b.size()) % 2 != 0) pb = -pb;
        g += pb;
    }
    return g;
}

XLaurent normalize_I(int n, const XLaurent& g) {
    if (n < 1) throw Error("normalize_I: n must be positive");
    return g.scaled(QRat(QPoly(1), q_factorial(n))).shifted(-(n * n - n) / 2);
}

XLaurent exact_growth(const Multisegment& a, const SymbolTable& symbols) {
    if (a.empty()) throw SemanticError("exact_growth: empty multisegment");
    std::map<std::string, std::vector<Segment>> by_symbol;
    for (const auto& s : a.segments()) {
        symbols.at(s.symbol);  // validate declaration
        by_symbol[s.symbol].push_back(s);
    }
    std::vector<std::pair<int, XLaurent>> factors;
    for (const auto& [id, segs] : by_symbol) {
        const CuspidalSymbol& sym = symbols.at(id);
        Multisegment group{std::vector<Segment>(segs)};
        int group_size = group.total_size(symbols);
        if (segs.size() == 1) {
            factors.emplace_back(group_size, segment_growth(segs[0], sym.source));
        } else if (supports_pairwise_disjoint(group)) {
            factors.emplace_back(group_size, langlands_quotient_growth_disjoint(group, symbols));
        } else {
            throw UnsupportedMultisegment(
                "symbol '" + id +
                "' carries overlapping segments; exact growth is only available for single "
                "segments and pairwise disjoint families");
        }
    }
    if (factors.size() == 1) return factors[0].second;
    return product_growth(factors);
}

}  // namespace gkgrowth
