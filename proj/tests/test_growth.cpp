#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gkgrowth/errors.hpp"
#include "gkgrowth/growth.hpp"

using namespace gkgrowth;

namespace {

Segment seg(const std::string& id, int b, int e) { return Segment{id, b, e - b + 1}; }

Multisegment ms(std::vector<Segment> v) { return Multisegment(std::move(v)); }

// Table with one character symbol (GL_1, G = 1) and level-zero cuspidals
// of several sizes.
SymbolTable standard_table() {
    SymbolTable tab;
    tab.declare({"chi", 1, CuspidalGrowth::explicit_poly(1, XLaurent(QRat(1)), 1)});
    tab.declare({"rho2", 2, CuspidalGrowth::level0(2)});
    tab.declare({"rho3", 3, CuspidalGrowth::level0(3)});
    tab.declare({"lead4", 4, CuspidalGrowth::leading_only(4)});
    return tab;
}

Multisegment singletons(const std::string& id, int count) {
    std::vector<Segment> v;
    for (int i = 0; i < count; ++i) v.push_back(seg(id, i, i));
    return ms(std::move(v));
}

}  // namespace

TEST_CASE("parabolic_coset_count") {
    CHECK(parabolic_coset_count({1, 1}) == XLaurent::parse("(q + 1)*X"));
    CHECK(parabolic_coset_count({4}) == XLaurent(QRat(1)));
    CHECK(parabolic_coset_count({2, 1}) == XLaurent::term(QRat(q_int(3)), 2));
}

TEST_CASE("product_growth") {
    XLaurent g = XLaurent::parse("(q + 1)*X - 2");
    CHECK(product_growth({{2, g}}) == g);
    CHECK(product_growth({{1, XLaurent(QRat(1))}, {1, XLaurent(QRat(1))}}) ==
          XLaurent::parse("(q + 1)*X"));
    CHECK(product_growth({{2, g}, {1, XLaurent(QRat(1))}}) ==
          XLaurent::term(QRat(q_int(3)), 2) * g);
}

TEST_CASE("segment_growth") {
    SymbolTable tab = standard_table();
    const CuspidalGrowth& rho2 = tab.at("rho2").source;

    // Length 1 returns the source polynomial.
    CHECK(segment_growth(seg("rho2", 0, 0), rho2) == level_zero(2));

    // n1 = 1, r = 2, G = 1: <Delta> is one-dimensional.
    CHECK(segment_growth(seg("chi", 0, 1), tab.at("chi").source) == XLaurent(QRat(1)));

    // n1 = 2, r = 2, level zero: (q^2+q+1) X^2 ((q+1)X-2)^2.
    XLaurent expected = XLaurent::term(QRat(q_int(3).substitute_power(1) * QPoly(1)), 2) *
                        level_zero(2).pow(2);
    XLaurent got = segment_growth(seg("rho2", 0, 1), rho2);
    CHECK(got == XLaurent::term(QRat(QPoly::from_coeffs({1, 1, 1})), 2) * level_zero(2).pow(2));
    CHECK(got == expected);
    // Leading coefficient [4!]_q / [2!]_{q^2}.
    CHECK(got.leading_coeff() == QRat(q_factorial(4), q_factorial_base(2, 2)));

    CHECK_THROWS_AS(segment_growth(seg("lead4", 0, 1), tab.at("lead4").source),
                    InsufficientCuspidalData);
}

TEST_CASE("segment_growth closed form equals the unrolled recursion") {
    for (int n1 = 1; n1 <= 3; ++n1) {
        CuspidalGrowth src = CuspidalGrowth::level0(n1);
        for (int r = 1; r <= 3; ++r) {
            Segment d{"x", 0, r};
            CHECK(segment_growth(d, src) == segment_growth_by_recursion(d, src));
        }
    }
    // Also for an explicit non-level-zero source.
    CuspidalGrowth expl =
        CuspidalGrowth::explicit_poly(2, XLaurent::parse("(q + 1)*X - 2*q^3"), 1);
    for (int r = 1; r <= 4; ++r) {
        Segment d{"x", 0, r};
        CHECK(segment_growth(d, expl) == segment_growth_by_recursion(d, expl));
    }
}

TEST_CASE("leading_term") {
    SymbolTable tab = standard_table();

    // Single cuspidal {rho}: ([n1!]_q, n1(n1-1)/2), including
    // leading-only sources.
    LeadingTerm lt4 = leading_term(ms({seg("lead4", 0, 0)}), tab);
    CHECK(lt4.coeff == QRat(q_factorial(4)));
    CHECK(lt4.exponent == 6);

    // All singletons of total size n: ([n!]_q, n(n-1)/2).
    LeadingTerm st = leading_term(singletons("chi", 4), tab);
    CHECK(st.coeff == QRat(q_factorial(4)));
    CHECK(st.exponent == 6);

    // {[rho,nu rho], nu rho, nu^2 rho} with n1 = 1: exponent 8-3 = 5.
    LeadingTerm mixed =
        leading_term(ms({seg("chi", 0, 1), seg("chi", 1, 1), seg("chi", 2, 2)}), tab);
    CHECK(mixed.exponent == 5);
    CHECK(mixed.coeff == QRat(q_factorial(4), q_factorial(2)));
}

TEST_CASE("gk_dimension on the Bernstein-Zelevinsky example") {
    // gk over the poset nodes must give 8n1^2 - {2,3,3,4,5} n1; the
    // values are quadratics in n1, so four sizes pin them down.
    for (int n1 = 1; n1 <= 4; ++n1) {
        SymbolTable tab;
        CuspidalGrowth src = CuspidalGrowth::leading_only(n1);
        tab.declare({"rho", n1, src});
        Multisegment top =
            ms({seg("rho", 0, 0), seg("rho", 1, 1), seg("rho", 1, 1), seg("rho", 2, 2)});
        Poset poset = poset_below(top);
        REQUIRE(poset.nodes.size() == 5);
        std::multiset<long> dims;
        for (const auto& node : poset.nodes) dims.insert(gk_dimension(node, tab));
        long b = 8L * n1 * n1;
        CHECK(dims == std::multiset<long>{b - 2 * n1, b - 3 * n1, b - 3 * n1, b - 4 * n1,
                                          b - 5 * n1});
        CHECK(gk_dimension(top, tab) == b - 2 * n1);
    }
}

TEST_CASE("gk_dimension of a single segment is n(n-r)/2") {
    for (int n1 = 1; n1 <= 3; ++n1) {
        SymbolTable tab;
        tab.declare({"rho", n1, CuspidalGrowth::leading_only(n1)});
        for (int r = 1; r <= 4; ++r) {
            long n = static_cast<long>(n1) * r;
            CHECK(gk_dimension(ms({seg("rho", 0, r - 1)}), tab) == n * (n - r) / 2);
        }
    }
}

TEST_CASE("gk_dimension strictly decreases along Hasse edges") {
    SymbolTable tab = standard_table();
    Multisegment top = ms({seg("chi", 0, 0), seg("chi", 1, 1), seg("chi", 1, 2),
                           seg("chi", 3, 3), seg("chi", 2, 2)});
    Poset poset = poset_below(top);
    for (const auto& [u, v] : poset.hasse_edges)
        CHECK(gk_dimension(poset.nodes[static_cast<size_t>(v)], tab) <
              gk_dimension(poset.nodes[static_cast<size_t>(u)], tab));
}

TEST_CASE("langlands_quotient_growth_disjoint: Steinberg cases") {
    SymbolTable tab = standard_table();

    CHECK(langlands_quotient_growth_disjoint(singletons("chi", 2), tab) ==
          XLaurent::parse("(q + 1)*X - 1"));

    XLaurent st3 = langlands_quotient_growth_disjoint(singletons("chi", 3), tab);
    CHECK(st3 == XLaurent::parse("(q^3 + 2*q^2 + 2*q + 1)*X^3 - (2*q^2 + 2*q + 2)*X^2 + 1"));

    // Single segment reduces to segment_growth.
    CHECK(langlands_quotient_growth_disjoint(ms({seg("rho2", 0, 1)}), tab) ==
          segment_growth(seg("rho2", 0, 1), tab.at("rho2").source));

    // Steinberg at N = 1 evaluates to the finite-field Steinberg
    // dimension q^{n(n-1)/2}.
    for (int n = 2; n <= 4; ++n) {
        XLaurent st = langlands_quotient_growth_disjoint(singletons("chi", n), tab);
        CHECK(st.is_integral());
        for (long q0 : {2L, 3L, 5L}) {
            Int expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(q0),
                          static_cast<unsigned long>(n * (n - 1) / 2));
            CHECK(st.eval_dim(Int(q0), 1) == expect);
        }
    }
}

TEST_CASE("langlands_quotient_growth_disjoint rejects unsupported inputs") {
    SymbolTable tab = standard_table();
    CHECK_THROWS_AS(
        langlands_quotient_growth_disjoint(ms({seg("chi", 0, 1), seg("chi", 1, 2)}), tab),
        UnsupportedMultisegment);
    CHECK_THROWS_AS(langlands_quotient_growth_disjoint(singletons("lead4", 2), tab),
                    InsufficientCuspidalData);
}

TEST_CASE("disjoint quotient growth matches the explicit closed form") {
    // For pairwise disjoint a on one symbol, the alternating sum equals
    // [n; n1..n1]_q X^{s(s-1)n1^2/2} G_rho^s
    //   sum_b (-1)^{|a|-|b|} prod [r_i!]_{q^{n1}}^{-1} X^{-r_i(r_i-1)n1/2}.
    SymbolTable tab = standard_table();
    for (const auto& a : {ms({seg("rho2", 0, 1), seg("rho2", 2, 2)}),
                          ms({seg("rho2", 0, 0), seg("rho2", 1, 2), seg("rho2", 3, 3)}),
                          singletons("rho2", 3)}) {
        int n1 = 2;
        int s = 0;
        for (const auto& d : a.segments()) s += d.length;
        XLaurent prefix =
            XLaurent::term(QRat(q_multinomial(n1 * s, std::vector<int>(s, n1))),
                           s * (s - 1) * n1 * n1 / 2) *
            level_zero(2).pow(s);
        XLaurent sum;
        for (const auto& b : poset_below(a).nodes) {
            QRat c(1);
            int shift = 0;
            for (const auto& d : b.segments()) {
                c = c * QRat(QPoly(1), q_factorial_base(d.length, n1));
                shift -= d.length * (d.length - 1) * n1 / 2;
            }
            XLaurent term = XLaurent::term(c, shift);
            if ((a.size() - b.size()) % 2 != 0) term = -term;
            sum += term;
        }
        CHECK(langlands_quotient_growth_disjoint(a, tab) == prefix * sum);
    }
}

TEST_CASE("character-support quotients match the composition-indexed sum") {
    // For all-singleton a over a character (n1 = 1, G = 1), the quotient
    // growth equals sum over ordered compositions (r_1,...,r_m) of s of
    // (-1)^{s-m} [s; r_1,...,r_m]_q X^{(s^2 - sum r_i^2)/2}, since b <= a
    // corresponds to merging adjacent runs.
    SymbolTable tab;
    tab.declare({"chi", 1, CuspidalGrowth::explicit_poly(1, XLaurent(QRat(1)), 1)});
    for (int s = 2; s <= 5; ++s) {
        XLaurent expected;
        // Walk compositions as bitmasks of the s-1 merge gaps.
        for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
            std::vector<int> runs{1};
            for (int gap = 0; gap < s - 1; ++gap) {
                if (mask & (1u << gap))
                    ++runs.back();
                else
                    runs.push_back(1);
            }
            int m = static_cast<int>(runs.size());
            int sq = 0;
            for (int r : runs) sq += r * r;
            XLaurent term = XLaurent::term(QRat(q_multinomial(s, runs)), (s * s - sq) / 2);
            if ((s - m) % 2 != 0) term = -term;
            expected += term;
        }
        CHECK(langlands_quotient_growth_disjoint(singletons("chi", s), tab) == expected);
    }
}

TEST_CASE("normalize_I") {
    CHECK(normalize_I(1, XLaurent(QRat(1))) == XLaurent(QRat(1)));
    XLaurent n2 = normalize_I(2, XLaurent::parse("(q + 1)*X - 2"));
    CHECK(n2 == XLaurent(QRat(1)) - XLaurent::term(QRat(QPoly(2), q_int(2)), -1));
    CHECK_FALSE(n2.is_integral());
    CHECK(normalize_I(2, XLaurent::parse("(q + 1)*X")) == XLaurent(QRat(1)));
}

TEST_CASE("normalize_I is multiplicative over induced products") {
    std::vector<std::vector<std::pair<int, XLaurent>>> samples{
        {{1, XLaurent(QRat(1))}, {1, XLaurent(QRat(1))}},
        {{2, level_zero(2)}, {1, XLaurent(QRat(1))}},
        {{2, level_zero(2)}, {3, level_zero(3)}},
        {{2, gl2_growth(Gl2Case::e1(2))}, {2, level_zero(2)}, {1, XLaurent(QRat(1))}},
    };
    for (const auto& factors : samples) {
        int n = 0;
        XLaurent rhs(QRat(1));
        for (const auto& [ni, gi] : factors) {
            n += ni;
            rhs *= normalize_I(ni, gi);
        }
        CHECK(normalize_I(n, product_growth(factors)) == rhs);
    }
}

TEST_CASE("normalized segment growth identity") {
    // I(G_<Delta>) = [r!]_{q^{n1}}^{-1} X^{-(r-1)n/2} I(G_rho)^r.
    for (int n1 = 1; n1 <= 3; ++n1) {
        CuspidalGrowth src = CuspidalGrowth::level0(n1);
        XLaurent i_rho = normalize_I(n1, src.full_polynomial());
        for (int r = 2; r <= 3; ++r) {
            int n = n1 * r;
            XLaurent lhs = normalize_I(n, segment_growth(Segment{"x", 0, r}, src));
            XLaurent rhs = XLaurent::term(QRat(QPoly(1), q_factorial_base(r, n1)),
                                          -(r - 1) * n / 2) *
                           i_rho.pow(r);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("leading term consistency across routes") {
    SymbolTable tab = standard_table();
    for (const auto& a : {ms({seg("rho2", 0, 1)}), ms({seg("rho2", 0, 0), seg("rho2", 1, 1)}),
                          singletons("chi", 4), ms({seg("rho3", 0, 1), seg("rho3", 2, 2)})}) {
        LeadingTerm lt = leading_term(a, tab);
        XLaurent g = exact_growth(a, tab);
        CHECK(g.leading_exponent() == lt.exponent);
        CHECK(g.leading_coeff() == lt.coeff);
        CHECK(gk_dimension(a, tab) == lt.exponent);
    }
}

TEST_CASE("exact_growth assembles products across symbols") {
    SymbolTable tab = standard_table();
    // Two level-zero GL2 cuspidals on distinct symbols.
    SymbolTable tab2;
    tab2.declare({"a", 2, CuspidalGrowth::level0(2)});
    tab2.declare({"b", 2, CuspidalGrowth::level0(2)});
    XLaurent g = exact_growth(ms({seg("a", 0, 0), seg("b", 0, 0)}), tab2);
    CHECK(g == XLaurent::term(QRat(q_multinomial(4, {2, 2})), 4) * level_zero(2).pow(2));

    // Mixed: a disjoint pair on one symbol times a segment on another.
    XLaurent mixed = exact_growth(ms({seg("chi", 0, 0), seg("chi", 1, 1), seg("rho2", 0, 1)}),
                                  tab);
    XLaurent st2 = langlands_quotient_growth_disjoint(singletons("chi", 2), tab);
    XLaurent seg22 = segment_growth(seg("rho2", 0, 1), tab.at("rho2").source);
    CHECK(mixed == product_growth({{2, st2}, {4, seg22}}));

    CHECK_THROWS_AS(exact_growth(ms({seg("chi", 0, 1), seg("chi", 1, 2)}), tab),
                    UnsupportedMultisegment);
    CHECK_THROWS_AS(exact_growth(ms({seg("lead4", 0, 0)}), tab), InsufficientCuspidalData);
}

TEST_CASE("integrality property: random disjoint multisegments, n <= 8") {
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> pick_source(0, 3);
    int trials = 0;
    while (trials < 200) {
        SymbolTable tab;
        int n1 = 0;
        switch (pick_source(rng)) {
            case 0:
                n1 = 1 + static_cast<int>(rng() % 3);
                tab.declare({"r", n1, CuspidalGrowth::level0(n1)});
                break;
            case 1:
                n1 = 2;
                tab.declare({"r", 2, CuspidalGrowth::gl2(Gl2Case::e2(1 + static_cast<int>(rng() % 4)))});
                break;
            case 2:
                n1 = 2;
                tab.declare({"r", 2, CuspidalGrowth::gl2(Gl2Case::e1(1 + static_cast<int>(rng() % 4)))});
                break;
            default:
                n1 = 1 + static_cast<int>(rng() % 2);
                tab.declare({"r", n1,
                             CuspidalGrowth::explicit_poly(n1, level_zero(n1), 1)});
                break;
        }
        // Random pairwise disjoint family with n1 * sum r_i <= 8.
        int budget = 8 / n1;
        std::vector<Segment> segs;
        int cursor = 0;
        while (budget > 0) {
            int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(budget));
            segs.push_back(Segment{"r", cursor, r});
            cursor += r + static_cast<int>(rng() % 2);  // sometimes adjacent, sometimes gapped
            budget -= r;
            if (rng() % 3 == 0) break;
        }
        if (segs.empty()) continue;
        ++trials;
        Multisegment a{std::move(segs)};
        XLaurent g = exact_growth(a, tab);
        CAPTURE(a.str());
        CHECK(g.is_integral());
        LeadingTerm lt = leading_term(a, tab);
        CHECK(g.leading_exponent() == lt.exponent);
        CHECK(g.leading_coeff() == lt.coeff);
    }
}

TEST_CASE("poset and growth across two symbols") {
    SymbolTable tab;
    tab.declare({"a", 1, CuspidalGrowth::explicit_poly(1, XLaurent(QRat(1)), 1)});
    tab.declare({"b", 1, CuspidalGrowth::explicit_poly(1, XLaurent(QRat(1)), 1)});
    Multisegment m({Segment{"a", 0, 1}, Segment{"a", 1, 1}, Segment{"b", 0, 1},
                    Segment{"b", 1, 1}});
    // Merges on the two symbols are independent: 2 x 2 nodes.
    Poset poset = poset_below(m);
    CHECK(poset.nodes.size() == 4);
    CHECK(poset.hasse_edges.size() == 4);

    // Growth factors through the two Steinberg quotients.
    XLaurent st2 = langlands_quotient_growth_disjoint(
        Multisegment({Segment{"a", 0, 1}, Segment{"a", 1, 1}}), tab);
    CHECK(exact_growth(m, tab) == product_growth({{2, st2}, {2, st2}}));
}
