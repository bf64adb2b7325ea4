#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkgrowth/errors.hpp"
#include "gkgrowth/sln.hpp"

using namespace gkgrowth;

namespace {

Segment seg(const std::string& id, int b, int e) { return Segment{id, b, e - b + 1}; }

std::map<std::string, std::string> identity_perm(std::initializer_list<std::string> ids) {
    std::map<std::string, std::string> p;
    for (const auto& id : ids) p[id] = id;
    return p;
}

std::map<std::string, std::string> swap_perm(const std::string& a, const std::string& b) {
    return {{a, b}, {b, a}};
}

}  // namespace

TEST_CASE("twist_multisegment") {
    Multisegment a({seg("rho", 0, 1), seg("rho'", 0, 1)});
    CHECK(twist_multisegment(a, identity_perm({"rho", "rho'"})) == a);
    // Swapping twist-related symbols fixes this multisegment as a multiset.
    CHECK(twist_multisegment(a, swap_perm("rho", "rho'")) == a);

    Multisegment b({seg("rho", 0, 1), seg("rho'", 2, 2)});
    CHECK(twist_multisegment(b, swap_perm("rho", "rho'")) ==
          Multisegment({seg("rho'", 0, 1), seg("rho", 2, 2)}));

    CHECK_THROWS_AS(twist_multisegment(a, identity_perm({"rho"})), UnknownSymbol);
}

TEST_CASE("twist_stabilizer_count") {
    Multisegment a({seg("rho", 0, 1), seg("rho'", 0, 1)});

    // All characters act trivially: d = n.
    TwistActionTable trivial;
    trivial.n = 4;
    for (int k = 0; k < 4; ++k) trivial.perms.push_back(identity_perm({"rho", "rho'"}));
    CHECK(twist_stabilizer_count(a, trivial) == 4);

    // Characters alternately fix the symbols
    // or swap them; both kinds fix the multisegment, d = 2 d1.
    TwistActionTable swapping;
    swapping.n = 4;
    swapping.perms = {identity_perm({"rho", "rho'"}), swap_perm("rho", "rho'"),
                      identity_perm({"rho", "rho'"}), swap_perm("rho", "rho'")};
    CHECK(twist_stabilizer_count(a, swapping) == 4);

    // The same table on a non-symmetric multisegment: only the identity
    // characters fix it.
    Multisegment b({seg("rho", 0, 1), seg("rho'", 2, 2)});
    CHECK(twist_stabilizer_count(b, swapping) == 2);

    // Free action away from the identity.
    TwistActionTable cyc;
    cyc.n = 3;
    cyc.perms = {identity_perm({"x", "y", "z"}),
                 {{"x", "y"}, {"y", "z"}, {"z", "x"}},
                 {{"x", "z"}, {"y", "x"}, {"z", "y"}}};
    Multisegment c({seg("x", 0, 0)});
    CHECK(twist_stabilizer_count(c, cyc) == 1);

    TwistActionTable bad;
    bad.n = 3;
    bad.perms = {identity_perm({"x"})};
    CHECK_THROWS_AS(twist_stabilizer_count(c, bad), Error);
}

TEST_CASE("twist_stabilizer_count is invariant under consistent relabeling") {
    Multisegment a({seg("rho", 0, 1), seg("rho'", 0, 1)});
    TwistActionTable t;
    t.n = 2;
    t.perms = {identity_perm({"rho", "rho'"}), swap_perm("rho", "rho'")};

    Multisegment a2({seg("u", 0, 1), seg("v", 0, 1)});
    TwistActionTable t2;
    t2.n = 2;
    t2.perms = {identity_perm({"u", "v"}), swap_perm("u", "v")};
    CHECK(twist_stabilizer_count(a, t) == twist_stabilizer_count(a2, t2));
}

TEST_CASE("sl_leading_term") {
    // Twist-pair shape: a = {[rho,nu rho],[rho',nu rho']} with
    // d = 2 d1; coefficient [n!]_q / (d [2!]_{q^{n1}}^2), exponent
    // 8 n1^2 - 4 n1.
    for (int n1 = 1; n1 <= 3; ++n1) {
        SymbolTable tab;
        tab.declare({"rho", n1, CuspidalGrowth::leading_only(n1)});
        tab.declare({"rho'", n1, CuspidalGrowth::leading_only(n1)});
        Multisegment a({seg("rho", 0, 1), seg("rho'", 0, 1)});

        int n = 4 * n1;
        int d1 = 2;
        int d = 2 * d1;
        LeadingTerm lt = sl_leading_term(a, tab, d);
        QPoly denom = q_factorial_base(2, n1) * q_factorial_base(2, n1) * QPoly(d);
        CHECK(lt.coeff == QRat(q_factorial(n), denom));
        CHECK(lt.exponent == 8 * n1 * n1 - 4 * n1);

        // d = 1 reduces to the GL_n leading term, and the exponent never
        // depends on d.
        CHECK(sl_leading_term(a, tab, 1) == leading_term(a, tab));
        CHECK(sl_leading_term(a, tab, 3).exponent == gk_dimension(a, tab));
    }
    // Generic all-singleton a: ([n!]_q / d, n(n-1)/2).
    SymbolTable tab;
    tab.declare({"chi", 1, CuspidalGrowth::leading_only(1)});
    Multisegment gen({seg("chi", 0, 0), seg("chi", 1, 1), seg("chi", 2, 2)});
    LeadingTerm lt = sl_leading_term(gen, tab, 3);
    CHECK(lt.coeff == QRat(q_factorial(3), QPoly(3)));
    CHECK(lt.exponent == 3);

    CHECK_THROWS_AS(sl_leading_term(gen, tab, 0), Error);
}
