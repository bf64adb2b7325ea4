#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkgrowth/xlaurent.hpp"

namespace gkgrowth {

/// Partition of n with parts sorted descending; stands for the nilpotent
/// orbit of matrices with Jordan type the partition.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int n() const;
    int rows() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string str() const;
};

/// All partitions of n, each exactly once, in reverse-lexicographic
/// order: (n) first, (1,...,1) last.
std::vector<Partition> partitions_of(int n);

/// dim O_lambda = n^2 - sum(parts^2); always even.
int orbit_dim(const Partition& p);

/// Number of permutations of the parts tuple fixing it: the product of
/// factorials of part multiplicities.
Int w_orbit(const Partition& p);

/// Dominance order: true iff every prefix sum of p1 is <= that of p2.
/// Throws MismatchedSize unless both are partitions of the same n.
bool dominance_leq(const Partition& p1, const Partition& p2);

/// Local character expansion data: integer coefficients c_O indexed by
/// the partitions of n.
struct CharacterExpansion {
    int n = 0;
    std::map<Partition, Int> coeffs;

    bool operator==(const CharacterExpansion& o) const { return n == o.n && coeffs == o.coeffs; }
};

/// G_pi = sum over orbits of c_O * [n; lambda]_q * X^{dim O / 2}.
XLaurent expansion_to_growth(const CharacterExpansion& ce);

/// Inverse of expansion_to_growth. Throws AmbiguousExpansion when two
/// partitions of n share an orbit dimension (first at n = 6), and
/// NotInImage when an exponent matches no orbit or a coefficient is not
/// an integer multiple of the matching q-multinomial.
CharacterExpansion growth_to_expansion(const XLaurent& g, int n);

/// Transfer of expansion coefficients from GL_m(D) to GL_{md}(F) for a
/// division algebra of degree d: partition (a_1,...,a_i) of m maps to
/// (a_1 d,...,a_i d), coefficients pick up the sign (-1)^{n-m}.
CharacterExpansion jl_transfer(const CharacterExpansion& ce_d, int d);

/// Constant term of the growth polynomial of a square-integrable
/// representation of GL_n(F): (-1)^{n-1} dim(pi_D).
Int jl_constant_term(const Int& dim_pi_d, int n);

}  // namespace gkgrowth
