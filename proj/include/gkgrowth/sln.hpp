#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkgrowth/growth.hpp"
#include "gkgrowth/segments.hpp"

namespace gkgrowth {

/// Action of the n twisting characters of GL_n/Z.SL_n on cuspidal
/// symbols. perms[k] maps each symbol id to its image under the k-th
/// character; perms[0] must be the identity. The table is trusted as
/// given; no check that the permutations generate a cyclic group.
struct TwistActionTable {
    int n = 1;
    std::vector<std::map<std::string, std::string>> perms;
};

/// Apply one character's permutation to every segment's symbol; offsets
/// and lengths are unchanged. Throws UnknownSymbol when a segment's
/// symbol is outside the permutation's domain.
Multisegment twist_multisegment(const Multisegment& a,
                                const std::map<std::string, std::string>& perm);

/// Number of characters fixing the multisegment: the count of indices k
/// with twist_multisegment(a, perms[k]) == a.
int twist_stabilizer_count(const Multisegment& a, const TwistActionTable& table);

/// Leading term of dim(phi^{K_N cap SL_n}) for phi inside the
/// restriction of <a>: the GL_n leading term with its coefficient
/// divided by d.
LeadingTerm sl_leading_term(const Multisegment& a, const SymbolTable& symbols, int d);

}  // namespace gkgrowth
