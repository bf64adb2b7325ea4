#include "gkgrowth/sln.hpp"

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

Multisegment twist_multisegment(const Multisegment& a,
                                const std::map<std::string, std::string>& perm) {
    std::vector<Segment> out;
    out.reserve(a.size());
    for (const auto& s : a.segments()) {
        auto it = perm.find(s.symbol);
        if (it == perm.end())
            throw UnknownSymbol("twist action undefined on symbol '" + s.symbol + "'");
        out.push_back(Segment{it->second, s.offset, s.length});
    }
    return Multisegment(std::move(out));
}

int twist_stabilizer_count(const Multisegment& a, const TwistActionTable& table) {
    if (table.n < 1) throw Error("twist table: n must be positive");
    if (static_cast<int>(table.perms.size()) != table.n)
        throw Error("twist table: expected " + std::to_string(table.n) + " permutations, got " +
                    std::to_string(table.perms.size()));
    int d = 0;
    for (const auto& perm : table.perms)
        if (twist_multisegment(a, perm) == a) ++d;
    return d;
}

LeadingTerm sl_leading_term(const Multisegment& a, const SymbolTable& symbols, int d) {
    if (d < 1) throw Error("sl_leading_term: d must be positive");
    LeadingTerm lt = leading_term(a, symbols);
    lt.coeff = lt.coeff * QRat::ratio(1, d);
    return lt;
}

}  // namespace gkgrowth
