#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gkgrowth/cuspidal.hpp"

namespace gkgrowth {

/// Formal supercuspidal building block: an id, the matrix size n1, and a
/// growth-polynomial source. Distinct ids are inertially unrelated.
struct CuspidalSymbol {
    std::string id;
    int size = 1;
    CuspidalGrowth source;
};

/// Symbols declared by a problem instance, keyed by id.
class SymbolTable {
public:
    void declare(CuspidalSymbol sym);
    bool contains(const std::string& id) const { return table_.count(id) != 0; }
    const CuspidalSymbol& at(const std::string& id) const;
    const std::map<std::string, CuspidalSymbol>& all() const { return table_; }

private:
    std::map<std::string, CuspidalSymbol> table_;
};

/// Segment [nu^b rho, nu^{b+r-1} rho]: a symbol id, an offset b, and a
/// length r >= 1.
struct Segment {
    std::string symbol;
    int offset = 0;
    int length = 1;

    int end() const { return offset + length - 1; }
    auto key() const { return std::tie(symbol, offset, length); }
    bool operator==(const Segment& o) const { return key() == o.key(); }
    bool operator<(const Segment& o) const { return key() < o.key(); }
};

/// Finite multiset of segments, kept sorted by (symbol, offset, length).
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs);

    const std::vector<Segment>& segments() const { return segs_; }
    size_t size() const { return segs_.size(); }
    bool empty() const { return segs_.empty(); }
    const Segment& operator[](size_t i) const { return segs_[i]; }

    bool operator==(const Multisegment& o) const { return segs_ == o.segs_; }
    bool operator!=(const Multisegment& o) const { return !(*this == o); }
    bool operator<(const Multisegment& o) const { return segs_ < o.segs_; }

    /// Total matrix size sum(size(symbol_i) * r_i).
    int total_size(const SymbolTable& symbols) const;

    /// Exact textual form "[rho:0..1],[rho:1..2]"; round-trips through
    /// parse_multisegment.
    std::string str() const;
    /// Display form with the minimal offset shifted to 0.
    std::string display_str() const;

private:
    std::vector<Segment> segs_;
};

/// Parse the compact text form. Accepts "[id:b..e]" and the singleton
/// shorthand "[id:b]".
Multisegment parse_multisegment(const std::string& text);

/// True iff the segments share a symbol, neither contains the other, and
/// the union of their index intervals is an interval.
bool linked(const Segment& d1, const Segment& d2);

/// Replace linked segments i, j by their interval union and (when
/// nonempty) intersection. Throws NotLinked when they are not linked.
Multisegment elementary_op(const Multisegment& a, size_t i, size_t j);

/// Finite poset of multisegments reachable from `top` by chains of
/// elementary operations; hasse_edges (upper, lower) form the transitive
/// reduction of one-step reachability.
struct Poset {
    std::vector<Multisegment> nodes;
    std::vector<std::pair<int, int>> hasse_edges;
    int top = 0;
};

/// Breadth-first closure under elementary operations; throws
/// SizeLimitExceeded past node_limit nodes.
Poset poset_below(const Multisegment& a, size_t node_limit = 100000);

/// True iff every segment has length 1 (the maximal multisegment on its
/// support).
bool is_generic(const Multisegment& a);

/// True iff all segments share one symbol and the index intervals are
/// pairwise disjoint.
bool supports_pairwise_disjoint(const Multisegment& a);

/// DOT digraph of a poset, one edge per Hasse edge, upper -> lower. The
/// label callback supplies each node's annotation line (typically the GK
/// dimension).
std::string to_dot(const Poset& poset,
                   const std::function<std::string(const Multisegment&)>& annotate);

}  // namespace gkgrowth
