#include "gkgrowth/segments.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

void SymbolTable::declare(CuspidalSymbol sym) {
    if (sym.id.empty()) throw SemanticError("symbol id must be nonempty");
    if (sym.size < 1) throw SemanticError("symbol '" + sym.id + "': size must be positive");
    if (sym.size != sym.source.size())
        throw SemanticError("symbol '" + sym.id + "': declared size " +
                            std::to_string(sym.size) + " does not match growth source size " +
                            std::to_string(sym.source.size()));
    auto [it, fresh] = table_.emplace(sym.id, std::move(sym));
    if (!fresh) throw SemanticError("symbol '" + it->first + "' declared twice");
}

const CuspidalSymbol& SymbolTable::at(const std::string& id) const {
    auto it = table_.find(id);
    if (it == table_.end()) throw UnknownSymbol("symbol '" + id + "' is not declared");
    return it->second;
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
    for (const auto& s : segs_)
        if (s.length < 1) throw SemanticError("segment length must be positive");
    std::sort(segs_.begin(), segs_.end());
}

int Multisegment::total_size(const SymbolTable& symbols) const {
    int n = 0;
    for (const auto& s : segs_) n += symbols.at(s.symbol).size * s.length;
    return n;
}

std::string Multisegment::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < segs_.size(); ++i) {
        if (i) os << ",";
        os << "[" << segs_[i].symbol << ":" << segs_[i].offset << ".." << segs_[i].end() << "]";
    }
    return os.str();
}

std::string Multisegment::display_str() const {
    if (segs_.empty()) return "";
    int min_off = segs_.front().offset;
    for (const auto& s : segs_) min_off = std::min(min_off, s.offset);
    std::vector<Segment> shifted = segs_;
    for (auto& s : shifted) s.offset -= min_off;
    return Multisegment(std::move(shifted)).str();
}

Multisegment parse_multisegment(const std::string& text) {
    std::vector<Segment> segs;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("multisegment: expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos));
        ++pos;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("multisegment: expected integer at position " + std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos == text.size()) return Multisegment();
    for (;;) {
        expect('[');
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && text[pos] != ':' && text[pos] != ']') ++pos;
        std::string id = text.substr(start, pos - start);
        while (!id.empty() && std::isspace(static_cast<unsigned char>(id.back()))) id.pop_back();
        if (id.empty()) throw ParseError("multisegment: empty symbol id");
        expect(':');
        int b = parse_int();
        int e = b;
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '.' && text[pos + 1] == '.') {
            pos += 2;
            e = parse_int();
        }
        if (e < b) throw ParseError("multisegment: segment end before start");
        expect(']');
        segs.push_back(Segment{id, b, e - b + 1});
        skip_ws();
        if (pos == text.size()) break;
        expect(',');
    }
    return Multisegment(std::move(segs));
}

bool linked(const Segment& d1, const Segment& d2) {
    if (d1.symbol != d2.symbol) return false;
    bool d1_contains = d1.offset <= d2.offset && d1.end() >= d2.end();
    bool d2_contains = d2.offset <= d1.offset && d2.end() >= d1.end();
    if (d1_contains || d2_contains) return false;
    // Union is an interval iff the two intervals overlap or are adjacent.
    return std::max(d1.offset, d2.offset) <= std::min(d1.end(), d2.end()) + 1;
}

Multisegment elementary_op(const Multisegment& a, size_t i, size_t j) {
    if (i >= a.size() || j >= a.size() || i == j)
        throw NotLinked("elementary_op: invalid segment indices");
    const Segment& s1 = a[i];
    const Segment& s2 = a[j];
    if (!linked(s1, s2))
        throw NotLinked("elementary_op: segments " + std::to_string(i) + " and " +
                        std::to_string(j) + " are not linked");
    std::vector<Segment> out;
    out.reserve(a.size());
    for (size_t k = 0; k < a.size(); ++k)
        if (k != i && k != j) out.push_back(a[k]);
    int ub = std::min(s1.offset, s2.offset);
    int ue = std::max(s1.end(), s2.end());
    out.push_back(Segment{s1.symbol, ub, ue - ub + 1});
    int ib = std::max(s1.offset, s2.offset);
    int ie = std::min(s1.end(), s2.end());
    if (ib <= ie) out.push_back(Segment{s1.symbol, ib, ie - ib + 1});
    return Multisegment(std::move(out));
}

Poset poset_below(const Multisegment& a, size_t node_limit) {
    Poset poset;
    std::map<Multisegment, int> index;
    std::deque<int> queue;
    std::vector<std::vector<int>> children;

    auto intern = [&](const Multisegment& m) -> int {
        auto it = index.find(m);
        if (it != index.end()) return it->second;
        if (poset.nodes.size() >= node_limit)
            throw SizeLimitExceeded("poset_below: more than " + std::to_string(node_limit) +
                                    " nodes");
        int id = static_cast<int>(poset.nodes.size());
        poset.nodes.push_back(m);
        children.emplace_back();
        index.emplace(m, id);
        queue.push_back(id);
        return id;
    };

    poset.top = intern(a);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        Multisegment cur = poset.nodes[static_cast<size_t>(u)];
        for (size_t i = 0; i < cur.size(); ++i) {
            for (size_t j = i + 1; j < cur.size(); ++j) {
                if (!linked(cur[i], cur[j])) continue;
                int v = intern(elementary_op(cur, i, j));
                auto& kids = children[static_cast<size_t>(u)];
                if (std::find(kids.begin(), kids.end(), v) == kids.end()) kids.push_back(v);
            }
        }
    }

    // Transitive reduction: drop one-step edges that factor through a
    // longer chain. A single elementary operation can coincide with a
    // composite on degenerate multisets.
    size_t count = poset.nodes.size();
    std::vector<int> indegree(count, 0);
    for (const auto& kids : children)
        for (int v : kids) ++indegree[static_cast<size_t>(v)];
    std::vector<int> topo;
    topo.reserve(count);
    std::deque<int> ready;
    for (size_t u = 0; u < count; ++u)
        if (indegree[u] == 0) ready.push_back(static_cast<int>(u));
    while (!ready.empty()) {
        int u = ready.front();
        ready.pop_front();
        topo.push_back(u);
        for (int v : children[static_cast<size_t>(u)])
            if (--indegree[static_cast<size_t>(v)] == 0) ready.push_back(v);
    }
    if (topo.size() != count) throw std::logic_error("poset_below: operation graph has a cycle");

    // Bitset rows of descendants, filled bottom-up.
    size_t words = (count + 63) / 64;
    std::vector<std::vector<uint64_t>> reach(count, std::vector<uint64_t>(words, 0));
    auto test = [&](size_t u, size_t v) { return (reach[u][v / 64] >> (v % 64)) & 1; };
    for (size_t i = count; i-- > 0;) {
        size_t u = static_cast<size_t>(topo[i]);
        for (int v : children[u]) {
            size_t w = static_cast<size_t>(v);
            reach[u][w / 64] |= uint64_t(1) << (w % 64);
            for (size_t b = 0; b < words; ++b) reach[u][b] |= reach[w][b];
        }
    }
    for (size_t u = 0; u < count; ++u) {
        for (int v : children[u]) {
            bool shortcut = false;
            for (int mid : children[u]) {
                if (mid != v && test(static_cast<size_t>(mid), static_cast<size_t>(v))) {
                    shortcut = true;
                    break;
                }
            }
            if (!shortcut) poset.hasse_edges.emplace_back(static_cast<int>(u), v);
        }
    }
    return poset;
}

bool is_generic(const Multisegment& a) {
    for (const auto& s : a.segments())
        if (s.length != 1) return false;
    return true;
}

bool supports_pairwise_disjoint(const Multisegment& a) {
    const auto& segs = a.segments();
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].symbol != segs[j].symbol) return false;
            if (std::max(segs[i].offset, segs[j].offset) <=
                std::min(segs[i].end(), segs[j].end()))
                return false;
        }
    }
    return true;
}

std::string to_dot(const Poset& poset,
                   const std::function<std::string(const Multisegment&)>& annotate) {
    std::ostringstream os;
    os << "digraph poset {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    for (size_t i = 0; i < poset.nodes.size(); ++i) {
        std::string label = "{" + poset.nodes[i].display_str() + "}";
        if (annotate) {
            std::string extra = annotate(poset.nodes[i]);
            if (!extra.empty()) label += "\\n" + extra;
        }
        os << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (const auto& [u, v] : poset.hasse_edges) os << "  n" << u << " -> n" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gkgrowth
