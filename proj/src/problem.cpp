#include "gkgrowth/problem.hpp"

#include <fstream>

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ParseError("problem file: " + msg); }

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) bad(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) bad(std::string("field '") + name + "' must be an integer");
    return v.get<int>();
}

std::vector<Int> int_array(const json& j) {
    if (!j.is_array()) bad("coefficient list must be an array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (v.is_number_integer())
            out.emplace_back(static_cast<long>(v.get<long long>()));
        else if (v.is_string())
            out.emplace_back(Int(v.get<std::string>()));
        else
            bad("coefficients must be integers");
    }
    return out;
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

}  // namespace

json xlaurent_to_json(const XLaurent& g) {
    json arr = json::array();
    for (const auto& [k, c] : g.terms()) {
        json num = json::array(), den = json::array();
        for (const auto& v : c.num().coeffs()) num.push_back(int_to_json(v));
        for (const auto& v : c.den().coeffs()) den.push_back(int_to_json(v));
        arr.push_back({{"x", k}, {"num", num}, {"den", den}});
    }
    return arr;
}

XLaurent xlaurent_from_json(const json& j) {
    if (!j.is_array()) bad("polynomial must be an array of terms");
    XLaurent g;
    for (const auto& term : j) {
        int x = int_field(term, "x");
        QPoly num = QPoly::from_coeffs(int_array(field(term, "num")));
        QPoly den = term.contains("den") ? QPoly::from_coeffs(int_array(term.at("den")))
                                         : QPoly(1);
        if (den.is_zero()) bad("zero denominator in polynomial term");
        g += XLaurent::term(QRat(num, den), x);
    }
    return g;
}

json growth_source_to_json(const CuspidalGrowth& g) {
    switch (g.kind()) {
        case CuspidalGrowth::Kind::LeadingOnly:
            return {{"kind", "leading"}};
        case CuspidalGrowth::Kind::Explicit:
            return {{"kind", "explicit"},
                    {"poly", xlaurent_to_json(g.full_polynomial())},
                    {"threshold", g.threshold()}};
        case CuspidalGrowth::Kind::MurnaghanUnramified:
            return {{"kind", "murnaghan_unr"}, {"j", g.level()}};
        case CuspidalGrowth::Kind::MurnaghanRamified:
            return {{"kind", "murnaghan_ram"}, {"j", g.level()}};
        case CuspidalGrowth::Kind::LevelZero:
            return {{"kind", "level0"}};
        case CuspidalGrowth::Kind::Gl2: {
            switch (g.gl2_case().kind) {
                case Gl2Case::Kind::Level0:
                    return {{"kind", "gl2"}, {"case", "level0"}};
                case Gl2Case::Kind::E2:
                    return {{"kind", "gl2"}, {"case", "e2"}, {"level", g.gl2_case().level}};
                case Gl2Case::Kind::E1:
                    return {{"kind", "gl2"}, {"case", "e1"}, {"level", g.gl2_case().level}};
            }
            break;
        }
        case CuspidalGrowth::Kind::AiQuad:
            return {{"kind", "ai_quad"}, {"ell", g.level()}};
    }
    throw std::logic_error("growth_source_to_json: unknown kind");
}

CuspidalGrowth growth_source_from_json(const json& j, int symbol_size) {
    if (!j.is_object()) bad("growth source must be an object");
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "leading") return CuspidalGrowth::leading_only(symbol_size);
    if (kind == "explicit") {
        int threshold = j.contains("threshold") ? int_field(j, "threshold") : 1;
        return CuspidalGrowth::explicit_poly(symbol_size, xlaurent_from_json(field(j, "poly")),
                                             threshold);
    }
    if (kind == "murnaghan_unr") return CuspidalGrowth::murnaghan_unr(symbol_size, int_field(j, "j"));
    if (kind == "murnaghan_ram") return CuspidalGrowth::murnaghan_ram(symbol_size, int_field(j, "j"));
    if (kind == "level0") return CuspidalGrowth::level0(symbol_size);
    if (kind == "gl2") {
        if (symbol_size != 2)
            throw SemanticError("gl2 growth source requires a symbol of size 2");
        std::string c = field(j, "case").get<std::string>();
        if (c == "level0") return CuspidalGrowth::gl2(Gl2Case::level0());
        if (c == "e2") return CuspidalGrowth::gl2(Gl2Case::e2(int_field(j, "level")));
        if (c == "e1") return CuspidalGrowth::gl2(Gl2Case::e1(int_field(j, "level")));
        bad("unknown gl2 case '" + c + "'");
    }
    if (kind == "ai_quad") {
        if (symbol_size != 2)
            throw SemanticError("ai_quad growth source requires a symbol of size 2");
        return CuspidalGrowth::ai_quad(int_field(j, "ell"));
    }
    bad("unknown growth source kind '" + kind + "'");
}

json expansion_to_json(const CharacterExpansion& ce) {
    json coeffs = json::array();
    for (const auto& [p, c] : ce.coeffs)
        coeffs.push_back({{"partition", p.parts}, {"c", int_to_json(c)}});
    return {{"n", ce.n}, {"coeffs", coeffs}};
}

CharacterExpansion expansion_from_json(const json& j) {
    CharacterExpansion ce;
    ce.n = int_field(j, "n");
    for (const auto& entry : field(j, "coeffs")) {
        const json& pj = field(entry, "partition");
        std::vector<int> parts;
        for (const auto& v : pj) parts.push_back(v.get<int>());
        Partition p{parts};
        if (p.n() != ce.n)
            throw SemanticError("expansion: partition " + p.str() + " is not a partition of " +
                                std::to_string(ce.n));
        const json& cv = field(entry, "c");
        Int c = cv.is_string() ? Int(cv.get<std::string>()) : Int(static_cast<long>(cv.get<long long>()));
        if (c != 0) ce.coeffs.emplace(std::move(p), std::move(c));
    }
    return ce;
}

json twist_table_to_json(const TwistActionTable& t) {
    json perms = json::array();
    for (const auto& perm : t.perms) {
        // Recover disjoint cycles from the map.
        json cycles = json::array();
        std::map<std::string, bool> seen;
        for (const auto& [from, to] : perm) {
            if (seen[from] || from == to) continue;
            json cycle = json::array();
            std::string cur = from;
            while (!seen[cur]) {
                seen[cur] = true;
                cycle.push_back(cur);
                cur = perm.at(cur);
            }
            cycles.push_back(cycle);
        }
        perms.push_back(cycles);
    }
    return {{"n", t.n}, {"perms", perms}};
}

TwistActionTable twist_table_from_json(const json& j, const SymbolTable& symbols) {
    TwistActionTable t;
    t.n = int_field(j, "n");
    if (t.n < 1) throw SemanticError("twist table: n must be positive");
    const json& perms = field(j, "perms");
    if (!perms.is_array() || static_cast<int>(perms.size()) != t.n)
        throw SemanticError("twist table: expected " + std::to_string(t.n) + " permutations");
    for (const auto& cycles : perms) {
        std::map<std::string, std::string> perm;
        for (const auto& [id, sym] : symbols.all()) perm[id] = id;
        if (!cycles.is_array()) bad("twist permutation must be a list of cycles");
        for (const auto& cycle : cycles) {
            if (!cycle.is_array() || cycle.empty()) bad("twist cycle must be a nonempty list");
            std::vector<std::string> ids;
            for (const auto& v : cycle) ids.push_back(v.get<std::string>());
            for (const auto& id : ids)
                if (!symbols.contains(id))
                    throw UnknownSymbol("twist cycle mentions undeclared symbol '" + id + "'");
            for (size_t k = 0; k < ids.size(); ++k)
                perm[ids[k]] = ids[(k + 1) % ids.size()];
        }
        // Twisting never changes the underlying matrix size.
        for (const auto& [from, to] : perm)
            if (symbols.at(from).size != symbols.at(to).size)
                throw SemanticError("twist permutation maps '" + from + "' (size " +
                                    std::to_string(symbols.at(from).size) + ") to '" + to +
                                    "' (size " + std::to_string(symbols.at(to).size) + ")");
        t.perms.push_back(std::move(perm));
    }
    // Index 0 is the trivial character.
    for (const auto& [from, to] : t.perms.front())
        if (from != to) throw SemanticError("twist table: perms[0] must be the identity");
    return t;
}

int ProblemFile::used_threshold() const {
    int t = 1;
    for (const auto& s : multisegment.segments()) {
        const CuspidalSymbol& sym = symbols.at(s.symbol);
        t = std::max(t, sym.source.threshold());
    }
    return t;
}

namespace {
ProblemFile parse_problem_impl(const json& doc);
}

ProblemFile parse_problem(const json& doc) {
    try {
        return parse_problem_impl(doc);
    } catch (const json::exception& e) {
        throw ParseError(std::string("problem file: ") + e.what());
    }
}

namespace {
ProblemFile parse_problem_impl(const json& doc) {
    if (!doc.is_object()) bad("top level must be an object");
    if (!doc.contains("version")) bad("missing schema version field");
    if (!doc.at("version").is_number_integer() || doc.at("version").get<int>() != 1)
        bad("unsupported schema version");

    ProblemFile pf;
    for (const auto& sj : field(doc, "symbols")) {
        CuspidalSymbol sym;
        sym.id = field(sj, "id").get<std::string>();
        sym.size = int_field(sj, "size");
        if (sym.size < 1) throw SemanticError("symbol '" + sym.id + "': size must be positive");
        sym.source = growth_source_from_json(field(sj, "growth"), sym.size);
        pf.symbols.declare(std::move(sym));
    }

    const json& mj = field(doc, "multisegment");
    if (mj.is_string()) {
        pf.multisegment = parse_multisegment(mj.get<std::string>());
    } else if (mj.is_array()) {
        std::vector<Segment> segs;
        for (const auto& sj : mj) {
            Segment s;
            s.symbol = field(sj, "symbol").get<std::string>();
            s.offset = int_field(sj, "offset");
            s.length = int_field(sj, "length");
            if (s.length < 1) throw SemanticError("segment length must be positive");
            segs.push_back(std::move(s));
        }
        pf.multisegment = Multisegment(std::move(segs));
    } else {
        bad("multisegment must be a compact string or an array of segments");
    }
    for (const auto& s : pf.multisegment.segments())
        if (!pf.symbols.contains(s.symbol))
            throw SemanticError("multisegment references undeclared symbol '" + s.symbol + "'");

    if (doc.contains("twist")) pf.twist = twist_table_from_json(doc.at("twist"), pf.symbols);

    if (doc.contains("eval")) {
        const json& ej = doc.at("eval");
        long q0 = field(ej, "q").get<long>();
        int N = int_field(ej, "N");
        if (q0 < 2) throw SemanticError("eval: q must be >= 2");
        if (N < 1) throw SemanticError("eval: N must be >= 1");
        pf.eval = std::make_pair(q0, N);
    }
    return pf;
}
}  // namespace

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("problem file '" + path + "': " + e.what());
    }
    return parse_problem(doc);
}

}  // namespace gkgrowth
