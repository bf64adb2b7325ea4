#include "gkgrowth/orbits.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw Error("Partition: parts must be positive");
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw Error("Partition: parts must be sorted descending");
}

int Partition::n() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw Error("partitions_of: n must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.emplace_back(Partition{cur});
            return;
        }
        for (int k = std::min(maxpart, remaining); k >= 1; --k) {
            cur.push_back(k);
            gen(remaining - k, k);
            cur.pop_back();
        }
    };
    gen(n, n);
    return out;
}

int orbit_dim(const Partition& p) {
    int n = p.n();
    int s = 0;
    for (int x : p.parts) s += x * x;
    return n * n - s;
}

Int w_orbit(const Partition& p) {
    Int w = 1;
    size_t i = 0;
    while (i < p.parts.size()) {
        size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
        w *= f;
        i = j;
    }
    return w;
}

bool dominance_leq(const Partition& p1, const Partition& p2) {
    if (p1.n() != p2.n())
        throw MismatchedSize("dominance_leq: partitions of different integers " + p1.str() +
                             " vs " + p2.str());
    int s1 = 0, s2 = 0;
    size_t rows = std::max(p1.parts.size(), p2.parts.size());
    for (size_t i = 0; i < rows; ++i) {
        s1 += i < p1.parts.size() ? p1.parts[i] : 0;
        s2 += i < p2.parts.size() ? p2.parts[i] : 0;
        if (s1 > s2) return false;
    }
    return true;
}

XLaurent expansion_to_growth(const CharacterExpansion& ce) {
    XLaurent g;
    for (const auto& [p, c] : ce.coeffs) {
        if (p.n() != ce.n) throw Error("expansion_to_growth: partition " + p.str() +
                                       " is not a partition of " + std::to_string(ce.n));
        if (c == 0) continue;
        g += XLaurent::term(QRat(QPoly(c) * q_multinomial(ce.n, p.parts)), orbit_dim(p) / 2);
    }
    return g;
}

CharacterExpansion growth_to_expansion(const XLaurent& g, int n) {
    std::map<int, Partition> by_dim;
    for (const auto& p : partitions_of(n)) {
        int h = orbit_dim(p) / 2;
        auto [it, fresh] = by_dim.emplace(h, p);
        if (!fresh)
            throw AmbiguousExpansion("growth_to_expansion: partitions " + it->second.str() +
                                     " and " + p.str() + " of " + std::to_string(n) +
                                     " share orbit dimension " + std::to_string(2 * h));
    }
    CharacterExpansion ce;
    ce.n = n;
    for (const auto& [k, c] : g.terms()) {
        auto it = by_dim.find(k);
        if (it == by_dim.end())
            throw NotInImage("growth_to_expansion: X-exponent " + std::to_string(k) +
                             " is not half the dimension of any nilpotent orbit of GL_" +
                             std::to_string(n));
        QRat quotient = c / QRat(q_multinomial(n, it->second.parts));
        if (!quotient.is_integer_constant())
            throw NotInImage("growth_to_expansion: coefficient of X^" + std::to_string(k) +
                             " is not an integer multiple of the orbit multinomial");
        ce.coeffs.emplace(it->second, quotient.num().coeff(0));
    }
    return ce;
}

CharacterExpansion jl_transfer(const CharacterExpansion& ce_d, int d) {
    if (d < 1) throw Error("jl_transfer: degree must be positive");
    int m = ce_d.n;
    int n = m * d;
    CharacterExpansion out;
    out.n = n;
    int sign = (n - m) % 2 == 0 ? 1 : -1;
    for (const auto& [p, c] : ce_d.coeffs) {
        std::vector<int> scaled = p.parts;
        for (int& x : scaled) x *= d;
        out.coeffs.emplace(Partition{std::move(scaled)}, sign * c);
    }
    return out;
}

Int jl_constant_term(const Int& dim_pi_d, int n) {
    return (n - 1) % 2 == 0 ? dim_pi_d : Int(-dim_pi_d);
}

}  // namespace gkgrowth
