#include "gkgrowth/oracle.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gkgrowth/errors.hpp"

namespace gkgrowth {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

MatRing::MatRing(int n_, long p_, int N_, const OracleLimits& limits) : n(n_), p(p_), N(N_) {
    if (n < 1) throw Error("MatRing: n must be positive");
    if (!is_prime(p)) throw Error("MatRing: p must be prime, got " + std::to_string(p));
    if (N < 1) throw Error("MatRing: N must be positive");
    modulus = 1;
    for (int k = 0; k < N; ++k) {
        if (modulus > UINT64_MAX / static_cast<uint64_t>(p))
            throw SizeLimitExceeded("MatRing: p^N overflows machine words");
        modulus *= static_cast<uint64_t>(p);
    }
    if (modulus >= (uint64_t(1) << 62))
        throw SizeLimitExceeded("MatRing: p^N must be below 2^62");
    unsigned __int128 sp = 1;
    for (size_t k = 0; k < cells(); ++k) {
        sp *= modulus;
        if (sp > limits.max_space)
            throw SizeLimitExceeded("MatRing: enumeration space (p^N)^(n^2) exceeds guard " +
                                    std::to_string(limits.max_space));
    }
    space = static_cast<uint64_t>(sp);
}

uint64_t MatRing::encode(const std::vector<uint64_t>& m) const {
    uint64_t code = 0;
    for (size_t k = cells(); k-- > 0;) code = code * modulus + m[k];
    return code;
}

void MatRing::decode(uint64_t code, std::vector<uint64_t>& m) const {
    m.resize(cells());
    for (size_t k = 0; k < cells(); ++k) {
        m[k] = code % modulus;
        code /= modulus;
    }
}

void MatRing::mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                  std::vector<uint64_t>& out) const {
    size_t nn = static_cast<size_t>(n);
    out.assign(cells(), 0);
    for (size_t i = 0; i < nn; ++i)
        for (size_t k = 0; k < nn; ++k) {
            uint64_t aik = a[i * nn + k];
            if (aik == 0) continue;
            for (size_t j = 0; j < nn; ++j) {
                unsigned __int128 t = static_cast<unsigned __int128>(aik) * b[k * nn + j] +
                                      out[i * nn + j];
                out[i * nn + j] = static_cast<uint64_t>(t % modulus);
            }
        }
}

bool MatRing::invertible(const std::vector<uint64_t>& m) const {
    // Determinant nonzero mod p.
    size_t nn = static_cast<size_t>(n);
    std::vector<long> a(cells());
    for (size_t k = 0; k < cells(); ++k) a[k] = static_cast<long>(m[k] % static_cast<uint64_t>(p));
    for (size_t col = 0; col < nn; ++col) {
        size_t pivot = col;
        while (pivot < nn && a[pivot * nn + col] == 0) ++pivot;
        if (pivot == nn) return false;
        if (pivot != col)
            for (size_t j = 0; j < nn; ++j) std::swap(a[pivot * nn + j], a[col * nn + j]);
        long inv = 1, base = a[col * nn + col] % p, e = p - 2;
        // Fermat inverse mod p.
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (size_t row = col + 1; row < nn; ++row) {
            long f = a[row * nn + col] * inv % p;
            if (f == 0) continue;
            for (size_t j = col; j < nn; ++j)
                a[row * nn + j] = ((a[row * nn + j] - f * a[col * nn + j]) % p + p * p) % p;
        }
    }
    return true;
}

std::vector<uint64_t> MatRing::units() const {
    std::vector<uint64_t> us;
    for (uint64_t u = 1; u < modulus; ++u)
        if (u % static_cast<uint64_t>(p) != 0) us.push_back(u);
    return us;
}

std::vector<uint64_t> MatRing::identity() const {
    std::vector<uint64_t> id(cells(), 0);
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i) * n + i] = 1;
    return id;
}

bool GlEnumerator::next(std::vector<uint64_t>& m) {
    while (code_ < ring_.space) {
        ring_.decode(code_, scratch_);
        ++code_;
        if (ring_.invertible(scratch_)) {
            m = scratch_;
            return true;
        }
    }
    return false;
}

std::vector<uint64_t> gl_elements(const MatRing& ring, ExecMode mode) {
    std::vector<uint64_t> elems;
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        int threads = omp_get_max_threads();
        uint64_t chunk = (ring.space + static_cast<uint64_t>(threads) - 1) /
                         static_cast<uint64_t>(threads);
        std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
        {
            int t = omp_get_thread_num();
            uint64_t lo = chunk * static_cast<uint64_t>(t);
            uint64_t hi = std::min(ring.space, lo + chunk);
            std::vector<uint64_t> m(ring.cells());
            auto& mine = parts[static_cast<size_t>(t)];
            for (uint64_t code = lo; code < hi; ++code) {
                ring.decode(code, m);
                if (ring.invertible(m)) mine.push_back(code);
            }
        }
        size_t total = 0;
        for (const auto& part : parts) total += part.size();
        elems.reserve(total);
        for (const auto& part : parts) elems.insert(elems.end(), part.begin(), part.end());
        return elems;
    }
#else
    (void)mode;
#endif
    std::vector<uint64_t> m(ring.cells());
    for (uint64_t code = 0; code < ring.space; ++code) {
        ring.decode(code, m);
        if (ring.invertible(m)) elems.push_back(code);
    }
    return elems;
}

namespace {

// Union-find over element indices; component count is independent of
// union order, so parallel edge generation stays deterministic.
class UnionFind {
public:
    explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    uint32_t find(uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

    size_t components() {
        size_t c = 0;
        for (uint32_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i) ++c;
        return c;
    }

private:
    std::vector<uint32_t> parent_;
};

uint32_t element_index(const std::vector<uint64_t>& elems, uint64_t code) {
    auto it = std::lower_bound(elems.begin(), elems.end(), code);
    if (it == elems.end() || *it != code)
        throw std::logic_error("oracle: generator product left the group");
    return static_cast<uint32_t>(it - elems.begin());
}

// Orbits of left multiplication by the subgroup generated by `gens`.
size_t count_left_orbits(const MatRing& ring, const std::vector<uint64_t>& elems,
                         const std::vector<std::vector<uint64_t>>& gens, ExecMode mode) {
    UnionFind uf(elems.size());
    const size_t chunk = 1 << 16;
#ifdef _OPENMP
    const bool parallel = mode == ExecMode::Parallel;
#else
    const bool parallel = false;
    (void)mode;
#endif
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t lo = 0; lo < elems.size(); lo += chunk) {
        size_t hi = std::min(elems.size(), lo + chunk);
        edges.assign((hi - lo) * gens.size(), {0, 0});
#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
        {
            std::vector<uint64_t> g(ring.cells()), hg(ring.cells());
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (size_t idx = lo; idx < hi; ++idx) {
                ring.decode(elems[idx], g);
                for (size_t gi = 0; gi < gens.size(); ++gi) {
                    ring.mul(gens[gi], g, hg);
                    edges[(idx - lo) * gens.size() + gi] = {
                        static_cast<uint32_t>(idx), element_index(elems, ring.encode(hg))};
                }
            }
        }
        for (const auto& [a, b] : edges) uf.unite(a, b);
    }
    return uf.components();
}

std::vector<std::vector<uint64_t>> diagonal_unit_generators(const MatRing& ring) {
    std::vector<std::vector<uint64_t>> gens;
    for (uint64_t u : ring.units()) {
        if (u == 1) continue;
        for (int i = 0; i < ring.n; ++i) {
            auto d = ring.identity();
            d[static_cast<size_t>(i) * ring.n + i] = u;
            gens.push_back(std::move(d));
        }
    }
    return gens;
}

std::vector<uint64_t> elementary(const MatRing& ring, int i, int j, uint64_t value) {
    auto e = ring.identity();
    e[static_cast<size_t>(i) * ring.n + j] = value;
    return e;
}

}  // namespace

Int flag_count_bruteforce(const std::vector<int>& parts, long p, int N, ExecMode mode,
                          const OracleLimits& limits) {
    int n = 0;
    for (int part : parts) {
        if (part < 1) throw Error("flag_count_bruteforce: parts must be positive");
        n += part;
    }
    MatRing ring(n, p, N, limits);
    // Block index of each row/column position.
    std::vector<int> block(static_cast<size_t>(n));
    int pos = 0;
    for (size_t b = 0; b < parts.size(); ++b)
        for (int k = 0; k < parts[b]; ++k) block[static_cast<size_t>(pos++)] = static_cast<int>(b);

    // P_lambda is generated by the one-parameter subgroups E_ij(1) on
    // block-upper and within-block positions, plus diagonal units.
    std::vector<std::vector<uint64_t>> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (block[static_cast<size_t>(i)] <= block[static_cast<size_t>(j)])
                gens.push_back(elementary(ring, i, j, 1));
        }
    auto diag = diagonal_unit_generators(ring);
    gens.insert(gens.end(), diag.begin(), diag.end());

    auto elems = gl_elements(ring, mode);
    return Int(static_cast<unsigned long>(count_left_orbits(ring, elems, gens, mode)));
}

Int cartan_coset_bruteforce(const std::vector<int>& exponents, long p, int N, ExecMode mode,
                            const OracleLimits& limits) {
    int n = static_cast<int>(exponents.size());
    if (n < 1) throw Error("cartan_coset_bruteforce: empty exponent tuple");
    if (!std::is_sorted(exponents.rbegin(), exponents.rend()))
        throw Error("cartan_coset_bruteforce: exponents must be descending");
    if (exponents.back() != 0) throw Error("cartan_coset_bruteforce: last exponent must be 0");
    if (N < 1) throw Error("cartan_coset_bruteforce: N must be positive");
    MatRing ring(n, p, N, limits);

    // H = image of K_0 cap g K_0 g^{-1}: entry (i,j) constrained to
    // p^{max(0, a_i - a_j)}; generated by the constrained one-parameter
    // subgroups plus diagonal units.
    std::vector<std::vector<uint64_t>> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int c = std::max(0, exponents[static_cast<size_t>(i)] - exponents[static_cast<size_t>(j)]);
            if (c >= N) continue;  // that subgroup is trivial mod p^N
            uint64_t v = 1;
            for (int k = 0; k < c; ++k) v *= static_cast<uint64_t>(p);
            gens.push_back(elementary(ring, i, j, v));
        }
    auto diag = diagonal_unit_generators(ring);
    gens.insert(gens.end(), diag.begin(), diag.end());

    auto elems = gl_elements(ring, mode);
    return Int(static_cast<unsigned long>(count_left_orbits(ring, elems, gens, mode)));
}

Int cartan_coset_closed_form(const std::vector<int>& exponents, const Int& q0, int N) {
    int n = static_cast<int>(exponents.size());
    if (n < 1) throw Error("cartan_coset_closed_form: empty exponent tuple");
    if (!std::is_sorted(exponents.rbegin(), exponents.rend()))
        throw Error("cartan_coset_closed_form: exponents must be descending");
    if (N < 1) throw Error("cartan_coset_closed_form: N must be positive");

    // Partition of n from runs of equal exponents.
    std::vector<int> lambda;
    size_t i = 0;
    while (i < exponents.size()) {
        size_t j = i;
        while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
        lambda.push_back(static_cast<int>(j - i));
        i = j;
    }
    long e = 0;
    for (int part : lambda) e += static_cast<long>(part) * part;
    e = (e - static_cast<long>(n) * n) / 2;
    for (size_t a = 0; a < exponents.size(); ++a)
        for (size_t b = a + 1; b < exponents.size(); ++b)
            e += std::min(exponents[a] - exponents[b], N);
    if (e < 0) throw std::logic_error("cartan_coset_closed_form: negative exponent");
    Int power;
    mpz_pow_ui(power.get_mpz_t(), q0.get_mpz_t(), static_cast<unsigned long>(e));
    return power * q_multinomial(n, lambda).eval(q0);
}

Int level_zero_dim_sum(int n, const Int& q0, int N) {
    if (q0 < 2) throw Error("level_zero_dim_sum: q0 must be >= 2");
    if (N < 1) throw Error("level_zero_dim_sum: N must be positive");
    if (n == 2) {
        // sigma cuspidal of GL_2(k), dim q-1; fixed space survives only
        // when the coset constraint is trivial (N > a).
        Int dim_sigma = q0 - 1;
        Int total = 0;
        for (int a = 0; a < N; ++a)
            total += dim_sigma * cartan_coset_closed_form({a, 0}, q0, N);
        return total;
    }
    if (n == 3) {
        // sigma cuspidal of GL_3(k), dim (q-1)(q^2-1); the one-parameter
        // unipotent case contributes dim/(q+1) = (q-1)^2.
        Int dim_sigma = (q0 - 1) * (q0 * q0 - 1);
        Int dim_unipotent = (q0 - 1) * (q0 - 1);
        Int total = 0;
        for (int a = 0; a <= 2 * (N - 1); ++a) {
            for (int b = 0; b <= a; ++b) {
                if (a < N) {
                    total += dim_sigma * cartan_coset_closed_form({a, b, 0}, q0, N);
                } else if (a - b < N && b < N) {
                    total += dim_unipotent * cartan_coset_closed_form({a, b, 0}, q0, N);
                }
            }
        }
        return total;
    }
    throw UnsupportedSize("level_zero_dim_sum: only n = 2 and n = 3 are supported");
}

}  // namespace gkgrowth
