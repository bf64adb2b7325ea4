#pragma once

#include <cstdint>
#include <vector>

#include "gkgrowth/qpoly.hpp"

namespace gkgrowth {

/// Execution mode for the enumeration kernels. Serial is the reference
/// implementation; Parallel uses OpenMP and must produce identical
/// results.
enum class ExecMode { Serial, Parallel };

/// Guards for the brute-force kernels.
struct OracleLimits {
    /// Bound on the enumeration space (p^N)^(n^2).
    uint64_t max_space = 100'000'000;
};

/// The finite matrix ring M_n(Z/p^N) with machine-word residues.
/// A matrix is invertible iff its reduction mod p is invertible over the
/// field with p elements.
struct MatRing {
    int n = 1;
    long p = 2;
    int N = 1;
    uint64_t modulus = 2;  // p^N
    uint64_t space = 2;    // modulus^(n^2)

    MatRing(int n, long p, int N, const OracleLimits& limits = {});

    size_t cells() const { return static_cast<size_t>(n) * static_cast<size_t>(n); }
    uint64_t encode(const std::vector<uint64_t>& m) const;
    void decode(uint64_t code, std::vector<uint64_t>& m) const;
    void mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
             std::vector<uint64_t>& out) const;
    bool invertible(const std::vector<uint64_t>& m) const;
    /// Units of Z/p^N in ascending order.
    std::vector<uint64_t> units() const;
    /// Identity matrix.
    std::vector<uint64_t> identity() const;
};

/// Streams the elements of GL_n(Z/p^N) exactly once, in ascending
/// encoding order.
class GlEnumerator {
public:
    explicit GlEnumerator(MatRing ring) : ring_(std::move(ring)), scratch_(ring_.cells()) {}

    /// Fills `m` with the next invertible matrix; false when exhausted.
    bool next(std::vector<uint64_t>& m);

private:
    MatRing ring_;
    uint64_t code_ = 0;
    std::vector<uint64_t> scratch_;
};

/// Encodings of all elements of GL_n(Z/p^N), ascending. The parallel
/// path partitions the enumeration space and is bit-identical to the
/// serial one.
std::vector<uint64_t> gl_elements(const MatRing& ring, ExecMode mode = ExecMode::Parallel);

/// Number of right cosets P_lambda(Z/p^N) \ GL_n(Z/p^N) for the standard
/// block-upper-triangular subgroup of the partition, counted by
/// union-find over generator sweeps.
Int flag_count_bruteforce(const std::vector<int>& parts, long p, int N,
                          ExecMode mode = ExecMode::Parallel, const OracleLimits& limits = {});

/// Number of cosets H \ GL_n(Z/p^N), H the reduction of
/// K_0 cap g K_0 g^{-1} for g = diag(pi^{a_1},...,pi^{a_n}); equals
/// |K_0 \ K_0 g K_0 / K_N|. Exponents must be descending with a_n = 0.
Int cartan_coset_bruteforce(const std::vector<int>& exponents, long p, int N,
                            ExecMode mode = ExecMode::Parallel, const OracleLimits& limits = {});

/// Closed form for the same count:
/// q^{(sum n_i^2 - n^2)/2 + sum_{i<j} min(a_i - a_j, N)} * [n; lambda]_q
/// evaluated at q = q0.
Int cartan_coset_closed_form(const std::vector<int>& exponents, const Int& q0, int N);

/// dim(rho^{K_N}) for a level-zero supercuspidal of GL_n, n in {2,3},
/// by the Cartan-coset summation with the fixed-space dimensions of the
/// finite-field cuspidal sigma.
Int level_zero_dim_sum(int n, const Int& q0, int N);

}  // namespace gkgrowth
