#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "topobound/code.hpp"
#include "topobound/errors.hpp"
#include "topobound/pauli.hpp"

namespace topobound {

// Small dense statevector layer. Everything here is O(2^n) per operation
// and guarded accordingly; it exists for the handful of places where the
// observable of interest is not a stabilizer expectation.

using Amp = std::complex<double>;
using DenseState = std::vector<Amp>;

inline constexpr std::size_t kDenseMaxQubits = 20;

inline std::size_t dense_qubits(const DenseState& s) {
    std::size_t n = 0;
    while ((1ull << n) < s.size()) ++n;
    if ((1ull << n) != s.size()) throw ContractError("dense state length is not a power of two");
    return n;
}

inline DenseState basis_state(std::size_t n, std::uint64_t bits) {
    if (n > kDenseMaxQubits) throw ContractError("dense: too many qubits");
    DenseState s(1ull << n);
    s[bits] = 1;
    return s;
}

inline DenseState plus_state(std::size_t n) {
    if (n > kDenseMaxQubits) throw ContractError("dense: too many qubits");
    DenseState s(1ull << n, Amp(1.0 / std::sqrt(static_cast<double>(1ull << n)), 0));
    return s;
}

// P|s>. Qubit q is bit q of the basis index.
inline DenseState apply_pauli(const PauliOp& p, const DenseState& s) {
    std::size_t n = dense_qubits(s);
    if (p.num_qubits() != n) throw ContractError("apply_pauli: size mismatch");
    std::uint64_t xmask = 0, zmask = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (p.x.get(q)) xmask |= 1ull << q;
        if (p.z.get(q)) zmask |= 1ull << q;
    }
    static const Amp ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    DenseState out(s.size());
    for (std::uint64_t b = 0; b < s.size(); ++b) {
        Amp amp = ipow[p.phase & 3u] * s[b];
        if (std::popcount(zmask & b) & 1) amp = -amp;
        out[b ^ xmask] = amp;
    }
    return out;
}

inline Amp dense_inner(const DenseState& a, const DenseState& b) {
    if (a.size() != b.size()) throw ContractError("dense_inner: size mismatch");
    Amp s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double dense_norm(const DenseState& s) { return std::sqrt(dense_inner(s, s).real()); }

inline void dense_normalize(DenseState& s) {
    double n = dense_norm(s);
    if (n < 1e-12) throw ContractError("dense_normalize: zero vector");
    for (auto& a : s) a /= n;
}

// s <- (1 + sign P)/2 |s>, the projection onto the sign eigenspace.
inline void project_eigenspace(const PauliOp& p, int sign, DenseState& s) {
    if (sign != 1 && sign != -1) throw ContractError("project_eigenspace: sign must be +-1");
    auto ps = apply_pauli(p, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = 0.5 * (s[i] + static_cast<double>(sign) * ps[i]);
}

inline double dense_expectation(const PauliOp& p, const DenseState& s) {
    Amp v = dense_inner(s, apply_pauli(p, s));
    if (std::abs(v.imag()) > 1e-9)
        throw ContractError("dense_expectation: operator is not Hermitian on this state");
    return v.real();
}

// Orthonormal basis of the joint +1 eigenspace of the generators, one state
// per logical class. Seeds are the all-zeros string and its images under the
// X-like logicals; projecting them through every generator lands each in a
// distinct class, so the results are orthogonal without any Gram-Schmidt.
inline std::vector<DenseState> code_space_basis(const StabilizerCode& code) {
    std::size_t n = code.num_qubits();
    if (n > kDenseMaxQubits) throw ContractError("code_space_basis: too many qubits");
    std::size_t k = code.num_logical();
    if (k > 16) throw ContractError("code_space_basis: too many logical classes");

    std::vector<std::uint64_t> xmasks;
    for (const auto& [lx, lz] : code.logical_basis()) {
        (void)lz;
        std::uint64_t m = 0;
        for (std::size_t q = 0; q < n; ++q)
            if (lx.x.get(q)) m |= 1ull << q;
        xmasks.push_back(m);
    }

    std::vector<DenseState> basis;
    for (std::uint64_t cls = 0; cls < (1ull << k); ++cls) {
        std::uint64_t seed = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (cls & (1ull << i)) seed ^= xmasks[i];
        auto s = basis_state(n, seed);
        for (const auto& g : code.generators()) project_eigenspace(g, 1, s);
        dense_normalize(s);
        basis.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (std::abs(dense_inner(basis[i], basis[j])) > 1e-9)
                throw ContractError("code_space_basis: classes are not orthogonal");
    return basis;
}

} // namespace topobound
