#pragma once

#include <utility>
#include <vector>

#include "topobound/errors.hpp"
#include "topobound/pauli.hpp"

namespace topobound {

// Completion of a commuting independent generator set to a full symplectic
// frame of the n-qubit Pauli group:
//   - destabilizers[i] anticommutes with stabilizers[i] and commutes with
//     every other stabilizer,
//   - logicals are (X-like, Z-like) pairs generating the centralizer modulo
//     the stabilizer group; partners anticommute, everything across pairs
//     commutes.
struct SymplecticBasis {
    std::vector<PauliOp> stabilizers; // the input generators, unchanged
    std::vector<PauliOp> destabilizers;
    std::vector<std::pair<PauliOp, PauliOp>> logicals;
};

inline SymplecticBasis symplectic_gram_schmidt(std::size_t n,
                                               const std::vector<PauliOp>& gens) {
    for (const auto& g : gens)
        if (g.num_qubits() != n) throw ContractError("symplectic_gram_schmidt: size mismatch");
    if (gens.size() > n) throw ValidationError("more generators than qubits");

    // Candidate pool spanning the whole group. Throughout, every pool element
    // commutes with all processed (reduced) stabilizers.
    std::vector<PauliOp> pool;
    pool.reserve(2 * n);
    for (std::size_t q = 0; q < n; ++q) pool.push_back(PauliOp::single(n, q, 'X'));
    for (std::size_t q = 0; q < n; ++q) pool.push_back(PauliOp::single(n, q, 'Z'));

    SymplecticBasis out;
    out.stabilizers = gens;
    std::vector<PauliOp> reduced; // gens[i] times earlier stabilizers; pairs with destabilizers[i]
    std::vector<std::vector<bool>> mix; // mix[i][j]: reduced[j] was folded into gens[i]

    for (const auto& g : gens) {
        // Reduce by earlier pairs. Only stabilizer factors are ever mixed in,
        // so the group (and all signs) stay exact.
        PauliOp red = g;
        std::vector<bool> used(reduced.size(), false);
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (!red.commutes_with(reduced[i]))
                throw ValidationError("generators do not commute");
            if (!red.commutes_with(out.destabilizers[i])) {
                red *= reduced[i];
                used[i] = true;
            }
        }
        mix.push_back(std::move(used));
        if (red.x.none() && red.z.none()) {
            if ((red.phase & 3u) != 0)
                throw ValidationError("generator signs are contradictory");
            throw ValidationError("generators are dependent");
        }
        std::size_t pick = pool.size();
        for (std::size_t p = 0; p < pool.size(); ++p) {
            if (!pool[p].commutes_with(red)) {
                pick = p;
                break;
            }
        }
        if (pick == pool.size()) throw ContractError("symplectic_gram_schmidt: no conjugate partner");
        PauliOp d = pool[pick];
        pool.erase(pool.begin() + pick);
        for (auto& w : pool) {
            bool a = !w.commutes_with(red);
            bool b = !w.commutes_with(d);
            if (a) w *= d;
            if (b) w *= red;
        }
        reduced.push_back(std::move(red));
        out.destabilizers.push_back(std::move(d));
    }

    // The loop above keeps the destabilizers dual to the reduced family, but
    // the frame is stated against the input generators: gens[i] = reduced[i] *
    // prod_{j<i} reduced[j]^mix[i][j]. Invert that unit-triangular mixing on
    // the destabilizer side so anti(destabilizers[i], gens[j]) = delta_ij.
    std::size_t m = gens.size();
    std::vector<PauliOp> raw = out.destabilizers;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<bool> s(m, false);
        s[i] = true;
        for (std::size_t j = i + 1; j < m; ++j) {
            bool v = false;
            for (std::size_t k = i; k < j; ++k) v ^= (mix[j][k] && s[k]);
            if (v) {
                s[j] = true;
                out.destabilizers[i] *= raw[j];
            }
        }
    }

    // What is left of the pool spans the centralizer. Pair it up; elements
    // that commute with everything remaining are stabilizer multiples and
    // get dropped.
    std::vector<PauliOp> rem = std::move(pool);
    while (!rem.empty()) {
        PauliOp u = std::move(rem.front());
        rem.erase(rem.begin());
        std::size_t pick = rem.size();
        for (std::size_t p = 0; p < rem.size(); ++p) {
            if (!rem[p].commutes_with(u)) {
                pick = p;
                break;
            }
        }
        if (pick == rem.size()) continue;
        PauliOp v = std::move(rem[pick]);
        rem.erase(rem.begin() + pick);
        for (auto& w : rem) {
            bool a = !w.commutes_with(u);
            bool b = !w.commutes_with(v);
            if (a) w *= v;
            if (b) w *= u;
        }
        // Orientation: call the partner with more X support the X-like one;
        // on a tie keep discovery order.
        if (v.x.popcount() > u.x.popcount())
            out.logicals.emplace_back(std::move(v), std::move(u));
        else
            out.logicals.emplace_back(std::move(u), std::move(v));
    }

    if (out.logicals.size() != n - gens.size())
        throw ContractError("symplectic_gram_schmidt: pairing miscount");
    return out;
}

} // namespace topobound
