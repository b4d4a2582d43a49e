#pragma once

#include <set>
#include <string>
#include <vector>

#include "topobound/bitmatrix.hpp"
#include "topobound/code.hpp"
#include "topobound/errors.hpp"
#include "topobound/lattice.hpp"
#include "topobound/pauli.hpp"

namespace topobound {

// Columns of the generator matrix restricted to a region: x bits of the
// region's qubits first, then their z bits.
inline BitMatrix restricted_generator_matrix(const StabilizerCode& code, const Region& region) {
    const auto& gens = code.generators();
    std::size_t r = region.size();
    BitMatrix m(gens.size(), 2 * r);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& qs = region.qubits();
        for (std::size_t j = 0; j < r; ++j) {
            if (gens[i].x.get(qs[j])) m.row(i).set(j, true);
            if (gens[i].z.get(qs[j])) m.row(i).set(r + j, true);
        }
    }
    return m;
}

inline BitVec restricted_pauli_vector(const PauliOp& p, const Region& region) {
    std::size_t r = region.size();
    BitVec v(2 * r);
    const auto& qs = region.qubits();
    for (std::size_t j = 0; j < r; ++j) {
        if (p.x.get(qs[j])) v.set(j, true);
        if (p.z.get(qs[j])) v.set(r + j, true);
    }
    return v;
}

// A region is correctable exactly when erasing it loses no logical
// information, which reduces to a rank identity between the generator
// matrix restricted to the region and to its complement:
//
//   2|G| - rank(S|_G) == m - rank(S|_Gc)
//
// The left side counts Pauli degrees of freedom on the region not fixed by
// syndrome data; the right side counts generators whose restriction to the
// region is forced. They agree exactly when no logical operator lives
// entirely inside the region.
inline bool is_correctable(const StabilizerCode& code, const Region& region) {
    std::size_t m = code.generators().size();
    std::size_t inside_rank = restricted_generator_matrix(code, region).rank();
    std::size_t outside_rank =
        restricted_generator_matrix(code, region.complement(code.num_qubits())).rank();
    return 2 * region.size() - inside_rank == m - outside_rank;
}

// Multiply p by generators until nothing is left on the region. The result
// is the same centralizer class with exact sign. Throws when the linear
// system has no solution, i.e. the class is pinned to the region.
inline PauliOp clean(const StabilizerCode& code, const PauliOp& p, const Region& region) {
    if (p.num_qubits() != code.num_qubits()) throw ContractError("clean: size mismatch");
    auto system = restricted_generator_matrix(code, region).transpose();
    auto rhs = restricted_pauli_vector(p, region);
    auto coeffs = system.solve(rhs);
    if (!coeffs)
        throw CleaningObstruction("no stabilizer multiple of the operator avoids the region (" +
                                  std::to_string(region.size()) + " qubits)");
    PauliOp out = p;
    for (std::size_t i = 0; i < code.generators().size(); ++i)
        if (coeffs->get(i)) out *= code.generators()[i];
    for (auto q : region.qubits())
        if (out.x.get(q) || out.z.get(q)) throw ContractError("clean: residue after cleaning");
    return out;
}

struct SweepRow {
    int R = 0;
    bool all_correctable = false;
    std::size_t num_cubes_tested = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    int r_star = 0; // largest side length with every cube correctable
};

// Test every distinct cube window of side R, for R = 1 .. extent, centered
// on qubit sites. Correctability is anti-monotone in the region, so
// all_correctable can only switch from true to false as R grows; every row
// is still computed honestly.
inline SweepResult correctable_cube_sweep(const StabilizerCode& code) {
    SweepResult result;
    for (int R = 1; R <= code.extent(); ++R) {
        std::set<std::vector<std::size_t>> windows;
        for (std::size_t q = 0; q < code.num_qubits(); ++q)
            windows.insert(
                cube_region(code.coords(), code.extent(), code.coords()[q], R).qubits());
        bool all = true;
        for (const auto& w : windows)
            if (!is_correctable(code, Region(w))) {
                all = false;
                break;
            }
        result.rows.push_back({R, all, windows.size()});
        if (all) result.r_star = R;
    }
    return result;
}

// The region pair for the state-distinguishability experiment: grow the
// largest correctable cube around the 1-center of A, take its complement B,
// and push the given logical representative off the cube so it only acts on
// B. d(B, A) is computed exactly.
struct Enclosure {
    Region a;
    Region cube;
    Region b;
    std::vector<int> center;
    int radius = 0;      // cube side length
    int distance_ba = 0; // exact lattice distance d(B, A)
    PauliOp logical_on_b;
};

inline Enclosure construct_enclosure(const StabilizerCode& code, const Region& a,
                                     const PauliOp& logical) {
    if (a.empty()) throw ContractError("construct_enclosure: empty region");
    Enclosure out;
    out.a = a;
    std::size_t center_q = one_center(code.coords(), code.extent(), a);
    out.center = code.coords()[center_q];

    int R = 0;
    for (int r = 1; r <= code.extent(); ++r) {
        if (!is_correctable(code, cube_region(code.coords(), code.extent(), out.center, r)))
            break;
        R = r;
    }
    if (R == 0)
        throw SetupError("no correctable cube around the region's center");
    out.radius = R;
    out.cube = cube_region(code.coords(), code.extent(), out.center, R);
    if (!out.cube.contains_all(a))
        throw SetupError("region does not fit inside the largest correctable cube (side " +
                         std::to_string(R) + ")");
    out.b = out.cube.complement(code.num_qubits());
    if (out.b.empty()) throw SetupError("correctable cube covers the whole lattice");
    out.logical_on_b = clean(code, logical, out.cube);
    out.distance_ba = region_distance(code.coords(), code.extent(), out.b, a);
    return out;
}

} // namespace topobound
