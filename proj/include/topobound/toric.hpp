#pragma once

#include <string>
#include <vector>

#include "topobound/code.hpp"
#include "topobound/errors.hpp"

namespace topobound {

// Toric layouts. Qubits sit on edges; doubled coordinates put the vertex
// (a,b) at (2a,2b) and an edge at its midpoint, so an axis-0 edge from
// (a,b) to (a+1,b) sits at (2a+1,2b).

inline std::size_t toric2d_axis0_index(int L, int a, int b) {
    a = ((a % L) + L) % L;
    b = ((b % L) + L) % L;
    return static_cast<std::size_t>(b) * L + a;
}

inline std::size_t toric2d_axis1_index(int L, int a, int b) {
    a = ((a % L) + L) % L;
    b = ((b % L) + L) % L;
    return static_cast<std::size_t>(L) * L + static_cast<std::size_t>(b) * L + a;
}

inline StabilizerCode make_toric_code_2d(int L) {
    if (L < 2) throw ContractError("toric2d: L must be >= 2");
    std::size_t n = 2 * static_cast<std::size_t>(L) * L;

    std::vector<std::vector<int>> coords(n);
    for (int b = 0; b < L; ++b)
        for (int a = 0; a < L; ++a) {
            coords[toric2d_axis0_index(L, a, b)] = {2 * a + 1, 2 * b};
            coords[toric2d_axis1_index(L, a, b)] = {2 * a, 2 * b + 1};
        }

    std::vector<PauliOp> gens;
    gens.reserve(n - 2);
    // One vertex and one face generator are products of all others; dropping
    // the ones at the origin leaves an independent set.
    for (int b = 0; b < L; ++b)
        for (int a = 0; a < L; ++a) {
            if (a == 0 && b == 0) continue;
            PauliOp g(n);
            g.x.set(toric2d_axis0_index(L, a, b), true);
            g.x.set(toric2d_axis0_index(L, a - 1, b), true);
            g.x.set(toric2d_axis1_index(L, a, b), true);
            g.x.set(toric2d_axis1_index(L, a, b - 1), true);
            gens.push_back(std::move(g));
        }
    for (int b = 0; b < L; ++b)
        for (int a = 0; a < L; ++a) {
            if (a == 0 && b == 0) continue;
            PauliOp g(n);
            g.z.set(toric2d_axis0_index(L, a, b), true);
            g.z.set(toric2d_axis0_index(L, a, b + 1), true);
            g.z.set(toric2d_axis1_index(L, a, b), true);
            g.z.set(toric2d_axis1_index(L, a + 1, b), true);
            gens.push_back(std::move(g));
        }

    StabilizerCode code(n, std::move(gens), std::move(coords), 2 * L,
                        "toric2d-L" + std::to_string(L));

    // Canonical logical pairs: (X1, Z1) wind along axis 0 resp. 1 on the
    // vertical edges, (X2, Z2) the same on the horizontal edges.
    PauliOp z1(n), x1(n), z2(n), x2(n);
    for (int t = 0; t < L; ++t) {
        z1.z.set(toric2d_axis1_index(L, 0, t), true);
        x1.x.set(toric2d_axis1_index(L, t, 0), true);
        z2.z.set(toric2d_axis0_index(L, t, 0), true);
        x2.x.set(toric2d_axis0_index(L, 0, t), true);
    }
    code.set_known_logicals({{x1, z1}, {x2, z2}});
    return code;
}

inline std::size_t toric3d_edge_index(int L, int axis, int a, int b, int c) {
    a = ((a % L) + L) % L;
    b = ((b % L) + L) % L;
    c = ((c % L) + L) % L;
    std::size_t cube = static_cast<std::size_t>(L) * L * L;
    return axis * cube + (static_cast<std::size_t>(c) * L + b) * L + a;
}

inline StabilizerCode make_toric_code_3d(int L) {
    if (L < 2) throw ContractError("toric3d: L must be >= 2");
    std::size_t cube = static_cast<std::size_t>(L) * L * L;
    std::size_t n = 3 * cube;

    std::vector<std::vector<int>> coords(n);
    for (int c = 0; c < L; ++c)
        for (int b = 0; b < L; ++b)
            for (int a = 0; a < L; ++a) {
                coords[toric3d_edge_index(L, 0, a, b, c)] = {2 * a + 1, 2 * b, 2 * c};
                coords[toric3d_edge_index(L, 1, a, b, c)] = {2 * a, 2 * b + 1, 2 * c};
                coords[toric3d_edge_index(L, 2, a, b, c)] = {2 * a, 2 * b, 2 * c + 1};
            }

    std::vector<PauliOp> gens;
    // Vertex stars (weight 6); the origin one is dependent on the rest.
    for (int c = 0; c < L; ++c)
        for (int b = 0; b < L; ++b)
            for (int a = 0; a < L; ++a) {
                if (a == 0 && b == 0 && c == 0) continue;
                PauliOp g(n);
                g.x.set(toric3d_edge_index(L, 0, a, b, c), true);
                g.x.set(toric3d_edge_index(L, 0, a - 1, b, c), true);
                g.x.set(toric3d_edge_index(L, 1, a, b, c), true);
                g.x.set(toric3d_edge_index(L, 1, a, b - 1, c), true);
                g.x.set(toric3d_edge_index(L, 2, a, b, c), true);
                g.x.set(toric3d_edge_index(L, 2, a, b, c - 1), true);
                gens.push_back(std::move(g));
            }

    // Face plaquettes (weight 4). The full set of 3L^3 faces has rank
    // 2L^3 - 2; keep a greedy independent subset in a fixed scan order.
    BitMatrix basis(0, 2 * n);
    std::vector<std::size_t> pivot_of_row;
    auto try_add = [&](const PauliOp& g) {
        BitVec row = symplectic_row(g);
        for (std::size_t i = 0; i < basis.rows(); ++i)
            if (row.get(pivot_of_row[i])) row ^= basis.row(i);
        for (std::size_t cidx = 0; cidx < row.size(); ++cidx) {
            if (row.get(cidx)) {
                basis.append_row(row);
                pivot_of_row.push_back(cidx);
                return true;
            }
        }
        return false;
    };
    const int planes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& plane : planes)
        for (int c = 0; c < L; ++c)
            for (int b = 0; b < L; ++b)
                for (int a = 0; a < L; ++a) {
                    int d1 = plane[0], d2 = plane[1];
                    int pos[3] = {a, b, c};
                    auto shifted = [&](int axis) {
                        int s[3] = {pos[0], pos[1], pos[2]};
                        s[axis] += 1;
                        return std::array<int, 3>{s[0], s[1], s[2]};
                    };
                    PauliOp g(n);
                    g.z.set(toric3d_edge_index(L, d1, pos[0], pos[1], pos[2]), true);
                    auto s2 = shifted(d2);
                    g.z.set(toric3d_edge_index(L, d1, s2[0], s2[1], s2[2]), true);
                    g.z.set(toric3d_edge_index(L, d2, pos[0], pos[1], pos[2]), true);
                    auto s1 = shifted(d1);
                    g.z.set(toric3d_edge_index(L, d2, s1[0], s1[1], s1[2]), true);
                    if (try_add(g)) gens.push_back(std::move(g));
                }

    StabilizerCode code(n, std::move(gens), std::move(coords), 2 * L,
                        "toric3d-L" + std::to_string(L));

    // Logical Z_i: a line of axis-i edges through the origin. Logical X_i:
    // the dual sheet of axis-i edges with zero i-th coordinate.
    std::vector<std::pair<PauliOp, PauliOp>> logicals;
    for (int axis = 0; axis < 3; ++axis) {
        PauliOp zline(n), xsheet(n);
        for (int t = 0; t < L; ++t) {
            int p[3] = {0, 0, 0};
            p[axis] = t;
            zline.z.set(toric3d_edge_index(L, axis, p[0], p[1], p[2]), true);
        }
        int u = (axis + 1) % 3, v = (axis + 2) % 3;
        for (int s = 0; s < L; ++s)
            for (int t = 0; t < L; ++t) {
                int p[3] = {0, 0, 0};
                p[u] = s;
                p[v] = t;
                xsheet.x.set(toric3d_edge_index(L, axis, p[0], p[1], p[2]), true);
            }
        logicals.emplace_back(std::move(xsheet), std::move(zline));
    }
    code.set_known_logicals(std::move(logicals));
    return code;
}

} // namespace topobound
