#pragma once

#include <algorithm>
#include <vector>

#include "topobound/circuit.hpp"
#include "topobound/errors.hpp"
#include "topobound/toric.hpp"

namespace topobound {

// An encoding circuit plus the seed qubits whose input state becomes the
// logical content. X/Z on seeds[i] evolve to the i-th encoded (X-like,
// Z-like) winding pair through (a0, b0).
struct EncoderResult {
    LocalCircuit circuit;
    std::vector<std::size_t> seeds;
};

// Staircase encoder for the 2d code, anchored at vertex (a0, b0). Two CNOT
// chains first spread the seed X's along the two winding lines through the
// anchor; then one block per remaining vertex turns an untouched edge into
// that vertex's star via H plus a CNOT fan-out. Block order matters twice
// over: each block's source edge must still be pristine when its H fires,
// and the Z's climbing out of the seeds must be picked up column by column.
// Rows b = 1..L-1 run first (ending each row at a = 0), then row 0.
inline EncoderResult staircase_encoder(int L, int a0, int b0) {
    if (L < 2) throw SetupError("staircase_encoder: L must be at least 2");
    auto ax0 = [&](int a, int b) { return toric2d_axis0_index(L, a, b); };
    auto ax1 = [&](int a, int b) { return toric2d_axis1_index(L, a, b); };

    std::size_t n = 2ull * L * L;
    std::vector<Gate> gates;

    for (int t = 1; t < L; ++t)
        gates.push_back({Gate::Tag::CNOT, {ax1(a0 + t - 1, b0), ax1(a0 + t, b0)}});
    for (int t = 1; t < L; ++t)
        gates.push_back({Gate::Tag::CNOT, {ax0(a0, b0 + t - 1), ax0(a0, b0 + t)}});

    auto block = [&](int a, int b, std::size_t fresh) {
        int aa = a + a0, bb = b + b0;
        std::size_t star[4] = {ax0(aa, bb), ax0(aa - 1, bb), ax1(aa, bb), ax1(aa, bb - 1)};
        gates.push_back({Gate::Tag::H, {fresh}});
        std::vector<std::size_t> targets;
        for (auto e : star)
            if (e != fresh) targets.push_back(e);
        std::sort(targets.begin(), targets.end());
        for (auto e : targets) gates.push_back({Gate::Tag::CNOT, {fresh, e}});
    };

    for (int b = 1; b < L; ++b) {
        for (int a = 1; a < L; ++a) block(a, b, ax0(a + a0, b + b0));
        block(0, b, ax1(a0, b + b0));
    }
    for (int a = 1; a < L; ++a) block(a, 0, ax0(a + a0, b0));

    EncoderResult out;
    out.circuit = pack_layers(n, gates);
    out.seeds = {ax1(a0, b0), ax0(a0, b0)};
    return out;
}

// The winding logical representatives the encoder maps its seeds to.
inline PauliOp encoded_x(int L, int a0, int b0, int which) {
    std::size_t n = 2ull * L * L;
    PauliOp p(n);
    for (int t = 0; t < L; ++t)
        p.x.set(which == 0 ? toric2d_axis1_index(L, a0 + t, b0) : toric2d_axis0_index(L, a0, b0 + t),
                true);
    return p;
}

inline PauliOp encoded_z(int L, int a0, int b0, int which) {
    std::size_t n = 2ull * L * L;
    PauliOp p(n);
    for (int t = 0; t < L; ++t)
        p.z.set(which == 0 ? toric2d_axis1_index(L, a0, b0 + t) : toric2d_axis0_index(L, a0 + t, b0),
                true);
    return p;
}

} // namespace topobound
