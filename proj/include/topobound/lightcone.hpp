#pragma once

#include <vector>

#include "topobound/correctability.hpp"
#include "topobound/encoder.hpp"
#include "topobound/tableau.hpp"

namespace topobound {

// State-discrimination harness: encode one of two seed states, then try to
// tell them apart by measuring a logical representative supported far away.
// The observable is pulled back through a depth-truncated encoder and its
// expectation taken on the best stabilizer input pair differing only on the
// seed qubits.

// Best-case |<Q>_0 - <Q>_1| over product inputs that agree off the seed
// pair: eigenstates of Q's seed factor with opposite signs, zeros elsewhere.
// The two states share their off-seed part, so the gap is 0 or 2 exactly.
inline int pair_distinguishability(std::size_t n, const std::vector<std::size_t>& seeds,
                                   const PauliOp& q) {
    if (seeds.size() != 2) throw ContractError("pair_distinguishability: need two seed qubits");
    std::size_t s1 = seeds[0], s2 = seeds[1];
    char w1 = q.letter_at(s1), w2 = q.letter_at(s2);

    PauliOp flip(n);  // carries the (-1)^b sign
    PauliOp fixed(n); // pins the unconstrained seed direction
    if (w1 != 'I' && w2 != 'I') {
        flip = PauliOp::single(n, s1, w1) * PauliOp::single(n, s2, w2);
        fixed = PauliOp::single(n, s2, w2);
    } else if (w1 != 'I') {
        flip = PauliOp::single(n, s1, w1);
        fixed = PauliOp::single(n, s2, 'Z');
    } else if (w2 != 'I') {
        flip = PauliOp::single(n, s2, w2);
        fixed = PauliOp::single(n, s1, 'Z');
    } else {
        flip = PauliOp::single(n, s1, 'Z');
        fixed = PauliOp::single(n, s2, 'Z');
    }

    std::vector<PauliOp> gens;
    gens.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        if (j != s1 && j != s2) gens.push_back(PauliOp::single(n, j, 'Z'));
    gens.push_back(fixed);
    gens.push_back(flip);

    auto state0 = StabilizerState::from_stabilizers(gens);
    gens.back().negate();
    auto state1 = StabilizerState::from_stabilizers(gens);
    int gap = state0.expectation(q) - state1.expectation(q);
    return gap < 0 ? -gap : gap;
}

struct LightconeExperiment {
    StabilizerCode code;
    EncoderResult encoder;
    Enclosure enclosure; // cube around the seeds, observable cleaned onto B
};

inline LightconeExperiment make_lightcone_experiment(int L, int a0, int b0) {
    LightconeExperiment e;
    e.code = make_toric_code_2d(L);
    e.encoder = staircase_encoder(L, a0, b0);
    Region a(std::vector<std::size_t>(e.encoder.seeds.begin(), e.encoder.seeds.end()));
    e.enclosure = construct_enclosure(e.code, a, encoded_z(L, a0, b0, 0));
    return e;
}

struct LightconeRow {
    std::size_t depth = 0;
    std::size_t cone_hits_a = 0; // seed qubits inside the cone of B
    int d_full = 0;              // gap through the truncated circuit
    int d_loc = 0;               // gap with gates restricted near B
};

inline LightconeRow run_lightcone_row(const LightconeExperiment& e, std::size_t depth) {
    LightconeRow row;
    row.depth = depth;
    auto c = e.encoder.circuit.truncated(depth);
    const auto& pb = e.enclosure.logical_on_b;

    auto cone = measurement_cone(c, e.enclosure.b);
    for (auto s : e.encoder.seeds)
        if (cone.contains(s)) ++row.cone_hits_a;

    std::size_t n = e.code.num_qubits();
    row.d_full = pair_distinguishability(n, e.encoder.seeds, evolve_adjoint(c, pb));

    // Restricting the circuit to gates strictly closer to B than the seeds
    // keeps the pulled-back observable off the seed pair entirely.
    auto ball = ball_region(e.code.coords(), e.code.extent(), e.enclosure.b,
                            e.enclosure.distance_ba - 1);
    row.d_loc = pair_distinguishability(n, e.encoder.seeds, evolve_adjoint(localize(c, ball), pb));
    return row;
}

// Largest depth at which the cone of B provably cannot reach the seeds:
// each layer widens the cone by at most the circuit range.
inline std::size_t certified_truncation_depth(const LightconeExperiment& e) {
    int range = circuit_range(e.encoder.circuit, e.code.coords(), e.code.extent());
    if (range <= 0) return e.encoder.circuit.depth();
    return static_cast<std::size_t>((e.enclosure.distance_ba - 1) / range);
}

} // namespace topobound
