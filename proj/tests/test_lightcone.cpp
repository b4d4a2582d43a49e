#include "topobound/lightcone.hpp"

#include <gtest/gtest.h>

using namespace topobound;

TEST(PairDistinguishability, ToyCases) {
    std::vector<std::size_t> seeds = {0, 1};
    // Observable touching seed 0 and only Z's elsewhere: perfectly resolved.
    EXPECT_EQ(pair_distinguishability(3, seeds, PauliOp::from_string("XIZ")), 2);
    EXPECT_EQ(pair_distinguishability(3, seeds, PauliOp::from_string("-ZII")), 2);
    EXPECT_EQ(pair_distinguishability(3, seeds, PauliOp::from_string("YYI")), 2);
    EXPECT_EQ(pair_distinguishability(3, seeds, PauliOp::from_string("IZZ")), 2);
    // X off the seed pair kills the shared factor; identity on the seeds
    // means the two inputs agree where it matters.
    EXPECT_EQ(pair_distinguishability(3, seeds, PauliOp::from_string("XIX")), 0);
    EXPECT_EQ(pair_distinguishability(3, seeds, PauliOp::from_string("IIZ")), 0);
    EXPECT_EQ(pair_distinguishability(3, seeds, PauliOp::from_string("III")), 0);
    EXPECT_EQ(pair_distinguishability(3, {std::size_t(0), std::size_t(2)},
                                      PauliOp::from_string("IXY")), 0);
}

TEST(Lightcone, FullDepthDistinguishes) {
    for (int L = 4; L <= 6; ++L) {
        auto e = make_lightcone_experiment(L, 1, 2);
        auto row = run_lightcone_row(e, e.encoder.circuit.depth());
        EXPECT_EQ(row.cone_hits_a, 2u) << "L=" << L;
        EXPECT_EQ(row.d_full, 2) << "L=" << L;
        EXPECT_EQ(row.d_loc, 0) << "L=" << L;
    }
}

TEST(Lightcone, CertifiedTruncationIsBlind) {
    for (int L = 4; L <= 6; ++L) {
        auto e = make_lightcone_experiment(L, 0, 0);
        auto tau = certified_truncation_depth(e);
        EXPECT_LT(tau, e.encoder.circuit.depth());
        auto row = run_lightcone_row(e, tau);
        EXPECT_EQ(row.cone_hits_a, 0u) << "L=" << L;
        EXPECT_EQ(row.d_full, 0) << "L=" << L;
        EXPECT_EQ(row.d_loc, 0) << "L=" << L;
    }
}

// The geometry-certified depth must agree with the measured cone, and the
// localized run can never distinguish, at any depth.
TEST(Lightcone, DepthSweepInvariants) {
    int L = 4;
    auto e = make_lightcone_experiment(L, 2, 1);
    auto cert = certified_truncation_depth(e);
    std::size_t prev_hits = 0;
    for (std::size_t tau = 0; tau <= e.encoder.circuit.depth(); ++tau) {
        auto row = run_lightcone_row(e, tau);
        EXPECT_EQ(row.d_loc, 0) << "tau=" << tau;
        if (row.cone_hits_a == 0) EXPECT_EQ(row.d_full, 0) << "tau=" << tau;
        if (tau <= cert) EXPECT_EQ(row.cone_hits_a, 0u) << "tau=" << tau;
        EXPECT_GE(row.cone_hits_a, prev_hits) << "tau=" << tau;
        prev_hits = row.cone_hits_a;
    }
    auto last = run_lightcone_row(e, e.encoder.circuit.depth());
    EXPECT_EQ(last.d_full, 2);
}

TEST(Lightcone, EnclosureShape) {
    for (int L = 4; L <= 6; ++L) {
        auto e = make_lightcone_experiment(L, 0, 0);
        EXPECT_EQ(e.enclosure.radius, 2 * L - 2);
        EXPECT_EQ(e.enclosure.distance_ba, L - 2);
        // The observable lives in B and differs from the encoded Z by a
        // stabilizer element, so it reads the same value on code states.
        EXPECT_TRUE(e.enclosure.b.contains_all(Region(e.enclosure.logical_on_b.support())));
        auto diff = e.enclosure.logical_on_b * encoded_z(L, 0, 0, 0);
        EXPECT_TRUE(e.code.generator_matrix().transpose().solve(symplectic_row(diff)).has_value());

        auto state = StabilizerState::zero_state(e.code.num_qubits());
        state.apply({Gate::Tag::X, {e.encoder.seeds[0]}});
        state.apply(e.encoder.circuit);
        EXPECT_EQ(state.expectation(e.enclosure.logical_on_b), -1);
        EXPECT_EQ(state.expectation(diff), +1);
    }
}
