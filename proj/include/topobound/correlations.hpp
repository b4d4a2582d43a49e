#pragma once

#include <cmath>
#include <vector>

#include "topobound/encoder.hpp"
#include "topobound/tableau.hpp"
#include "topobound/toric.hpp"

namespace topobound {

// Two-point winding statistics under truncated preparation. The prepared
// input is |+> on the first encoder seed and |0> everywhere else; the full
// circuit turns that into an equal superposition of the two Z-winding
// sectors, so the winding read off any column is a fair coin, yet two
// parallel columns always agree. Truncation severs that agreement exactly
// when the two measurement cones separate.

struct CorrelationExperiment {
    StabilizerCode code;
    EncoderResult encoder;
    PauliOp q1, q2; // Z-winding strips at column 0 and the shifted column
    int separation = 0; // lattice distance between the strips, doubled units
};

// `frac` picks the shifted strip at separation floor(frac * 2L), which must
// land on an even coordinate (columns live at even x) strictly between the
// strips' wraparound images.
inline CorrelationExperiment make_correlation_experiment(int L, double frac) {
    CorrelationExperiment e;
    e.code = make_toric_code_2d(L);
    e.encoder = staircase_encoder(L, 0, 0);
    int s = static_cast<int>(std::floor(frac * 2 * L));
    if (s % 2 != 0)
        throw SetupError("correlations: separation must be even, pick frac so that "
                         "floor(frac*2L) lands on a column");
    int t = s / 2;
    if (t < 1 || t > L - 1)
        throw SetupError("correlations: shifted strip must be a distinct column");
    e.q1 = encoded_z(L, 0, 0, 0);
    e.q2 = encoded_z(L, t, 0, 0);
    e.separation = s;
    return e;
}

struct CorrelationRow {
    std::size_t depth = 0;
    bool cones_disjoint = false;
    double corr = 0; // <Q1 Q2>, always a stabilizer-exact -1, 0 or 1
    double h1 = 0, h2 = 0, hjoint = 0;
    double mutual_info = 0;
};

namespace detail {

inline double entropy_bits(const std::vector<double>& p) {
    double h = 0;
    for (double v : p)
        if (v > 0) h -= v * std::log2(v);
    return h;
}

} // namespace detail

inline CorrelationRow run_correlation_row(const CorrelationExperiment& e, std::size_t depth) {
    auto c = e.encoder.circuit.truncated(depth);
    auto st = StabilizerState::zero_state(c.num_qubits());
    st.apply(Gate{Gate::Tag::H, {e.encoder.seeds[0]}});
    st.apply(c);

    int e1 = st.expectation(e.q1);
    int e2 = st.expectation(e.q2);
    int e12 = st.expectation(e.q1 * e.q2);

    CorrelationRow row;
    row.depth = depth;
    row.corr = e12;

    auto cone1 = measurement_cone(c, Region(e.q1.support()));
    auto cone2 = measurement_cone(c, Region(e.q2.support()));
    row.cones_disjoint = !cone1.intersects(cone2);

    // Joint outcome law from the three expectations. All entries are exact
    // quarters, so a factorized table factorizes bit-for-bit and the mutual
    // information below returns a hard 0.
    std::vector<double> joint(4), m1(2), m2(2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            int sa = a ? -1 : 1, sb = b ? -1 : 1;
            double p = (1.0 + sa * e1 + sb * e2 + sa * sb * e12) / 4.0;
            joint[2 * a + b] = p;
            m1[a] += p;
            m2[b] += p;
        }
    row.h1 = detail::entropy_bits(m1);
    row.h2 = detail::entropy_bits(m2);
    row.hjoint = detail::entropy_bits(joint);
    double info = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double p = joint[2 * a + b];
            if (p > 0) info += p * std::log2(p / (m1[a] * m2[b]));
        }
    row.mutual_info = info;
    return row;
}

} // namespace topobound
