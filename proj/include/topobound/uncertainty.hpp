#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "topobound/dense.hpp"
#include "topobound/rng.hpp"
#include "topobound/toric.hpp"

namespace topobound {

// Two complementary logical measurements on the 2d code's ground space. The
// commuting pairs (Z1, X2) and (Z2, X1) each diagonalize the four-fold
// ground space; their eigenbases turn out mutually unbiased, which is what
// limits how sharply one state can answer both questions.

struct LogicalFrame {
    StabilizerCode code;
    std::vector<DenseState> classes; // Z-class basis, index bits = (Z1, Z2) sign bits
    std::vector<DenseState> dir1;    // (Z1, X2) eigenbasis, index bits = sign bits in that order
    std::vector<DenseState> dir2;    // (Z2, X1) eigenbasis
    PauliOp x1, z1, x2, z2;
};

inline LogicalFrame make_logical_frame(int L) {
    if (L < 2 || static_cast<std::size_t>(2 * L * L) > kDenseMaxQubits)
        throw SetupError("logical frame: dense ground-space simulation needs 2 <= L with "
                         "2L^2 <= " +
                         std::to_string(kDenseMaxQubits) + " qubits");
    LogicalFrame f;
    f.code = make_toric_code_2d(L);
    if (f.code.num_logical() != 2) throw ContractError("logical frame: expected two classes");
    f.x1 = f.code.logical_basis()[0].first;
    f.z1 = f.code.logical_basis()[0].second;
    f.x2 = f.code.logical_basis()[1].first;
    f.z2 = f.code.logical_basis()[1].second;
    f.classes = code_space_basis(f.code);

    // Sector (z, x) of dir1 grows out of the class state with Z1 = (-1)^z
    // and Z2 = +1; projecting that onto the X2 = (-1)^x branch never hits
    // zero (the class state splits evenly) and fixes all phases to +1.
    auto carve = [&](const PauliOp& xop, std::size_t class_stride) {
        std::vector<DenseState> basis;
        for (std::size_t idx = 0; idx < 4; ++idx) {
            auto v = f.classes[(idx & 1) * class_stride];
            project_eigenspace(xop, (idx & 2) ? -1 : 1, v);
            dense_normalize(v);
            basis.push_back(std::move(v));
        }
        return basis;
    };
    f.dir1 = carve(f.x2, 1);
    f.dir2 = carve(f.x1, 2);
    return f;
}

inline std::vector<std::vector<Amp>> basis_overlaps(const std::vector<DenseState>& a,
                                                    const std::vector<DenseState>& b) {
    std::vector<std::vector<Amp>> m(a.size(), std::vector<Amp>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = dense_inner(a[i], b[j]);
    return m;
}

// Shannon entropy (bits) of measuring `s` in an orthonormal basis of the
// subspace `s` lives in. Refuses states with weight outside the span.
inline double entropy_in_basis(const std::vector<DenseState>& basis, const DenseState& s) {
    double total = 0, h = 0;
    for (const auto& e : basis) {
        double p = std::norm(dense_inner(e, s));
        total += p;
        if (p > 1e-15) h -= p * std::log2(p);
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw ContractError("entropy_in_basis: state leaves the span");
    return h;
}

// Random unit vector in the span of `basis`: complex normal coefficients,
// deterministic given the stream.
inline DenseState random_span_state(const std::vector<DenseState>& basis, Rng& rng) {
    DenseState out(basis[0].size());
    for (const auto& e : basis) {
        auto [re, im] = rng.next_normal_pair();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += Amp(re, im) * e[i];
    }
    dense_normalize(out);
    return out;
}

struct UncertaintyRow {
    std::size_t sample = 0;
    double h1 = 0, h2 = 0;
    double bound = 2.0; // -2 log2 of the largest basis overlap, 1/2 everywhere here
    double eq5_sum = 0; // worst of <X_i>^2 + <Z_i>^2 over the two logical pairs
};

inline UncertaintyRow run_uncertainty_sample(const LogicalFrame& f, std::size_t sample,
                                             std::uint64_t base_seed) {
    Rng rng = Rng::for_trial(base_seed, sample);
    auto s = random_span_state(f.classes, rng);
    UncertaintyRow row;
    row.sample = sample;
    row.h1 = entropy_in_basis(f.dir1, s);
    row.h2 = entropy_in_basis(f.dir2, s);
    double a1 = dense_expectation(f.x1, s), b1 = dense_expectation(f.z1, s);
    double a2 = dense_expectation(f.x2, s), b2 = dense_expectation(f.z2, s);
    row.eq5_sum = std::max(a1 * a1 + b1 * b1, a2 * a2 + b2 * b2);
    return row;
}

// Correlation between two parallel disjoint representatives of the same
// logical Z. Their product is a stabilizer element, so every code state
// answers exactly 1; product states fall short by a definite margin.
inline double winding_pair_correlation(const DenseState& s, const PauliOp& rep1,
                                       const PauliOp& rep2) {
    if (Region(rep1.support()).intersects(Region(rep2.support())))
        throw ContractError("winding_pair_correlation: representatives overlap");
    return dense_expectation(rep1 * rep2, s);
}

} // namespace topobound
