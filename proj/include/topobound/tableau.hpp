#pragma once

#include <vector>

#include "topobound/circuit.hpp"
#include "topobound/errors.hpp"
#include "topobound/pauli.hpp"
#include "topobound/symplectic.hpp"

namespace topobound {

// Pure stabilizer state as n stabilizer + n destabilizer rows with exact
// signs. Rows are PauliOps, so all phase bookkeeping is the one tested
// multiplication rule.
class StabilizerState {
public:
    static StabilizerState zero_state(std::size_t n) {
        StabilizerState s;
        s.n_ = n;
        s.stab_.reserve(n);
        s.destab_.reserve(n);
        for (std::size_t q = 0; q < n; ++q) {
            s.stab_.push_back(PauliOp::single(n, q, 'Z'));
            s.destab_.push_back(PauliOp::single(n, q, 'X'));
        }
        return s;
    }

    // The joint +1 eigenstate of n independent commuting generators
    // (signs respected).
    static StabilizerState from_stabilizers(const std::vector<PauliOp>& gens) {
        if (gens.empty()) throw ContractError("from_stabilizers: no generators");
        std::size_t n = gens[0].num_qubits();
        if (gens.size() != n)
            throw ContractError("from_stabilizers: need exactly n independent generators");
        for (const auto& g : gens)
            if (!g.is_hermitian())
                throw ContractError("from_stabilizers: generators must carry real signs");
        auto basis = symplectic_gram_schmidt(n, gens);
        StabilizerState s;
        s.n_ = n;
        s.stab_ = basis.stabilizers;
        s.destab_ = basis.destabilizers;
        return s;
    }

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliOp>& stabilizers() const { return stab_; }

    void apply(const Gate& g) {
        for (auto& p : stab_) conjugate_by_gate(p, g);
        for (auto& p : destab_) conjugate_by_gate(p, g);
    }

    void apply(const LocalCircuit& c) {
        if (c.num_qubits() != n_) throw ContractError("apply: circuit size mismatch");
        for (const auto& layer : c.layers())
            for (const auto& g : layer) apply(g);
    }

    // <P> for a signed Hermitian Pauli: 0 if P anticommutes with any
    // stabilizer, otherwise +1 or -1, decided exactly by reassembling P from
    // the stabilizer rows the destabilizers select.
    int expectation(const PauliOp& p) const {
        if (p.num_qubits() != n_) throw ContractError("expectation: size mismatch");
        if (!p.is_hermitian()) throw ContractError("expectation: operator has no real sign");
        for (const auto& s : stab_)
            if (!p.commutes_with(s)) return 0;
        PauliOp acc = PauliOp::identity(n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (!p.commutes_with(destab_[i])) acc *= stab_[i];
        if (!acc.equals_up_to_phase(p))
            throw ContractError("expectation: operator escapes the stabilizer group");
        unsigned diff = (p.phase - acc.phase) & 3u;
        if (diff == 0) return +1;
        if (diff == 2) return -1;
        throw ContractError("expectation: phase mismatch");
    }

private:
    std::size_t n_ = 0;
    std::vector<PauliOp> stab_, destab_;
};

} // namespace topobound
