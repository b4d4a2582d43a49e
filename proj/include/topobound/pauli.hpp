#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topobound/bitmatrix.hpp"
#include "topobound/errors.hpp"

namespace topobound {

// n-qubit Pauli operator in XZ form:
//
//   P = i^phase * prod_j X_j^{x_j} * prod_j Z_j^{z_j}
//
// with phase tracked mod 4. The letter Y on qubit j means x_j = z_j = 1 with
// one factor of i absorbed into the global phase, so the Hermitian operator
// written "+XYZ" has phase 1 (one Y). An operator is Hermitian exactly when
// phase and the Y count have equal parity; then its sign is
// i^(phase - ycount) in {+1, -1}. Products of Hermitian operators can pick
// up an imaginary sign; that is representable here but not printable.
class PauliOp {
public:
    PauliOp() = default;
    explicit PauliOp(std::size_t n) : x(n), z(n), phase(0) {}

    static PauliOp identity(std::size_t n) { return PauliOp(n); }

    static PauliOp single(std::size_t n, std::size_t q, char letter) {
        PauliOp p(n);
        switch (letter) {
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                p.phase = 1;
                break;
            case 'I': break;
            default: throw ContractError("single: bad letter");
        }
        return p;
    }

    std::size_t num_qubits() const { return x.size(); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x.get(i) || z.get(i)) ++w;
        return w;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x.get(i) || z.get(i)) s.push_back(i);
        return s;
    }

    bool is_identity() const { return x.none() && z.none(); }

    char letter_at(std::size_t q) const {
        bool xb = x.get(q), zb = z.get(q);
        if (xb && zb) return 'Y';
        if (xb) return 'X';
        if (zb) return 'Z';
        return 'I';
    }

    std::size_t y_count() const { return (x & z).popcount(); }

    bool is_hermitian() const { return ((phase ^ y_count()) & 1u) == 0; }

    // +1 or -1. Only meaningful for Hermitian operators.
    int sign() const {
        unsigned s = (phase - static_cast<unsigned>(y_count())) & 3u;
        if (s == 0) return +1;
        if (s == 2) return -1;
        throw ContractError("sign: operator has imaginary prefactor");
    }

    void negate() { phase = (phase + 2) & 3u; }

    bool commutes_with(const PauliOp& o) const {
        return !(BitVec::dot(x, o.z) ^ BitVec::dot(z, o.x));
    }

    PauliOp& operator*=(const PauliOp& o) {
        if (o.num_qubits() != num_qubits()) throw ContractError("Pauli product: size mismatch");
        phase = (phase + o.phase + 2u * BitVec::dot(z, o.x)) & 3u;
        x ^= o.x;
        z ^= o.z;
        return *this;
    }

    friend PauliOp operator*(PauliOp a, const PauliOp& b) {
        a *= b;
        return a;
    }

    bool equals_up_to_phase(const PauliOp& o) const { return x == o.x && z == o.z; }

    bool operator==(const PauliOp&) const = default;

    // "XIZY" or "-XIZY"; a leading '+' is accepted on input, not produced.
    std::string to_string() const {
        std::string s;
        if (sign() < 0) s.push_back('-');
        for (std::size_t q = 0; q < num_qubits(); ++q) s.push_back(letter_at(q));
        return s;
    }

    static PauliOp from_string(const std::string& s) {
        std::size_t pos = 0;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos == s.size()) throw ParseError("Pauli string has no letters: '" + s + "'");
        PauliOp p(s.size() - pos);
        std::size_t y = 0;
        for (std::size_t q = 0; pos < s.size(); ++q, ++pos) {
            switch (s[pos]) {
                case 'I': break;
                case 'X': p.x.set(q, true); break;
                case 'Z': p.z.set(q, true); break;
                case 'Y':
                    p.x.set(q, true);
                    p.z.set(q, true);
                    ++y;
                    break;
                default:
                    throw ParseError("bad Pauli letter '" + std::string(1, s[pos]) + "' in '" + s + "'");
            }
        }
        p.phase = (y + (neg ? 2u : 0u)) & 3u;
        return p;
    }

    BitVec x, z;
    unsigned phase = 0; // exponent of i, mod 4
};

// [x | z] row, the symplectic coordinates of P (phase dropped).
inline BitVec symplectic_row(const PauliOp& p) {
    std::size_t n = p.num_qubits();
    BitVec row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (p.x.get(i)) row.set(i, true);
        if (p.z.get(i)) row.set(n + i, true);
    }
    return row;
}

} // namespace topobound
