#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "topobound/errors.hpp"
#include "topobound/lattice.hpp"
#include "topobound/pauli.hpp"

namespace topobound {

struct Gate {
    enum class Tag { H, S, Sdg, X, Y, Z, CNOT, CZ };

    Tag tag;
    std::vector<std::size_t> sites;

    std::size_t arity() const { return (tag == Tag::CNOT || tag == Tag::CZ) ? 2 : 1; }

    Gate adjoint() const {
        Gate g = *this;
        if (tag == Tag::S)
            g.tag = Tag::Sdg;
        else if (tag == Tag::Sdg)
            g.tag = Tag::S;
        return g;
    }
};

inline const char* gate_name(Gate::Tag t) {
    switch (t) {
        case Gate::Tag::H: return "H";
        case Gate::Tag::S: return "S";
        case Gate::Tag::Sdg: return "Sdg";
        case Gate::Tag::X: return "X";
        case Gate::Tag::Y: return "Y";
        case Gate::Tag::Z: return "Z";
        case Gate::Tag::CNOT: return "CNOT";
        case Gate::Tag::CZ: return "CZ";
    }
    throw ContractError("gate_name: bad tag");
}

inline Gate::Tag gate_tag_from_name(const std::string& s) {
    if (s == "H") return Gate::Tag::H;
    if (s == "S") return Gate::Tag::S;
    if (s == "Sdg") return Gate::Tag::Sdg;
    if (s == "X") return Gate::Tag::X;
    if (s == "Y") return Gate::Tag::Y;
    if (s == "Z") return Gate::Tag::Z;
    if (s == "CNOT") return Gate::Tag::CNOT;
    if (s == "CZ") return Gate::Tag::CZ;
    throw ParseError("unknown gate tag '" + s + "'");
}

// Conjugation p -> G p G^dagger in XZ form. Phase bookkeeping uses the
// absolute i^phase convention of PauliOp; CNOT then needs no phase term.
inline void conjugate_by_gate(PauliOp& p, const Gate& g) {
    switch (g.tag) {
        case Gate::Tag::H: {
            std::size_t q = g.sites[0];
            bool xb = p.x.get(q), zb = p.z.get(q);
            if (xb && zb) p.phase = (p.phase + 2) & 3u;
            p.x.set(q, zb);
            p.z.set(q, xb);
            break;
        }
        case Gate::Tag::S: {
            std::size_t q = g.sites[0];
            if (p.x.get(q)) {
                p.phase = (p.phase + 1) & 3u;
                p.z.flip(q);
            }
            break;
        }
        case Gate::Tag::Sdg: {
            std::size_t q = g.sites[0];
            if (p.x.get(q)) {
                p.phase = (p.phase + 3) & 3u;
                p.z.flip(q);
            }
            break;
        }
        case Gate::Tag::X: {
            std::size_t q = g.sites[0];
            if (p.z.get(q)) p.phase = (p.phase + 2) & 3u;
            break;
        }
        case Gate::Tag::Y: {
            std::size_t q = g.sites[0];
            if (p.x.get(q) != p.z.get(q)) p.phase = (p.phase + 2) & 3u;
            break;
        }
        case Gate::Tag::Z: {
            std::size_t q = g.sites[0];
            if (p.x.get(q)) p.phase = (p.phase + 2) & 3u;
            break;
        }
        case Gate::Tag::CNOT: {
            std::size_t c = g.sites[0], t = g.sites[1];
            if (p.x.get(c)) p.x.flip(t);
            if (p.z.get(t)) p.z.flip(c);
            break;
        }
        case Gate::Tag::CZ: {
            std::size_t a = g.sites[0], b = g.sites[1];
            bool xa = p.x.get(a), xb = p.x.get(b);
            if (xa && xb) p.phase = (p.phase + 2) & 3u;
            if (xa) p.z.flip(b);
            if (xb) p.z.flip(a);
            break;
        }
    }
}

// A layered circuit; gates within one layer act on disjoint qubits, so a
// layer is one parallel time step.
class LocalCircuit {
public:
    LocalCircuit() = default;
    explicit LocalCircuit(std::size_t n) : n_(n) {}

    std::size_t num_qubits() const { return n_; }
    std::size_t depth() const { return layers_.size(); }
    const std::vector<std::vector<Gate>>& layers() const { return layers_; }

    std::size_t num_gates() const {
        std::size_t c = 0;
        for (const auto& l : layers_) c += l.size();
        return c;
    }

    void append_layer(std::vector<Gate> layer) {
        std::vector<bool> used(n_, false);
        for (const auto& g : layer) {
            if (g.sites.size() != g.arity())
                throw ValidationError("gate arity mismatch for " + std::string(gate_name(g.tag)));
            for (auto s : g.sites) {
                if (s >= n_) throw ValidationError("gate site out of range");
                if (used[s]) throw ValidationError("overlapping gates within a layer");
                used[s] = true;
            }
        }
        layers_.push_back(std::move(layer));
    }

    LocalCircuit adjoint() const {
        LocalCircuit out(n_);
        for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
            std::vector<Gate> layer;
            layer.reserve(it->size());
            for (const auto& g : *it) layer.push_back(g.adjoint());
            out.layers_.push_back(std::move(layer));
        }
        return out;
    }

    // First `depth` layers.
    LocalCircuit truncated(std::size_t depth) const {
        LocalCircuit out(n_);
        for (std::size_t i = 0; i < depth && i < layers_.size(); ++i) out.layers_.push_back(layers_[i]);
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& layer : layers_) {
            nlohmann::json jl = nlohmann::json::array();
            for (const auto& g : layer)
                jl.push_back({{"gate", gate_name(g.tag)}, {"sites", g.sites}});
            arr.push_back(jl);
        }
        return arr;
    }

    static LocalCircuit from_json(const nlohmann::json& j, std::size_t n) {
        if (!j.is_array()) throw ParseError("circuit: top level must be an array of layers");
        LocalCircuit out(n);
        for (const auto& jl : j) {
            if (!jl.is_array()) throw ParseError("circuit: each layer must be an array of gates");
            std::vector<Gate> layer;
            for (const auto& jg : jl) {
                if (!jg.contains("gate") || !jg.contains("sites"))
                    throw ParseError("circuit: gate needs 'gate' and 'sites'");
                Gate g;
                g.tag = gate_tag_from_name(jg.at("gate").get<std::string>());
                g.sites = jg.at("sites").get<std::vector<std::size_t>>();
                layer.push_back(std::move(g));
            }
            out.append_layer(std::move(layer));
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Gate>> layers_;
};

inline LocalCircuit load_circuit(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open circuit file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("circuit file '" + path + "': " + e.what());
    }
    return LocalCircuit::from_json(j, n);
}

inline void save_circuit(const LocalCircuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write circuit file '" + path + "'");
    out << c.to_json().dump(2) << "\n";
}

// U P U^dagger, layers applied first to last.
inline PauliOp evolve(const LocalCircuit& c, PauliOp p) {
    if (p.num_qubits() != c.num_qubits()) throw ContractError("evolve: size mismatch");
    for (const auto& layer : c.layers())
        for (const auto& g : layer) conjugate_by_gate(p, g);
    return p;
}

// U^dagger P U: what measuring P after the circuit looks like on the input.
inline PauliOp evolve_adjoint(const LocalCircuit& c, const PauliOp& p) {
    return evolve(c.adjoint(), p);
}

// Upper bound on the support of U^dagger P U over all P supported in
// `seed`: walk the layers backwards, absorbing every gate that touches the
// growing set. This is the measurement light cone of the region.
inline Region measurement_cone(const LocalCircuit& c, const Region& seed) {
    std::vector<bool> in(c.num_qubits(), false);
    for (auto q : seed.qubits()) in.at(q) = true;
    const auto& layers = c.layers();
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        for (const auto& g : *it) {
            bool hit = false;
            for (auto s : g.sites) hit |= in[s];
            if (hit)
                for (auto s : g.sites) in[s] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < in.size(); ++q)
        if (in[q]) out.push_back(q);
    return Region(std::move(out));
}

// Keep only gates entirely inside `keep`; layer count is preserved. If the
// measurement cone of a region fits inside `keep`, evolving through the
// restricted circuit gives bit-identical results for that region.
inline LocalCircuit localize(const LocalCircuit& c, const Region& keep) {
    LocalCircuit out(c.num_qubits());
    for (const auto& layer : c.layers()) {
        std::vector<Gate> kept;
        for (const auto& g : layer) {
            bool inside = true;
            for (auto s : g.sites) inside &= keep.contains(s);
            if (inside) kept.push_back(g);
        }
        out.append_layer(std::move(kept));
    }
    return out;
}

// Greedy ASAP scheduling of a gate sequence into layers. Per-qubit gate
// order is preserved, so the packed circuit is the same unitary.
inline LocalCircuit pack_layers(std::size_t n, const std::vector<Gate>& gates) {
    std::vector<std::size_t> ready(n, 0); // first layer each qubit is free in
    std::vector<std::vector<Gate>> layers;
    for (const auto& g : gates) {
        std::size_t at = 0;
        for (auto s : g.sites) at = std::max(at, ready.at(s));
        if (at >= layers.size()) layers.resize(at + 1);
        layers[at].push_back(g);
        for (auto s : g.sites) ready[s] = at + 1;
    }
    LocalCircuit out(n);
    for (auto& l : layers) out.append_layer(std::move(l));
    return out;
}

// Largest L-infinity diameter of any gate's support, the per-layer speed at
// which information can propagate.
inline int circuit_range(const LocalCircuit& c, const std::vector<std::vector<int>>& coords,
                         int extent) {
    int r = 0;
    for (const auto& layer : c.layers())
        for (const auto& g : layer)
            for (std::size_t i = 0; i < g.sites.size(); ++i)
                for (std::size_t j = i + 1; j < g.sites.size(); ++j)
                    r = std::max(r, linf_distance(coords[g.sites[i]], coords[g.sites[j]], extent));
    return r;
}

} // namespace topobound
