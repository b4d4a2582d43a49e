#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "topobound/bitmatrix.hpp"
#include "topobound/errors.hpp"
#include "topobound/lattice.hpp"
#include "topobound/pauli.hpp"
#include "topobound/symplectic.hpp"

namespace topobound {

inline constexpr const char* kMetricName = "torus-linf-doubled";

// Stabilizer code with geometry: independent commuting generators plus a
// site coordinate for every qubit on a doubled periodic grid.
class StabilizerCode {
public:
    StabilizerCode() = default;
    StabilizerCode(std::size_t n, std::vector<PauliOp> generators,
                   std::vector<std::vector<int>> coords, int extent, std::string name)
        : n_(n),
          generators_(std::move(generators)),
          coords_(std::move(coords)),
          extent_(extent),
          name_(std::move(name)) {}

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliOp>& generators() const { return generators_; }
    const std::vector<std::vector<int>>& coords() const { return coords_; }
    int extent() const { return extent_; }
    const std::string& name() const { return name_; }

    std::size_t num_logical() const { return n_ - generators_.size(); }

    Region generator_support(std::size_t i) const {
        return Region(generators_[i].support());
    }

    // Largest generator support diameter: the interaction range of the code.
    int locality() const {
        int xi = 0;
        for (const auto& g : generators_) {
            auto s = g.support();
            if (s.size() < 2) continue;
            xi = std::max(xi, region_diameter(coords_, extent_, Region(s)));
        }
        return xi;
    }

    // (X-like, Z-like) pairs for the logical algebra. Builders that know
    // canonical representatives install them; otherwise computed once by
    // symplectic completion.
    const std::vector<std::pair<PauliOp, PauliOp>>& logical_basis() const {
        if (logicals_.empty() && num_logical() > 0)
            logicals_ = symplectic_gram_schmidt(n_, generators_).logicals;
        return logicals_;
    }

    void set_known_logicals(std::vector<std::pair<PauliOp, PauliOp>> logicals) {
        if (logicals.size() != num_logical())
            throw ContractError("set_known_logicals: wrong pair count");
        logicals_ = std::move(logicals);
    }

    // Stacked [x | z] rows of the generators.
    BitMatrix generator_matrix() const {
        BitMatrix m(generators_.size(), 2 * n_);
        for (std::size_t i = 0; i < generators_.size(); ++i) m.row(i) = symplectic_row(generators_[i]);
        return m;
    }

    void validate() const {
        if (coords_.size() != n_) throw ValidationError("coords: need one site per qubit");
        if (extent_ <= 0) throw ValidationError("extent must be positive");
        std::size_t dims = coords_.empty() ? 0 : coords_[0].size();
        if (dims == 0 && n_ > 0) throw ValidationError("coords: empty site");
        for (const auto& c : coords_) {
            if (c.size() != dims) throw ValidationError("coords: mixed dimensions");
            for (int v : c)
                if (v < 0 || v >= extent_) throw ValidationError("coords: site outside extent");
        }
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (generators_[i].num_qubits() != n_)
                throw ValidationError("generator " + std::to_string(i) + " has wrong qubit count");
            if (!generators_[i].is_hermitian())
                throw ValidationError("generator " + std::to_string(i) + " has no real sign");
        }
        for (std::size_t i = 0; i < generators_.size(); ++i)
            for (std::size_t j = i + 1; j < generators_.size(); ++j)
                if (!generators_[i].commutes_with(generators_[j]))
                    throw ValidationError("generators " + std::to_string(i) + " and " +
                                          std::to_string(j) + " anticommute");
        if (generator_matrix().rank() != generators_.size())
            throw ValidationError("generators are dependent");
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["name"] = name_;
        j["n"] = n_;
        j["metric"] = kMetricName;
        // one entry per coordinate axis; this library only builds square tori,
        // so they are all equal
        std::size_t dim = coords_.empty() ? 1 : coords_[0].size();
        j["extent"] = std::vector<int>(dim, extent_);
        j["coords"] = coords_;
        std::vector<std::string> gens;
        gens.reserve(generators_.size());
        for (const auto& g : generators_) gens.push_back(g.to_string());
        j["generators"] = gens;
        return j;
    }

    static StabilizerCode from_json(const nlohmann::json& j) {
        for (const char* key : {"n", "metric", "extent", "coords", "generators"})
            if (!j.contains(key)) throw ParseError(std::string("code: missing field '") + key + "'");
        if (j.at("metric").get<std::string>() != kMetricName)
            throw ValidationError("code: unsupported metric '" +
                                  j.at("metric").get<std::string>() + "'");
        StabilizerCode code;
        code.n_ = j.at("n").get<std::size_t>();
        const auto& ext = j.at("extent");
        if (ext.is_array()) {
            auto v = ext.get<std::vector<int>>();
            if (v.empty()) throw ParseError("code: empty extent");
            for (int e : v)
                if (e != v[0]) throw ValidationError("code: only square tori are supported");
            code.extent_ = v[0];
        } else {
            code.extent_ = ext.get<int>();
        }
        code.coords_ = j.at("coords").get<std::vector<std::vector<int>>>();
        code.name_ = j.value("name", std::string{});
        for (const auto& s : j.at("generators"))
            code.generators_.push_back(PauliOp::from_string(s.get<std::string>()));
        code.validate();
        return code;
    }

    // Identity of the code proper; the name is a label and does not count.
    friend bool operator==(const StabilizerCode& a, const StabilizerCode& b) {
        return a.n_ == b.n_ && a.generators_ == b.generators_ && a.coords_ == b.coords_ &&
               a.extent_ == b.extent_;
    }

private:
    std::size_t n_ = 0;
    std::vector<PauliOp> generators_;
    std::vector<std::vector<int>> coords_;
    int extent_ = 0;
    std::string name_;
    mutable std::vector<std::pair<PauliOp, PauliOp>> logicals_;
};

inline StabilizerCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("code file '" + path + "': " + e.what());
    }
    return StabilizerCode::from_json(j);
}

inline void save_code(const StabilizerCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write code file '" + path + "'");
    out << code.to_json().dump(2) << "\n";
}

} // namespace topobound
