#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "topobound/errors.hpp"

namespace topobound {

// Geometry convention used throughout: qubit sites carry integer coordinates
// on a periodic "doubled" grid of side `extent` per axis (for a torus of
// linear size L in vertices, extent = 2L; vertices sit at even coordinates,
// edge midpoints at mixed-parity ones). All distances are the L-infinity
// metric on that doubled torus.

inline int torus_delta(int a, int b, int extent) {
    int d = std::abs(a - b) % extent;
    return std::min(d, extent - d);
}

inline int linf_distance(const std::vector<int>& p, const std::vector<int>& q, int extent) {
    if (p.size() != q.size()) throw ContractError("linf_distance: dimension mismatch");
    int best = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        best = std::max(best, torus_delta(p[i], q[i], extent));
    return best;
}

// A set of qubit indices, kept sorted and unique.
class Region {
public:
    Region() = default;
    explicit Region(std::vector<std::size_t> qubits) : qubits_(std::move(qubits)) {
        std::sort(qubits_.begin(), qubits_.end());
        qubits_.erase(std::unique(qubits_.begin(), qubits_.end()), qubits_.end());
    }

    static Region all(std::size_t n) {
        std::vector<std::size_t> q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = i;
        return Region(std::move(q));
    }

    const std::vector<std::size_t>& qubits() const { return qubits_; }
    std::size_t size() const { return qubits_.size(); }
    bool empty() const { return qubits_.empty(); }

    bool contains(std::size_t q) const {
        return std::binary_search(qubits_.begin(), qubits_.end(), q);
    }

    Region complement(std::size_t n) const {
        std::vector<std::size_t> out;
        out.reserve(n - qubits_.size());
        std::size_t j = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (j < qubits_.size() && qubits_[j] == q)
                ++j;
            else
                out.push_back(q);
        }
        return Region(std::move(out));
    }

    bool intersects(const Region& o) const {
        std::size_t i = 0, j = 0;
        while (i < qubits_.size() && j < o.qubits_.size()) {
            if (qubits_[i] == o.qubits_[j]) return true;
            if (qubits_[i] < o.qubits_[j])
                ++i;
            else
                ++j;
        }
        return false;
    }

    bool contains_all(const Region& o) const {
        return std::includes(qubits_.begin(), qubits_.end(), o.qubits_.begin(), o.qubits_.end());
    }

    bool operator==(const Region&) const = default;

private:
    std::vector<std::size_t> qubits_;
};

// min over pairs (a in A, b in B) of the site distance.
inline int region_distance(const std::vector<std::vector<int>>& coords, int extent,
                           const Region& a, const Region& b) {
    if (a.empty() || b.empty()) throw ContractError("region_distance: empty region");
    int best = extent;
    for (auto qa : a.qubits())
        for (auto qb : b.qubits())
            best = std::min(best, linf_distance(coords[qa], coords[qb], extent));
    return best;
}

// max over pairs within A; 0 for a single site.
inline int region_diameter(const std::vector<std::vector<int>>& coords, int extent,
                           const Region& a) {
    if (a.empty()) throw ContractError("region_diameter: empty region");
    int best = 0;
    for (auto qa : a.qubits())
        for (auto qb : a.qubits())
            best = std::max(best, linf_distance(coords[qa], coords[qb], extent));
    return best;
}

// Axis-aligned cube of side R centered at `center`: along each axis the
// window [c - floor((R-1)/2), c + floor(R/2)] mod extent, so even R puts the
// center in the lower-left cell of the middle block. R >= extent covers
// everything.
inline bool cube_contains(const std::vector<int>& center, int R, int extent,
                          const std::vector<int>& p) {
    if (R < 1) throw ContractError("cube: R must be >= 1");
    if (R >= extent) return true;
    int lo_off = (R - 1) / 2;
    int hi_off = R / 2;
    for (std::size_t i = 0; i < center.size(); ++i) {
        int rel = ((p[i] - center[i] + lo_off) % extent + extent) % extent;
        if (rel > lo_off + hi_off) return false;
    }
    return true;
}

inline Region cube_region(const std::vector<std::vector<int>>& coords, int extent,
                          const std::vector<int>& center, int R) {
    std::vector<std::size_t> members;
    for (std::size_t q = 0; q < coords.size(); ++q)
        if (cube_contains(center, R, extent, coords[q])) members.push_back(q);
    return Region(std::move(members));
}

// Qubit site minimizing the maximum distance to A; ties break to the
// smallest qubit index.
inline std::size_t one_center(const std::vector<std::vector<int>>& coords, int extent,
                              const Region& a) {
    if (a.empty()) throw ContractError("one_center: empty region");
    std::size_t best_q = 0;
    int best_r = extent + 1;
    for (std::size_t q = 0; q < coords.size(); ++q) {
        int r = 0;
        for (auto qa : a.qubits())
            r = std::max(r, linf_distance(coords[q], coords[qa], extent));
        if (r < best_r) {
            best_r = r;
            best_q = q;
        }
    }
    return best_q;
}

// All qubits within distance r of the region (r >= 0, so the region itself
// is always included).
inline Region ball_region(const std::vector<std::vector<int>>& coords, int extent,
                          const Region& seed, int r) {
    std::vector<std::size_t> members;
    for (std::size_t q = 0; q < coords.size(); ++q) {
        for (auto s : seed.qubits()) {
            if (linf_distance(coords[q], coords[s], extent) <= r) {
                members.push_back(q);
                break;
            }
        }
    }
    return Region(std::move(members));
}

} // namespace topobound
