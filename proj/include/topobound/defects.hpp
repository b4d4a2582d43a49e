#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topobound/bitmatrix.hpp"
#include "topobound/errors.hpp"
#include "topobound/rng.hpp"

namespace topobound {

// Pairwise-annihilating defects on the vertices of an L x L torus. Occupancy
// is mod 2: two defects meeting on a site cancel. Two update rules are
// compared: a deterministic sweep that funnels everything into the origin,
// and independent nearest-neighbor diffusion.

enum class Dynamics { Sweep, Diffusive };

inline const char* dynamics_name(Dynamics d) {
    return d == Dynamics::Sweep ? "sweep" : "diffusive";
}

inline Dynamics dynamics_from_name(const std::string& s) {
    if (s == "sweep") return Dynamics::Sweep;
    if (s == "diffusive") return Dynamics::Diffusive;
    throw ValidationError("unknown dynamics '" + s + "'");
}

inline std::size_t defect_site(int L, int a, int b) {
    return static_cast<std::size_t>(b) * L + a;
}

// Torus graph distance between vertices (defects move one edge per step).
inline int defect_distance(int L, int a1, int b1, int a2, int b2) {
    int da = a1 > a2 ? a1 - a2 : a2 - a1;
    int db = b1 > b2 ? b1 - b2 : b2 - b1;
    if (da > L - da) da = L - da;
    if (db > L - db) db = L - db;
    return da + db;
}

// iid coin flips per site, resampled until the configuration can actually
// annihilate to nothing: the total count must be even, and on even L each
// checkerboard class must be even on its own. Simultaneous unit moves flip a
// defect's color every step, and an even torus has no odd cycles, so defects
// from different classes can never meet under diffusion.
inline BitVec random_defect_config(Rng& rng, int L) {
    if (L < 2) throw SetupError("defects: L must be at least 2");
    std::size_t sites = static_cast<std::size_t>(L) * L;
    for (;;) {
        BitVec occ(sites);
        std::size_t even = 0, odd = 0;
        for (int b = 0; b < L; ++b)
            for (int a = 0; a < L; ++a)
                if (rng.next_bool()) {
                    occ.set(defect_site(L, a, b), true);
                    (((a + b) & 1) ? odd : even)++;
                }
        if (L % 2 == 0) {
            if (even % 2 == 0 && odd % 2 == 0) return occ;
        } else {
            if ((even + odd) % 2 == 0) return occ;
        }
    }
}

inline std::vector<std::pair<int, int>> defect_list(int L, const BitVec& occ) {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < L; ++b)
        for (int a = 0; a < L; ++a)
            if (occ.get(defect_site(L, a, b))) out.emplace_back(a, b);
    return out;
}

// No two defects can annihilate before meeting, and each step closes any
// pairwise distance by at most 2. The defect whose nearest partner is
// farthest away therefore forces ceil(d/2) steps no matter the rule.
inline std::size_t loneliest_defect_bound(int L, const BitVec& occ) {
    auto ds = defect_list(L, occ);
    if (ds.size() < 2) return 0;
    int worst = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        int nearest = 4 * L;
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (i == j) continue;
            int d = defect_distance(L, ds[i].first, ds[i].second, ds[j].first, ds[j].second);
            if (d < nearest) nearest = d;
        }
        if (nearest > worst) worst = nearest;
    }
    return static_cast<std::size_t>((worst + 1) / 2);
}

// One simultaneous sweep step: a > 0 marches left, the a = 0 column marches
// down, the origin holds still and absorbs.
inline BitVec sweep_step(int L, const BitVec& occ) {
    BitVec next(occ.size());
    for (int b = 0; b < L; ++b)
        for (int a = 0; a < L; ++a) {
            if (!occ.get(defect_site(L, a, b))) continue;
            int ta = a, tb = b;
            if (a > 0)
                ta = a - 1;
            else if (b > 0)
                tb = b - 1;
            next.flip(defect_site(L, ta, tb));
        }
    return next;
}

// One diffusion step: defects visited in site order each pick a uniformly
// random neighbor; arrivals are xored together.
inline BitVec diffusive_step(int L, const BitVec& occ, Rng& rng) {
    BitVec next(occ.size());
    for (int b = 0; b < L; ++b)
        for (int a = 0; a < L; ++a) {
            if (!occ.get(defect_site(L, a, b))) continue;
            int ta = a, tb = b;
            switch (rng.next_below(4)) {
                case 0: ta = (a + 1) % L; break;
                case 1: ta = (a + L - 1) % L; break;
                case 2: tb = (b + 1) % L; break;
                default: tb = (b + L - 1) % L; break;
            }
            next.flip(defect_site(L, ta, tb));
        }
    return next;
}

inline std::size_t steps_to_clear(int L, BitVec occ, Dynamics dyn, Rng& rng,
                                  std::size_t max_steps = 1000000) {
    std::size_t steps = 0;
    while (!occ.none()) {
        if (steps >= max_steps)
            throw BudgetError("defects: configuration did not clear within step budget");
        occ = dyn == Dynamics::Sweep ? sweep_step(L, occ) : diffusive_step(L, occ, rng);
        ++steps;
    }
    return steps;
}

struct DefectTrial {
    std::uint64_t seed = 0; // derived per-trial stream seed
    std::size_t initial_defects = 0;
    std::size_t steps_to_clear = 0;
    std::size_t lower_bound = 0;
};

inline DefectTrial run_defect_trial(int L, Dynamics dyn, std::uint64_t base_seed,
                                    std::uint64_t trial) {
    DefectTrial out;
    out.seed = Rng::trial_seed(base_seed, trial);
    Rng rng(out.seed);
    BitVec occ = random_defect_config(rng, L);
    out.initial_defects = occ.popcount();
    out.lower_bound = loneliest_defect_bound(L, occ);
    out.steps_to_clear = steps_to_clear(L, std::move(occ), dyn, rng);
    return out;
}

} // namespace topobound
