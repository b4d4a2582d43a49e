#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "topobound/code.hpp"
#include "topobound/errors.hpp"
#include "topobound/pauli.hpp"

namespace topobound {

struct DistanceResult {
    int distance = 0;
    PauliOp witness; // a minimum-weight logical operator
};

struct DistanceBudget {
    // Max combinations stored in the lookup table of one half-weight phase.
    double table_entries = static_cast<double>(1ull << 23);
    // Cumulative enumeration steps across the whole search.
    double total_work = static_cast<double>(1ull << 30);
};

namespace detail {

inline double binomial_approx(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<double>(n - i) / static_cast<double>(i + 1);
        if (r > 1e18) return 1e18;
    }
    return r;
}

inline double pow3(std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r *= 3.0;
    return r;
}

inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_words(const std::vector<std::uint64_t>& words) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words) h = mix64(h ^ w);
    return h;
}

// Visits all ascending index tuples of size k from [0, n). Returns false
// from start() when k > n.
class Combinations {
public:
    Combinations(std::size_t n, std::size_t k) : n_(n), k_(k) {}

    bool start() {
        if (k_ > n_) return false;
        idx_.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) idx_[i] = i;
        return true;
    }

    bool next() {
        if (k_ == 0) return false;
        std::size_t i = k_;
        while (i > 0) {
            --i;
            if (idx_[i] != i + n_ - k_) {
                ++idx_[i];
                for (std::size_t j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::size_t>& indices() const { return idx_; }

private:
    std::size_t n_, k_;
    std::vector<std::size_t> idx_;
};

} // namespace detail

// Exact code distance: the minimum weight of a Pauli operator that commutes
// with every generator and acts nontrivially on the logical algebra.
//
// Weights are tried in increasing order; each weight w is split w1 + w2 and
// solved by matching generator syndromes of weight-w1 against weight-w2
// enumerations through a hash table, separately for each basis logical (an
// operator anticommuting with that logical, all generator syndromes zero).
// Budgets make the refusal deterministic rather than letting the search run
// for hours: table size per phase and total enumeration work are both
// estimated up front and enforced.
inline DistanceResult exact_distance(const StabilizerCode& code, DistanceBudget budget = {}) {
    const std::size_t n = code.num_qubits();
    const auto& gens = code.generators();
    const std::size_t m = gens.size();
    if (code.num_logical() == 0) throw ContractError("exact_distance: code has no logical qubits");

    std::vector<PauliOp> targets;
    for (const auto& [lx, lz] : code.logical_basis()) {
        targets.push_back(lx);
        targets.push_back(lz);
    }

    const std::size_t sbits = m + 1; // generator syndromes plus the target bit
    const std::size_t swords = (sbits + 63) / 64;

    // anti(entry, gens) for entry = (qubit, letter), letters X,Y,Z.
    auto entry_base = [&](std::size_t q, int letter) {
        std::vector<std::uint64_t> words(swords, 0);
        for (std::size_t i = 0; i < m; ++i) {
            bool a;
            if (letter == 0)
                a = gens[i].z.get(q);
            else if (letter == 2)
                a = gens[i].x.get(q);
            else
                a = gens[i].x.get(q) ^ gens[i].z.get(q);
            if (a) words[i >> 6] |= 1ull << (i & 63);
        }
        return words;
    };
    std::vector<std::vector<std::uint64_t>> base(3 * n);
    for (std::size_t q = 0; q < n; ++q)
        for (int l = 0; l < 3; ++l) base[3 * q + l] = entry_base(q, l);

    const std::size_t entry_bits = std::bit_width(3 * n);
    auto build_pauli = [&](const std::vector<std::size_t>& entries) {
        PauliOp p(n);
        for (auto e : entries) {
            std::size_t q = e / 3;
            int l = static_cast<int>(e % 3);
            if (l != 2) p.x.set(q, true);
            if (l != 0) p.z.set(q, true);
            if (l == 1) p.phase = (p.phase + 1) & 3u;
        }
        return p;
    };

    double work_spent = 0.0;
    for (std::size_t w = 1; w <= n; ++w) {
        std::size_t w1 = (w + 1) / 2, w2 = w / 2;
        double t1_cost = detail::binomial_approx(n, w1) * detail::pow3(w1);
        double t2_cost = detail::binomial_approx(n, w2) * detail::pow3(w2);
        if (t1_cost > budget.table_entries)
            throw BudgetError("exact distance infeasible: weight " + std::to_string(w) +
                              " needs a table of ~" +
                              std::to_string(static_cast<unsigned long long>(t1_cost)) +
                              " entries, over the " +
                              std::to_string(static_cast<unsigned long long>(budget.table_entries)) +
                              " entry budget");
        work_spent += static_cast<double>(targets.size()) * (t1_cost + t2_cost);
        if (work_spent > budget.total_work)
            throw BudgetError("exact distance infeasible: enumeration work exceeds budget at weight " +
                              std::to_string(w));
        if (entry_bits * w1 > 64)
            throw BudgetError("exact distance infeasible: weight too large to pack");

        for (const auto& target : targets) {
            std::vector<std::uint64_t> tbit(swords, 0);
            tbit[m >> 6] |= 1ull << (m & 63);
            auto entry_vec = [&](std::size_t e) {
                auto v = base[e];
                std::size_t q = e / 3;
                int l = static_cast<int>(e % 3);
                bool a;
                if (l == 0)
                    a = target.z.get(q);
                else if (l == 2)
                    a = target.x.get(q);
                else
                    a = target.x.get(q) ^ target.z.get(q);
                if (a) v[m >> 6] |= 1ull << (m & 63);
                return v;
            };
            // Cache the per-target entry vectors.
            std::vector<std::vector<std::uint64_t>> ev(3 * n);
            for (std::size_t e = 0; e < 3 * n; ++e) ev[e] = entry_vec(e);

            auto syndrome_of = [&](const std::vector<std::size_t>& qubits,
                                   const std::vector<std::size_t>& letters) {
                std::vector<std::uint64_t> s(swords, 0);
                for (std::size_t i = 0; i < qubits.size(); ++i) {
                    const auto& v = ev[3 * qubits[i] + letters[i]];
                    for (std::size_t j = 0; j < swords; ++j) s[j] ^= v[j];
                }
                return s;
            };

            // Phase 1: hash all weight-w1 syndromes.
            std::unordered_multimap<std::uint64_t, std::uint64_t> table;
            table.reserve(static_cast<std::size_t>(t1_cost) + 16);
            detail::Combinations combos1(n, w1);
            std::vector<std::size_t> letters(w1, 0);
            if (combos1.start()) {
                do {
                    std::fill(letters.begin(), letters.end(), 0);
                    for (;;) {
                        auto s = syndrome_of(combos1.indices(), letters);
                        std::uint64_t packed = 0;
                        for (std::size_t i = 0; i < w1; ++i)
                            packed |= static_cast<std::uint64_t>(3 * combos1.indices()[i] + letters[i])
                                      << (i * entry_bits);
                        table.emplace(detail::hash_words(s), packed);
                        std::size_t d = 0;
                        while (d < w1 && letters[d] == 2) letters[d++] = 0;
                        if (d == w1) break;
                        ++letters[d];
                    }
                } while (combos1.next());
            }

            // Phase 2: stream weight-w2 syndromes and match.
            auto try_match = [&](const std::vector<std::uint64_t>& s2,
                                 const std::vector<std::size_t>& qubits2,
                                 const std::vector<std::size_t>& letters2,
                                 PauliOp& out) {
                std::vector<std::uint64_t> want(swords);
                for (std::size_t j = 0; j < swords; ++j) want[j] = s2[j] ^ tbit[j];
                auto range = table.equal_range(detail::hash_words(want));
                for (auto it = range.first; it != range.second; ++it) {
                    std::vector<std::size_t> entries;
                    for (std::size_t i = 0; i < w1; ++i)
                        entries.push_back((it->second >> (i * entry_bits)) &
                                          ((1ull << entry_bits) - 1));
                    for (std::size_t i = 0; i < qubits2.size(); ++i)
                        entries.push_back(3 * qubits2[i] + letters2[i]);
                    PauliOp cand = build_pauli(entries);
                    if (cand.weight() != w) continue; // shared qubit: covered at lower weight
                    bool ok = cand.commutes_with(target) == false;
                    for (std::size_t i = 0; i < m && ok; ++i) ok = cand.commutes_with(gens[i]);
                    if (ok) {
                        out = cand;
                        return true;
                    }
                }
                return false;
            };

            PauliOp found;
            bool hit = false;
            if (w2 == 0) {
                std::vector<std::uint64_t> s2(swords, 0);
                hit = try_match(s2, {}, {}, found);
            } else {
                detail::Combinations combos2(n, w2);
                std::vector<std::size_t> letters2(w2, 0);
                if (combos2.start()) {
                    do {
                        std::fill(letters2.begin(), letters2.end(), 0);
                        for (;;) {
                            auto s2 = syndrome_of(combos2.indices(), letters2);
                            if (try_match(s2, combos2.indices(), letters2, found)) {
                                hit = true;
                                break;
                            }
                            std::size_t d = 0;
                            while (d < w2 && letters2[d] == 2) letters2[d++] = 0;
                            if (d == w2) break;
                            ++letters2[d];
                        }
                    } while (!hit && combos2.next());
                }
            }
            if (hit) return {static_cast<int>(w), found};
        }
    }
    throw ContractError("exact_distance: no logical operator found");
}

} // namespace topobound
