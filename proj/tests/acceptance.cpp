// Acceptance gate: each numbered criterion prints exactly one PASS/FAIL
// line. Tolerances are pinned here, not configurable. The binary exits
// nonzero if any criterion fails but always runs all of them.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "dense_oracle.hpp"
#include "topobound/correctability.hpp"
#include "topobound/correlations.hpp"
#include "topobound/defects.hpp"
#include "topobound/distance.hpp"
#include "topobound/encoder.hpp"
#include "topobound/lightcone.hpp"
#include "topobound/stats.hpp"
#include "topobound/tableau.hpp"
#include "topobound/toric.hpp"
#include "topobound/uncertainty.hpp"

using namespace topobound;

namespace {

constexpr double kMatrixTol = 1e-9;   // dense-oracle comparisons
constexpr double kSTol = 1e-8;        // S-matrix magnitude and unitarity
constexpr double kEntropyTol = 1e-6;  // entropy bound and saturation
constexpr double kEq5Tol = 1e-9;      // logical sharpness bound
constexpr double kFactorTol = 1e-12;  // additivity of factorized entropies
constexpr double kMinDiffusiveExponent = 1.5;
constexpr double kMinR2 = 0.95;
constexpr double kSlopeStability = 0.20; // relative spread of R* increments

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

PauliOp random_pauli(Rng& rng, std::size_t n) {
    PauliOp p(n);
    for (std::size_t q = 0; q < n; ++q) {
        switch (rng.next_below(4)) {
            case 1: p.x.set(q, true); break;
            case 2: p.z.set(q, true); break;
            case 3:
                p.x.set(q, true);
                p.z.set(q, true);
                p.phase = (p.phase + 1) & 3u;
                break;
            default: break;
        }
    }
    if (rng.next_bool()) p.negate();
    return p;
}

Gate random_gate(Rng& rng, std::size_t n) {
    static const Gate::Tag tags[] = {Gate::Tag::H,    Gate::Tag::S, Gate::Tag::Sdg,
                                     Gate::Tag::X,    Gate::Tag::Y, Gate::Tag::Z,
                                     Gate::Tag::CNOT, Gate::Tag::CZ};
    Gate g;
    for (;;) {
        g.tag = tags[rng.next_below(8)];
        if (g.arity() == 1) {
            g.sites = {rng.next_below(n)};
            return g;
        }
        if (n < 2) continue;
        std::size_t a = rng.next_below(n), b = rng.next_below(n);
        if (a == b) continue;
        g.sites = {a, b};
        return g;
    }
}

LocalCircuit random_circuit(Rng& rng, std::size_t n, std::size_t gates) {
    LocalCircuit c(n);
    for (std::size_t i = 0; i < gates; ++i) c.append_layer({random_gate(rng, n)});
    return c;
}

oracle::Mat circuit_matrix(const LocalCircuit& c) {
    std::size_t dim = 1ull << c.num_qubits();
    oracle::Mat u = oracle::zeros(dim);
    for (std::size_t i = 0; i < dim; ++i) u[i][i] = 1;
    for (const auto& layer : c.layers())
        for (const auto& g : layer) u = oracle::mat_mul(oracle::gate_matrix(g, c.num_qubits()), u);
    return u;
}

bool in_stabilizer_group(const StabilizerCode& code, const PauliOp& p) {
    return code.generator_matrix().transpose().solve(symplectic_row(p)).has_value();
}

// --- C1 ------------------------------------------------------------------

std::string c1_oracle_equivalence() {
    Rng rng(0xac01u);
    std::size_t cases = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng.next_below(6);
        auto p = random_pauli(rng, n), q = random_pauli(rng, n);
        auto want = oracle::mat_mul(oracle::pauli_matrix(p), oracle::pauli_matrix(q));
        require(oracle::mat_distance(oracle::pauli_matrix(p * q), want) < kMatrixTol,
                "pauli product disagrees with the matrix oracle");
        require(p.commutes_with(q) ==
                    oracle::commute(oracle::pauli_matrix(p), oracle::pauli_matrix(q)),
                "commutation disagrees with the matrix oracle");
        ++cases;
    }
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 1 + rng.next_below(6);
        auto c = random_circuit(rng, n, 8);
        auto p = random_pauli(rng, n);
        auto u = circuit_matrix(c);
        auto want = oracle::conjugate(u, oracle::pauli_matrix(p));
        require(oracle::mat_distance(oracle::pauli_matrix(evolve(c, p)), want) < kMatrixTol,
                "heisenberg evolution disagrees with the matrix oracle");
        ++cases;
    }
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 1 + rng.next_below(6);
        auto c = random_circuit(rng, n, 8);
        auto st = StabilizerState::zero_state(n);
        st.apply(c);
        auto psi = oracle::apply_circuit(c, oracle::basis_vec(n, 0));
        PauliOp p(n);
        do {
            p = random_pauli(rng, n);
        } while (!p.is_hermitian());
        auto ref = oracle::expectation(p, psi);
        require(std::abs(double(st.expectation(p)) - ref.real()) < kMatrixTol &&
                    std::abs(ref.imag()) < kMatrixTol,
                "tableau expectation disagrees with the matrix oracle");
        ++cases;
    }
    require(cases >= 500, "fewer than 500 cases");
    return "multiply/commute/evolve/expectation match dense oracles on " +
           std::to_string(cases) + " randomized cases (n<=6)";
}

// --- C2 ------------------------------------------------------------------

std::string c2_distance() {
    for (int L : {2, 3, 4}) {
        auto code = make_toric_code_2d(L);
        auto r = exact_distance(code);
        require(r.distance == L,
                "L=" + std::to_string(L) + ": distance " + std::to_string(r.distance));
        for (const auto& g : code.generators())
            require(r.witness.commutes_with(g), "witness fails to commute with a generator");
        require(!in_stabilizer_group(code, r.witness), "witness is a stabilizer element");
    }
    return "exhaustive search gives d=L at L=2,3,4 with symplectically verified witnesses";
}

// --- C3 ------------------------------------------------------------------

bool brute_force_correctable(const StabilizerCode& code, const Region& region) {
    const auto& qs = region.qubits();
    std::size_t k = qs.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 4;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        PauliOp p(code.num_qubits());
        std::uint64_t m = mask;
        for (std::size_t i = 0; i < k; ++i, m /= 4) {
            switch (m % 4) {
                case 1: p.x.set(qs[i], true); break;
                case 2: p.z.set(qs[i], true); break;
                case 3:
                    p.x.set(qs[i], true);
                    p.z.set(qs[i], true);
                    break;
                default: break;
            }
        }
        bool commutes = true;
        for (const auto& g : code.generators())
            if (!p.commutes_with(g)) {
                commutes = false;
                break;
            }
        if (commutes && !in_stabilizer_group(code, p)) return false;
    }
    return true;
}

std::string c3_correctability_oracle() {
    auto code = make_toric_code_2d(3);
    Rng rng(0xac03u);
    std::size_t cases = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t size = rng.next_below(9);
        std::vector<std::size_t> qs;
        while (qs.size() < size) {
            auto q = rng.next_below(code.num_qubits());
            bool seen = false;
            for (auto u : qs) seen |= (u == q);
            if (!seen) qs.push_back(q);
        }
        Region region(qs);
        require(is_correctable(code, region) == brute_force_correctable(code, region),
                "disagreement on a region of size " + std::to_string(size));
        ++cases;
    }
    return "is_correctable matches 4^|region| brute force on " + std::to_string(cases) +
           " random regions (L=3, |region|<=8)";
}

// --- C4 ------------------------------------------------------------------

std::map<int, int> sweep_rstars() {
    static std::map<int, int> cache;
    if (cache.empty())
        for (int L : {3, 4, 5, 6}) cache[L] = correctable_cube_sweep(make_toric_code_2d(L)).r_star;
    return cache;
}

std::string c4_lemma1_sweep() {
    std::vector<double> xs, ys;
    std::vector<int> rstars;
    for (int L : {3, 4, 5, 6}) {
        auto sweep = correctable_cube_sweep(make_toric_code_2d(L));
        bool seen_false = false;
        for (const auto& row : sweep.rows) {
            if (!row.all_correctable) seen_false = true;
            require(!(seen_false && row.all_correctable),
                    "all_correctable is not monotone in R at L=" + std::to_string(L));
        }
        rstars.push_back(sweep.r_star);
        xs.push_back(L);
        ys.push_back(sweep.r_star);
    }
    for (std::size_t i = 1; i < rstars.size(); ++i)
        require(rstars[i] > rstars[i - 1], "R* is not monotone increasing");
    auto fit = linear_fit(xs, ys);
    require(fit.slope > 0, "R* vs L slope is not positive");
    int dmin = rstars[1] - rstars[0], dmax = dmin;
    for (std::size_t i = 1; i + 1 < rstars.size(); ++i) {
        int d = rstars[i + 1] - rstars[i];
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    require(dmin > 0 && double(dmax) <= (1.0 + kSlopeStability) * double(dmin),
            "R* increments vary by more than 20%");
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "R*(L)=%d,%d,%d,%d over L=3..6, slope %.3g, increments within 20%%",
                  rstars[0], rstars[1], rstars[2], rstars[3], fit.slope);
    return buf;
}

// --- C5 ------------------------------------------------------------------

std::string c5_cleaning() {
    Rng rng(0xac05u);
    auto rstars = sweep_rstars();
    std::map<int, StabilizerCode> codes;
    for (int L : {3, 4, 5}) codes.emplace(L, make_toric_code_2d(L));
    std::size_t cases = 0;
    for (int t = 0; t < 100; ++t) {
        int L = 3 + int(rng.next_below(3));
        const auto& code = codes.at(L);
        int R = 1 + int(rng.next_below(std::size_t(rstars.at(L))));
        auto center = code.coords()[rng.next_below(code.num_qubits())];
        auto cube = cube_region(code.coords(), code.extent(), center, R);
        require(is_correctable(code, cube), "sweep-certified cube is not correctable");
        const auto& pair = code.logical_basis()[rng.next_below(2)];
        const auto& rep = rng.next_bool() ? pair.first : pair.second;
        auto cleaned = clean(code, rep, cube);
        require(!Region(cleaned.support()).intersects(cube),
                "cleaned operator still touches the cube");
        require(in_stabilizer_group(code, cleaned * rep),
                "cleaned and original differ by a non-stabilizer");
        ++cases;
    }
    return "clean() leaves the cube and stays in the logical class on " +
           std::to_string(cases) + " random pairs (L=3..5)";
}

// --- C6 ------------------------------------------------------------------

std::string c6_lightcone_dichotomy() {
    Rng rng(0xac06u);
    const int L = 8;
    for (int t = 0; t < 50; ++t) {
        int a0 = int(rng.next_below(L)), b0 = int(rng.next_below(L));
        auto e = make_lightcone_experiment(L, a0, b0);
        auto full = run_lightcone_row(e, e.encoder.circuit.depth());
        require(full.d_full == 2, "full depth does not distinguish the seed pair");
        require(full.cone_hits_a == 2, "full-depth cone misses the seeds");
        auto cert = run_lightcone_row(e, certified_truncation_depth(e));
        require(cert.cone_hits_a == 0, "certified truncation cone reaches the seeds");
        require(cert.d_full == 0, "certified truncation still distinguishes");
        require(full.d_loc == 0 && cert.d_loc == 0, "localized circuit leaks distinguishability");
    }
    return "staircase at L=8: full depth gives D=2 with cone contact, certified truncation "
           "gives D=0 and a blind cone, 50/50 placements";
}

// --- C7 ------------------------------------------------------------------

std::string c7_defect_scaling() {
    for (int L : {4, 8, 16, 32}) {
        for (std::size_t t = 0; t < 1000; ++t) {
            auto r = run_defect_trial(L, Dynamics::Sweep, 0xac070000u + std::uint64_t(L), t);
            require(r.steps_to_clear <= std::size_t(2 * L),
                    "sweep exceeded 2L steps at L=" + std::to_string(L));
        }
    }
    std::vector<double> xs, ys;
    for (int L : {8, 16, 32, 64}) {
        std::vector<double> steps;
        for (std::size_t t = 0; t < 200; ++t)
            steps.push_back(double(
                run_defect_trial(L, Dynamics::Diffusive, 0xac071111u + std::uint64_t(L), t)
                    .steps_to_clear));
        xs.push_back(std::log2(double(L)));
        ys.push_back(std::log2(median(steps)));
    }
    auto fit = linear_fit(xs, ys);
    require(fit.slope >= kMinDiffusiveExponent,
            "diffusive exponent " + std::to_string(fit.slope) + " below 1.5");
    require(fit.r2 >= kMinR2, "diffusive fit R2 " + std::to_string(fit.r2) + " below 0.95");
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "sweep clears 4000/4000 configs within 2L; diffusive exponent %.2f (R2=%.3f)",
                  fit.slope, fit.r2);
    return buf;
}

// --- C8 ------------------------------------------------------------------

std::string c8_sharpness_and_control() {
    auto frame = make_logical_frame(2);
    double max_eq5 = 0;
    for (std::size_t s = 0; s < 1000; ++s)
        max_eq5 = std::max(max_eq5, run_uncertainty_sample(frame, s, 0xac08u).eq5_sum);
    require(max_eq5 <= 1.0 + kEq5Tol, "sharpness bound violated: " + std::to_string(max_eq5));
    auto rep1 = encoded_z(2, 0, 0, 0), rep2 = encoded_z(2, 1, 0, 0);
    for (const auto& cls : frame.classes)
        require(std::abs(winding_pair_correlation(cls, rep1, rep2) - 1.0) < kEq5Tol,
                "code state loses the winding correlation");
    double control = winding_pair_correlation(plus_state(8), rep1, rep2);
    require(std::abs(control) <= 0.5, "product state keeps too much winding correlation");
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "max(<X>^2+<Z>^2)=%.12f over 1000 ground states; product-state winding "
                  "correlation %.2f vs 1 on code states",
                  max_eq5, control);
    return buf;
}

// --- C9 ------------------------------------------------------------------

std::string c9_mub_machinery() {
    auto frame = make_logical_frame(2);
    auto s = basis_overlaps(frame.dir1, frame.dir2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            require(std::abs(std::abs(s[i][j]) - 0.5) <= kSTol, "overlap magnitude is not 1/2");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            Amp acc{};
            for (std::size_t j = 0; j < 4; ++j) acc += s[i][j] * std::conj(s[k][j]);
            require(std::abs(acc - Amp(i == k ? 1.0 : 0.0)) <= kSTol, "S is not unitary");
        }
    std::size_t violations = 0;
    for (std::size_t t = 0; t < 1000; ++t) {
        auto row = run_uncertainty_sample(frame, t, 0xac09u);
        if (row.h1 + row.h2 < 2.0 - kEntropyTol) ++violations;
    }
    require(violations == 0, std::to_string(violations) + " entropy-bound violations");
    for (std::size_t k = 0; k < 4; ++k) {
        require(entropy_in_basis(frame.dir1, frame.dir1[k]) <= kEntropyTol &&
                    std::abs(entropy_in_basis(frame.dir2, frame.dir1[k]) - 2.0) <= kEntropyTol,
                "direction-1 basis state does not saturate");
        require(entropy_in_basis(frame.dir2, frame.dir2[k]) <= kEntropyTol &&
                    std::abs(entropy_in_basis(frame.dir1, frame.dir2[k]) - 2.0) <= kEntropyTol,
                "direction-2 basis state does not saturate");
    }
    return "|S_ij|=1/2 and unitary within 1e-8; H1+H2>=2 on 1000/1000 ground states; "
           "anyon-basis states saturate within 1e-6";
}

// --- C10 -----------------------------------------------------------------

std::string c10_correlation_dichotomy() {
    auto e = make_correlation_experiment(8, 0.5);
    std::size_t full = e.encoder.circuit.depth();
    auto top = run_correlation_row(e, full);
    require(top.corr == 1.0 && top.h1 == 1.0 && top.h2 == 1.0 && top.mutual_info == 1.0,
            "full depth does not give perfectly correlated fair coins");
    Rng rng(0xac10u);
    std::size_t disjoint = 0;
    for (int t = 0; t < 50; ++t) {
        auto row = run_correlation_row(e, rng.next_below(full + 1));
        if (row.cones_disjoint) {
            ++disjoint;
            require(row.mutual_info == 0.0, "disjoint cones with nonzero mutual information");
            require(std::abs(row.hjoint - row.h1 - row.h2) <= kFactorTol,
                    "disjoint cones without additive entropies");
        }
    }
    require(disjoint >= 1, "no sampled truncation had disjoint cones");
    return "L=8 full depth: corr=1 with 1-bit marginals and I=1; " + std::to_string(disjoint) +
           "/50 sampled truncations had disjoint cones, every one factorized exactly";
}

// --- C11 -----------------------------------------------------------------

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cmd(const std::string& cmd) {
    FILE* f = popen((cmd + " 2>/dev/null").c_str(), "r");
    require(f != nullptr, "popen failed");
    char buf[4096];
    std::string out;
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, k);
    int rc = pclose(f);
    RunResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = std::move(out);
    return r;
}

std::string cli_binary() {
    if (const char* env = std::getenv("TOPOBOUND_BIN")) return env;
#ifdef TOPOBOUND_BIN_PATH
    return TOPOBOUND_BIN_PATH;
#else
    throw Failure("no TOPOBOUND_BIN in environment");
#endif
}

std::string strip_timestamp(const std::string& s) {
    std::string out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto end = s.find('\n', pos);
        if (end == std::string::npos) end = s.size();
        auto line = s.substr(pos, end - pos);
        if (line.rfind("# timestamp=", 0) != 0) {
            out += line;
            out += '\n';
        }
        pos = end + 1;
    }
    return out;
}

std::string c11_determinism() {
    auto bin = cli_binary();
    const std::vector<std::string> cmds = {
        " prep-dissipative --L 6 --dynamics diffusive --trials 25 --seed 11 --no-timestamp",
        " uncertainty --L 2 --samples 25 --seed 5 --no-timestamp",
        " lemma1-sweep --L 3..4 --no-timestamp",
        " encode-lightcone --L 5 --placements 3 --depth-fraction 1 --seed 7 --no-timestamp",
        " prep-correlations --L 6 --separation-fraction 0.5 --no-timestamp",
    };
    for (const auto& c : cmds) {
        auto a = run_cmd(bin + c);
        auto b = run_cmd(bin + c);
        require(a.status == 0 && b.status == 0, "command failed:" + c);
        require(!a.out.empty(), "command produced no output:" + c);
        require(a.out == b.out, "reruns differ byte for byte:" + c);
    }
    auto a = run_cmd(bin + " uncertainty --L 2 --samples 10 --seed 5");
    auto b = run_cmd(bin + " uncertainty --L 2 --samples 10 --seed 5");
    require(a.status == 0 && b.status == 0, "timestamped command failed");
    require(strip_timestamp(a.out) == strip_timestamp(b.out),
            "bodies differ once the timestamp line is removed");
    return "5 subcommands rerun byte-identical with --no-timestamp; timestamped bodies match";
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
        {"C1", c1_oracle_equivalence}, {"C2", c2_distance},
        {"C3", c3_correctability_oracle}, {"C4", c4_lemma1_sweep},
        {"C5", c5_cleaning}, {"C6", c6_lightcone_dichotomy},
        {"C7", c7_defect_scaling}, {"C8", c8_sharpness_and_control},
        {"C9", c9_mub_machinery}, {"C10", c10_correlation_dichotomy},
        {"C11", c11_determinism},
    };
    int failures = 0;
    for (const auto& [id, fn] : criteria) {
        try {
            auto detail = fn();
            std::printf("%s PASS  %s\n", id, detail.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("%s FAIL  %s\n", id, e.what());
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
