// Command-line driver: every experiment in the library behind one binary
// with deterministic, machine-readable output. Exit codes: 0 success,
// 2 unknown subcommand, 3 invalid parameters or malformed input, 4 work
// budget exceeded, 1 internal failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topobound/correctability.hpp"
#include "topobound/correlations.hpp"
#include "topobound/csv.hpp"
#include "topobound/defects.hpp"
#include "topobound/distance.hpp"
#include "topobound/encoder.hpp"
#include "topobound/lightcone.hpp"
#include "topobound/stats.hpp"
#include "topobound/toric.hpp"
#include "topobound/uncertainty.hpp"

using namespace topobound;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    bool no_timestamp = false;
    CLI::Option* format_opt = nullptr;
};

StabilizerCode build_code(const std::string& name, int L) {
    if (name == "toric2d") return make_toric_code_2d(L);
    if (name == "toric3d") return make_toric_code_3d(L);
    throw ValidationError("unknown code '" + name + "' (builtin: toric2d, toric3d)");
}

std::vector<int> parse_lattice_range(const std::string& s) {
    auto to_int = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size() || v < 1) throw std::invalid_argument(part);
            return v;
        } catch (const std::exception&) {
            throw ValidationError("bad lattice size '" + part + "' in '" + s + "'");
        }
    };
    auto dots = s.find("..");
    if (dots == std::string::npos) return {to_int(s)};
    int lo = to_int(s.substr(0, dots));
    int hi = to_int(s.substr(dots + 2));
    if (hi < lo) throw ValidationError("empty lattice range '" + s + "'");
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

PauliOp logical_by_name(const StabilizerCode& code, const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'X' || name[0] == 'Z')) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(name.substr(1));
        } catch (const std::exception&) {
            idx = 0;
        }
        if (idx >= 1 && idx <= code.num_logical()) {
            const auto& pair = code.logical_basis()[idx - 1];
            return name[0] == 'X' ? pair.first : pair.second;
        }
    }
    throw ValidationError("unknown logical '" + name + "' (use X1..X" +
                          std::to_string(code.num_logical()) + " or Z1..Z" +
                          std::to_string(code.num_logical()) + ")");
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s.push_back(sep);
        s += std::to_string(v[i]);
    }
    return s;
}

void emit(const ResultTable& t, const GlobalOpts& g, bool default_json = false,
          bool flat_json = false) {
    std::string fmt = g.format;
    if (default_json && g.format_opt != nullptr && g.format_opt->count() == 0) fmt = "json";
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!g.out.empty()) {
        file.open(g.out, std::ios::binary);
        if (!file) throw ValidationError("cannot open output file '" + g.out + "'");
        os = &file;
    }
    if (fmt == "json" && flat_json)
        write_json_object(*os, t, !g.no_timestamp);
    else if (fmt == "json")
        write_json(*os, t, !g.no_timestamp);
    else
        write_csv(*os, t, !g.no_timestamp);
}

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// --- summary aggregation ------------------------------------------------

void summarize_lemma1(const ParsedTable& t) {
    auto cl = t.column("L"), cr = t.column("R_star");
    std::map<double, double> rstar;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        rstar[cell_as_double(t, r, cl)] = cell_as_double(t, r, cr);
    std::vector<double> xs, ys;
    for (const auto& [L, R] : rstar) {
        std::printf("  L=%g: R*=%g\n", L, R);
        xs.push_back(L);
        ys.push_back(R);
    }
    if (xs.size() >= 2) {
        auto fit = linear_fit(xs, ys);
        std::printf("  R* vs L least-squares slope = %s (R2=%s)\n", fmt_num(fit.slope).c_str(),
                    fmt_num(fit.r2).c_str());
    }
}

void summarize_prep(const ParsedTable& t) {
    auto cl = t.column("L"), cd = t.column("dynamics"), cs = t.column("steps_to_clear");
    std::map<std::pair<std::string, double>, std::vector<double>> groups;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        groups[{t.rows[r][cd], cell_as_double(t, r, cl)}].push_back(cell_as_double(t, r, cs));
    std::map<std::string, std::vector<std::pair<double, double>>> medians;
    for (auto& [key, steps] : groups) {
        double mx = 0;
        for (double s : steps) mx = std::max(mx, s);
        double med = median(steps);
        std::printf("  dynamics=%s L=%g: trials=%zu median=%g max=%g max/L=%s\n",
                    key.first.c_str(), key.second, steps.size(), med, mx,
                    fmt_num(mx / key.second).c_str());
        medians[key.first].push_back({key.second, med});
    }
    for (const auto& [dyn, pts] : medians) {
        if (pts.size() < 2) continue;
        std::vector<double> xs, ys;
        for (auto [L, med] : pts) {
            if (med <= 0) continue;
            xs.push_back(std::log2(L));
            ys.push_back(std::log2(med));
        }
        if (xs.size() < 2) continue;
        auto fit = linear_fit(xs, ys);
        std::printf("  %s median scaling exponent = %s (R2=%s)\n", dyn.c_str(),
                    fmt_num(fit.slope).c_str(), fmt_num(fit.r2).c_str());
    }
}

void summarize_uncertainty(const ParsedTable& t) {
    auto c1 = t.column("H1"), c2 = t.column("H2");
    auto cb = t.column("bound"), ce = t.column("eq5_sum");
    double min_sum = 1e300, max_eq5 = 0, bound = 0;
    std::size_t violations = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        double sum = cell_as_double(t, r, c1) + cell_as_double(t, r, c2);
        bound = cell_as_double(t, r, cb);
        min_sum = std::min(min_sum, sum);
        max_eq5 = std::max(max_eq5, cell_as_double(t, r, ce));
        if (sum < bound - 1e-6) ++violations;
    }
    std::printf("  min(H1+H2)=%s bound=%g entropy violations=%zu max eq5_sum=%s\n",
                fmt_num(min_sum).c_str(), bound, violations, fmt_num(max_eq5).c_str());
}

void summarize_lightcone(const ParsedTable& t) {
    auto ch = t.column("cone_hits_A"), cf = t.column("D_full"), cg = t.column("D_loc");
    std::size_t blind_nonzero = 0, loc_nonzero = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (cell_as_double(t, r, ch) == 0 && cell_as_double(t, r, cf) != 0) ++blind_nonzero;
        if (cell_as_double(t, r, cg) != 0) ++loc_nonzero;
    }
    std::printf("  blind-cone rows with D_full!=0: %zu (want 0)\n", blind_nonzero);
    std::printf("  rows with localized leakage D_loc!=0: %zu (want 0)\n", loc_nonzero);
}

void summarize_correlations(const ParsedTable& t) {
    auto cd = t.column("cones_disjoint"), cm = t.column("mutual_info");
    std::size_t disjoint = 0, violations = 0;
    double max_mi = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        double mi = cell_as_double(t, r, cm);
        max_mi = std::max(max_mi, mi);
        if (cell_as_double(t, r, cd) != 0) {
            ++disjoint;
            if (mi != 0) ++violations;
        }
    }
    std::printf("  disjoint-cone rows: %zu, factorization violations: %zu (want 0), max MI=%s\n",
                disjoint, violations, fmt_num(max_mi).c_str());
}

int run_summary(const std::vector<std::string>& paths) {
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ValidationError("cannot open '" + path + "'");
        auto t = read_csv(in);
        std::printf("%s: subcommand=%s, %zu rows\n", path.c_str(), t.subcommand.c_str(),
                    t.rows.size());
        if (t.rows.empty()) continue;
        if (t.subcommand == "lemma1-sweep")
            summarize_lemma1(t);
        else if (t.subcommand == "prep-dissipative")
            summarize_prep(t);
        else if (t.subcommand == "uncertainty")
            summarize_uncertainty(t);
        else if (t.subcommand == "encode-lightcone")
            summarize_lightcone(t);
        else if (t.subcommand == "prep-correlations")
            summarize_correlations(t);
    }
    return 0;
}

// Unknown subcommand names exit 2 before CLI11 sees them; everything else
// (bad flags, bad values) is exit 3 via the parser.
int precheck_subcommand(int argc, char** argv) {
    static const std::set<std::string> top = {
        "code",           "region",          "clean",       "lemma1-sweep",
        "encode-lightcone", "prep-dissipative", "uncertainty", "prep-correlations",
        "summary"};
    if (argc < 2 || argv[1][0] == '-') return -1;
    std::string a1 = argv[1];
    if (!top.count(a1)) {
        std::fprintf(stderr, "error: unknown subcommand '%s'\n", a1.c_str());
        return 2;
    }
    if (argc >= 3 && argv[2][0] != '-') {
        std::string a2 = argv[2];
        if (a1 == "code" && a2 != "info" && a2 != "distance") {
            std::fprintf(stderr, "error: unknown subcommand 'code %s'\n", a2.c_str());
            return 2;
        }
        if (a1 == "region" && a2 != "correctable") {
            std::fprintf(stderr, "error: unknown subcommand 'region %s'\n", a2.c_str());
            return 2;
        }
    }
    return -1;
}

} // namespace

int main(int argc, char** argv) {
    if (int rc = precheck_subcommand(argc, argv); rc >= 0) return rc;

    CLI::App app{"stabilizer-code experiments: correctable regions, cleaned logicals, "
                 "light-cone truncation, dissipative defect removal, logical uncertainty"};
    app.set_version_flag("--version", std::string(kToolName) + " v" + kToolVersion);
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help); // bad flags get the usage text, not a hint

    GlobalOpts g;
    app.add_option("--seed", g.seed, "base RNG seed; per-trial streams derive from it");
    app.add_option("--out", g.out, "output file (default: stdout)");
    g.format_opt = app.add_option("--format", g.format, "output format")
                       ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp header line");

    std::string code_name = "toric2d";
    int L = 0;
    std::string l_range = "2";
    std::string encoder_name = "staircase";
    std::string dynamics = "sweep";
    std::string logical_name = "Z1";
    std::vector<std::size_t> region_qubits;
    std::vector<int> cube_center;
    int cube_size = 1;
    double depth_fraction = -1.0;
    double separation_fraction = 0.5;
    std::size_t trials = 100, samples = 100, placements = 1;
    DistanceBudget budget;
    std::vector<std::string> summary_paths;

    auto* code_cmd = app.add_subcommand("code", "inspect a builtin code");
    code_cmd->fallthrough();
    code_cmd->require_subcommand(1);

    std::string code_file;
    // builds from --code-file when given, otherwise from the builtin name + --L;
    // the returned config string goes into the output header
    auto resolve_code = [&](const CLI::Option* lopt) -> std::pair<StabilizerCode, std::string> {
        if (!code_file.empty()) return {load_code(code_file), "file=" + code_file};
        if (lopt->count() == 0) throw ValidationError("need --L (builtin code) or --code-file");
        return {build_code(code_name, L), "code=" + code_name + ",L=" + std::to_string(L)};
    };

    auto* info_cmd = code_cmd->add_subcommand("info", "report n, k, exact d and range");
    info_cmd->fallthrough();
    info_cmd->add_option("--code", code_name, "builtin code name");
    auto* info_l = info_cmd->add_option("--L", L, "lattice side");
    info_cmd->add_option("--code-file", code_file, "code description file (JSON)")
        ->excludes(info_l);
    info_cmd->callback([&] {
        auto [code, config] = resolve_code(info_l);
        auto d = exact_distance(code, budget);
        ResultTable t;
        t.subcommand = "code info";
        t.config = config;
        t.columns = {"code", "L", "n", "k", "d", "xi"};
        // the doubled-coordinate convention ties lattice side to extent/2
        t.rows.push_back({code.name(), std::int64_t(code.extent() / 2),
                          std::int64_t(code.num_qubits()), std::int64_t(code.num_logical()),
                          std::int64_t(d.distance), std::int64_t(code.locality())});
        emit(t, g, /*default_json=*/true, /*flat_json=*/true);
    });

    auto* dist_cmd = code_cmd->add_subcommand("distance", "exact minimum distance with witness");
    dist_cmd->fallthrough();
    dist_cmd->add_option("--code", code_name, "builtin code name");
    auto* dist_l = dist_cmd->add_option("--L", L, "lattice side");
    dist_cmd->add_option("--code-file", code_file, "code description file (JSON)")
        ->excludes(dist_l);
    dist_cmd->add_option("--table-entries", budget.table_entries, "half-search table cap");
    dist_cmd->add_option("--total-work", budget.total_work, "enumeration step cap");
    dist_cmd->callback([&] {
        auto [code, config] = resolve_code(dist_l);
        auto d = exact_distance(code, budget);
        ResultTable t;
        t.subcommand = "code distance";
        t.config = config;
        t.columns = {"code", "L", "d", "witness_weight", "witness"};
        t.rows.push_back({code.name(), std::int64_t(code.extent() / 2), std::int64_t(d.distance),
                          std::int64_t(d.witness.support().size()), d.witness.to_string()});
        emit(t, g);
    });

    auto* region_cmd = app.add_subcommand("region", "region-level checks");
    region_cmd->fallthrough();
    region_cmd->require_subcommand(1);
    auto* corr_cmd = region_cmd->add_subcommand("correctable", "erasure-correctability of a set");
    corr_cmd->fallthrough();
    corr_cmd->add_option("--code", code_name, "builtin code name");
    corr_cmd->add_option("--L", L, "lattice side")->required();
    corr_cmd->add_option("--region", region_qubits, "comma-separated qubit indices")
        ->required()
        ->delimiter(',');
    corr_cmd->callback([&] {
        auto code = build_code(code_name, L);
        for (auto q : region_qubits)
            if (q >= code.num_qubits())
                throw ValidationError("region index " + std::to_string(q) + " out of range");
        Region region(region_qubits);
        ResultTable t;
        t.subcommand = "region correctable";
        std::string idx;
        for (std::size_t i = 0; i < region.qubits().size(); ++i)
            idx += (i ? ";" : "") + std::to_string(region.qubits()[i]);
        t.config = "code=" + code_name + ",L=" + std::to_string(L) + ",region=" + idx;
        t.columns = {"code", "L", "region_size", "correctable"};
        t.rows.push_back({code.name(), std::int64_t(L), std::int64_t(region.size()),
                          is_correctable(code, region)});
        emit(t, g);
    });

    auto* clean_cmd = app.add_subcommand("clean", "push a logical off a cube");
    clean_cmd->fallthrough();
    clean_cmd->add_option("--code", code_name, "builtin code name");
    clean_cmd->add_option("--L", L, "lattice side")->required();
    clean_cmd->add_option("--logical", logical_name, "X<i> or Z<i>, 1-based");
    clean_cmd->add_option("--cube-center", cube_center, "doubled-lattice coordinates")
        ->required()
        ->delimiter(',');
    clean_cmd->add_option("--cube-size", cube_size, "cube side length")->required();
    clean_cmd->callback([&] {
        auto code = build_code(code_name, L);
        if (cube_center.size() != code.coords()[0].size())
            throw ValidationError("cube-center needs " +
                                  std::to_string(code.coords()[0].size()) + " coordinates");
        auto rep = logical_by_name(code, logical_name);
        auto cube = cube_region(code.coords(), code.extent(), cube_center, cube_size);
        auto cleaned = clean(code, rep, cube);
        ResultTable t;
        t.subcommand = "clean";
        t.config = "code=" + code_name + ",L=" + std::to_string(L) + ",logical=" + logical_name +
                   ",cube-center=" + join_ints(cube_center, ';') +
                   ",cube-size=" + std::to_string(cube_size);
        t.columns = {"code", "L", "logical", "R", "original", "cleaned"};
        t.rows.push_back({code.name(), std::int64_t(L), logical_name, std::int64_t(cube_size),
                          rep.to_string(), cleaned.to_string()});
        emit(t, g);
    });

    auto* lemma_cmd = app.add_subcommand("lemma1-sweep", "R* sweep over cube sizes");
    lemma_cmd->fallthrough();
    lemma_cmd->add_option("--code", code_name, "builtin code name");
    lemma_cmd->add_option("--L", l_range, "lattice side or range lo..hi")->required();
    lemma_cmd->callback([&] {
        auto sizes = parse_lattice_range(l_range);
        ResultTable t;
        t.subcommand = "lemma1-sweep";
        t.config = "code=" + code_name + ",L=" + l_range;
        t.columns = {"code", "L", "R", "all_correctable", "num_cubes_tested", "R_star"};
        for (int side : sizes) {
            auto code = build_code(code_name, side);
            auto sweep = correctable_cube_sweep(code);
            for (const auto& row : sweep.rows)
                t.rows.push_back({code.name(), std::int64_t(side), std::int64_t(row.R),
                                  row.all_correctable, std::int64_t(row.num_cubes_tested),
                                  std::int64_t(sweep.r_star)});
        }
        emit(t, g);
    });

    auto* light_cmd = app.add_subcommand("encode-lightcone", "truncation dichotomy rows");
    light_cmd->fallthrough();
    light_cmd->add_option("--code", code_name, "builtin code name (toric2d only)");
    light_cmd->add_option("--L", L, "lattice side")->required();
    light_cmd->add_option("--encoder", encoder_name, "preparation circuit family");
    light_cmd->add_option("--depth-fraction", depth_fraction,
                          "truncate to this fraction of full depth; omit to sweep all depths");
    light_cmd->add_option("--placements", placements, "number of random seed-pair anchors");
    light_cmd->callback([&] {
        if (code_name != "toric2d")
            throw ValidationError("encode-lightcone runs on the 2d code");
        if (encoder_name != "staircase")
            throw ValidationError("unknown encoder '" + encoder_name + "'");
        if (depth_fraction > 1.0)
            throw ValidationError("depth-fraction must be at most 1");
        ResultTable t;
        t.subcommand = "encode-lightcone";
        t.config = "code=" + code_name + ",L=" + std::to_string(L) +
                   ",encoder=" + encoder_name + ",depth-fraction=" +
                   (depth_fraction < 0 ? std::string("all") : format_cell(depth_fraction)) +
                   ",placements=" + std::to_string(placements) +
                   ",seed=" + std::to_string(g.seed);
        t.columns = {"L", "depth", "R", "dBA", "cone_hits_A", "D_full", "D_loc"};
        for (std::size_t pl = 0; pl < placements; ++pl) {
            Rng rng = Rng::for_trial(g.seed, pl);
            int a0 = int(rng.next_below(std::size_t(L)));
            int b0 = int(rng.next_below(std::size_t(L)));
            auto e = make_lightcone_experiment(L, a0, b0);
            std::size_t full = e.encoder.circuit.depth();
            std::vector<std::size_t> depths;
            if (depth_fraction < 0)
                for (std::size_t d = 0; d <= full; ++d) depths.push_back(d);
            else
                depths.push_back(std::size_t(depth_fraction * double(full)));
            for (auto depth : depths) {
                auto row = run_lightcone_row(e, depth);
                t.rows.push_back({std::int64_t(L), std::int64_t(row.depth),
                                  std::int64_t(e.enclosure.radius),
                                  std::int64_t(e.enclosure.distance_ba),
                                  std::int64_t(row.cone_hits_a), std::int64_t(row.d_full),
                                  std::int64_t(row.d_loc)});
            }
        }
        emit(t, g);
    });

    auto* prep_cmd = app.add_subcommand("prep-dissipative", "defect-removal trials");
    prep_cmd->fallthrough();
    prep_cmd->add_option("--L", L, "lattice side")->required();
    prep_cmd->add_option("--dynamics", dynamics, "sweep or diffusive");
    prep_cmd->add_option("--trials", trials, "number of independent trials");
    prep_cmd->callback([&] {
        Dynamics dyn = dynamics_from_name(dynamics);
        ResultTable t;
        t.subcommand = "prep-dissipative";
        t.config = "L=" + std::to_string(L) + ",dynamics=" + dynamics +
                   ",trials=" + std::to_string(trials) + ",seed=" + std::to_string(g.seed);
        t.columns = {"L", "dynamics", "trial", "seed", "initial_defects", "steps_to_clear"};
        for (std::size_t trial = 0; trial < trials; ++trial) {
            auto r = run_defect_trial(L, dyn, g.seed, trial);
            t.rows.push_back({std::int64_t(L), std::string(dynamics_name(dyn)),
                              std::int64_t(trial), r.seed, std::int64_t(r.initial_defects),
                              std::int64_t(r.steps_to_clear)});
        }
        emit(t, g);
    });

    auto* unc_cmd = app.add_subcommand("uncertainty", "logical entropy pairs on ground states");
    unc_cmd->fallthrough();
    unc_cmd->add_option("--code", code_name, "builtin code name (toric2d only)");
    unc_cmd->add_option("--L", L, "lattice side (dense simulation, small L)");
    unc_cmd->add_option("--samples", samples, "number of random ground states");
    unc_cmd->callback([&] {
        if (code_name != "toric2d")
            throw ValidationError("uncertainty runs on the 2d code");
        auto frame = make_logical_frame(L == 0 ? 2 : L);
        ResultTable t;
        t.subcommand = "uncertainty";
        t.config = "code=" + code_name + ",L=" + std::to_string(L == 0 ? 2 : L) +
                   ",samples=" + std::to_string(samples) + ",seed=" + std::to_string(g.seed);
        t.columns = {"sample", "H1", "H2", "bound", "eq5_sum"};
        for (std::size_t sample = 0; sample < samples; ++sample) {
            auto row = run_uncertainty_sample(frame, sample, g.seed);
            t.rows.push_back(
                {std::int64_t(row.sample), row.h1, row.h2, row.bound, row.eq5_sum});
        }
        emit(t, g);
    });

    auto* corr2_cmd = app.add_subcommand("prep-correlations", "two-strip winding statistics");
    corr2_cmd->fallthrough();
    corr2_cmd->add_option("--L", L, "lattice side")->required();
    corr2_cmd->add_option("--encoder", encoder_name, "preparation circuit family");
    corr2_cmd->add_option("--depth-fraction", depth_fraction,
                          "truncate to this fraction of full depth; omit to sweep all depths");
    corr2_cmd->add_option("--separation-fraction", separation_fraction,
                          "strip separation as a fraction of the torus width");
    corr2_cmd->callback([&] {
        if (encoder_name != "staircase")
            throw ValidationError("unknown encoder '" + encoder_name + "'");
        if (depth_fraction > 1.0)
            throw ValidationError("depth-fraction must be at most 1");
        auto e = make_correlation_experiment(L, separation_fraction);
        std::size_t full = e.encoder.circuit.depth();
        std::vector<std::size_t> depths;
        if (depth_fraction < 0)
            for (std::size_t d = 0; d <= full; ++d) depths.push_back(d);
        else
            depths.push_back(std::size_t(depth_fraction * double(full)));
        ResultTable t;
        t.subcommand = "prep-correlations";
        t.config = "L=" + std::to_string(L) + ",encoder=" + encoder_name + ",depth-fraction=" +
                   (depth_fraction < 0 ? std::string("all") : format_cell(depth_fraction)) +
                   ",separation-fraction=" + format_cell(separation_fraction);
        t.columns = {"L",    "depth", "separation", "cones_disjoint", "corr",
                     "H1",   "H2",    "Hjoint",     "mutual_info"};
        for (auto depth : depths) {
            auto row = run_correlation_row(e, depth);
            t.rows.push_back({std::int64_t(L), std::int64_t(row.depth),
                              std::int64_t(e.separation), row.cones_disjoint, row.corr, row.h1,
                              row.h2, row.hjoint, row.mutual_info});
        }
        emit(t, g);
    });

    auto* sum_cmd = app.add_subcommand("summary", "aggregate result files to the console");
    sum_cmd->fallthrough();
    sum_cmd->add_option("paths", summary_paths, "CSV files produced by this tool")
        ->required()
        ->expected(-1);
    sum_cmd->callback([&] { run_summary(summary_paths); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (dynamic_cast<const BudgetError*>(&e)) return 4;
        if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const SetupError*>(&e) ||
            dynamic_cast<const ParseError*>(&e) ||
            dynamic_cast<const CleaningObstruction*>(&e))
            return 3;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
