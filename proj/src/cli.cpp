#include "waring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "waring/bsets.hpp"
#include "waring/core.hpp"
#include "waring/errors.hpp"
#include "waring/heur.hpp"
#include "waring/io.hpp"
#include "waring/nstar.hpp"
#include "waring/repfind.hpp"
#include "waring/sieve.hpp"

namespace waring::cli {

namespace {

using nlohmann::json;

struct Common {
    bool json = false;
    std::string config_path;
    std::string ram_cap;
    unsigned threads = 0;
    Config cfg;

    SieveOptions sieve() const { return {cfg.ram_cap, cfg.threads}; }
};

json set_meta(const BSet& s) {
    json j{{"k", s.k}, {"j", s.j}, {"limit", s.limit}, {"complete", s.complete}, {"count", s.size()}};
    j["max"] = s.empty() ? json(nullptr) : json(s.max());
    return j;
}

// Where `sieve` writes by default and `bset` looks for a saved sieve.
std::filesystem::path cache_path(const Config& cfg, unsigned k, unsigned j, std::uint64_t limit, bool at_most) {
    return std::filesystem::path(cfg.cache_dir) / ("sieve-k" + std::to_string(k) + (at_most ? "-upto" : "-j") +
                                                   std::to_string(j) + "-n" + std::to_string(limit) + ".wrs");
}

void print_lines(std::ostream& out, const std::vector<std::uint64_t>& v) {
    for (auto x : v) out << x << '\n';
}

json rep_json(const Representation& r) { return json{{"j", r.j()}, {"k", r.k}, {"parts", r.parts}}; }

std::string rep_text(const Representation& r) {
    std::ostringstream s;
    for (std::size_t i = 0; i < r.parts.size(); ++i) s << (i ? " " : "") << r.parts[i];
    return s.str();
}

// "2,5;3,5;4,5" -> {(2,5),(3,5),(4,5)}
std::vector<std::pair<unsigned, unsigned>> parse_pairs(const std::string& text) {
    std::vector<std::pair<unsigned, unsigned>> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        unsigned a = 0, b = 0;
        char comma = 0;
        std::istringstream f(item);
        if (!(f >> a >> comma >> b) || comma != ',') throw CLI::ValidationError("--pairs", "expected j,k;j,k;...");
        out.emplace_back(a, b);
    }
    if (out.empty()) throw CLI::ValidationError("--pairs", "empty pair list");
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sums of exactly j positive k-th powers: sieves, B-sets, n* certificates, heuristics", "waring"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json, "Emit JSON instead of decimal lines");
    app.add_option("--config", common.config_path, "key=value config file (default: $WARING_CONFIG)");
    app.add_option("--ram-cap", common.ram_cap, "RAM cap, e.g. 8G (overrides config)");
    app.add_option("--threads", common.threads, "Worker threads (0 = hardware)");

    int status = kSuccess;
    std::function<void()> action;

    // sieve
    unsigned k = 0, j = 0, jmax = 0, d = 0, stages = 4;
    std::uint64_t limit = 0, n = 0, lo = 0, hi = 0, budget = 0;
    std::string out_path, base_path, bfile_path, classifier = "sieve";
    bool at_most = false;

    auto* sieve_cmd = app.add_subcommand("sieve", "Build a (j,k) sieve and save it");
    sieve_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(1u, 64u));
    sieve_cmd->add_option("--j", j, "Number of parts")->required()->check(CLI::Range(1u, 1u << 20));
    sieve_cmd->add_option("--limit", limit, "Exclusive bound N")->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
    sieve_cmd->add_option("--out", out_path, "Output sieve file (default: under cache_dir)");
    sieve_cmd->add_flag("--at-most", at_most, "Union over 1..j parts");
    sieve_cmd->callback([&] {
        action = [&] {
            auto s = at_most ? sieve_at_most(k, j, limit, common.sieve()) : sieve_exact(k, j, limit, common.sieve());
            if (out_path.empty()) {
                auto p = cache_path(common.cfg, k, j, limit, at_most);
                std::filesystem::create_directories(p.parent_path());
                out_path = p.string();
            }
            save_sieve(out_path, s);
            std::uint64_t c = s.bits().count();
            if (common.json)
                out << json{{"k", k}, {"j", j}, {"limit", limit}, {"at_most", at_most}, {"representable", c},
                            {"path", out_path}}.dump()
                    << '\n';
            else
                out << "# k=" << k << " j=" << j << " limit=" << limit << " representable=" << c << " -> " << out_path
                    << '\n';
        };
    });

    auto* bset_cmd = app.add_subcommand("bset", "Numbers below the limit that are not (j,k)-representable");
    bset_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(1u, 64u));
    bset_cmd->add_option("--j", j, "Number of parts")->required()->check(CLI::Range(1u, 1u << 20));
    bset_cmd->add_option("--limit", limit, "Exclusive bound N")->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
    bset_cmd->add_option("--base", base_path, "Decimal-lines file with B^k; emits the reduced tail instead");
    bset_cmd->add_option("--sieve", out_path, "Read the sieve from this file instead of computing it");
    bset_cmd->callback([&] {
        action = [&] {
            if (out_path.empty()) {
                auto cached = cache_path(common.cfg, k, j, limit, false);
                if (std::filesystem::exists(cached)) out_path = cached.string();
            }
            RepSieve s = out_path.empty() ? sieve_exact(k, j, limit, common.sieve()) : load_sieve(out_path);
            if (s.k() != k || s.j() != j || s.limit() != limit)
                throw PreconditionError("sieve file does not hold the requested (k, j, limit)");
            BSet b = extract_bset(s);
            if (!base_path.empty()) {
                BSet base{k, 0, 0, load_decimal_lines(base_path), true};
                b = reduce(b, base);
            }
            if (common.json) {
                json o = set_meta(b);
                o["reduced"] = !base_path.empty();
                o["elements"] = b.elements;
                out << o.dump() << '\n';
            } else {
                print_lines(out, b.elements);
            }
        };
    });

    auto* stab_cmd = app.add_subcommand("stabilize", "Advance j until the B-set stabilizes");
    stab_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(2u, 63u));
    stab_cmd->add_option("--limit", limit, "Exclusive bound N")->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
    stab_cmd->add_option("--jmax", jmax, "Largest j to try")->required()->check(CLI::Range(1u, 1u << 20));
    stab_cmd->add_option("--out", out_path, "Write B^k as decimal lines here");
    stab_cmd->callback([&] {
        action = [&] {
            auto r = stabilize(k, limit, jmax, common.sieve());
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                print_lines(f, r.base.elements);
                if (!f) throw FormatError("cannot write " + out_path);
            }
            if (common.json) {
                json o = set_meta(r.base);
                o["stabilized"] = r.stabilized;
                o["j"] = r.j;
                if (r.verdict) {
                    const auto& v = *r.verdict;
                    o["verdict"] = {{"m", v.m}, {"condition1", v.condition1}, {"condition2", v.condition2},
                                    {"floor_lhs", v.floor_lhs}, {"floor_rhs", v.floor_rhs}};
                }
                if (!r.base.empty()) {
                    auto st = bset_stats(r.base);
                    o["a_k"] = st.a;
                    o["b_k"] = st.b;
                }
                o["elements"] = r.base.elements;
                out << o.dump() << '\n';
            } else if (r.stabilized) {
                const auto& v = *r.verdict;
                auto st = bset_stats(r.base);
                out << std::boolalpha << "# stabilized k=" << k << " j=" << v.j << " m=" << v.m << " condition1=" << v.condition1
                    << " condition2=" << v.condition2 << " (" << v.floor_lhs << " = " << v.floor_rhs << ")\n";
                out << "# a_k=" << st.a << " b_k=" << st.b << '\n';
                print_lines(out, r.base.elements);
            } else {
                out << "# not stabilized up to j=" << r.j << " below limit " << limit << '\n';
            }
            if (!r.stabilized) status = kVerificationFailure;
        };
    });

    auto* repr_cmd = app.add_subcommand("repr", "Find a representation of n as j positive k-th powers");
    repr_cmd->add_option("--n", n, "Target")->required();
    repr_cmd->add_option("--j", j, "Number of parts")->required()->check(CLI::Range(1u, 1u << 20));
    repr_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(1u, 64u));
    repr_cmd->add_option("--budget", budget, "Node budget (default from config)");
    repr_cmd->callback([&] {
        action = [&] {
            if (n < j) throw CLI::ValidationError("--n", "n must be >= j");
            auto prune = make_prune_sieve(k, n, 4, common.sieve());
            SearchOptions so{prune ? &*prune : nullptr, budget ? budget : common.cfg.node_budget};
            auto r = find_representation(n, j, k, so);
            if (common.json) {
                json o{{"n", n}, {"j", j}, {"k", k}, {"nodes", r.nodes}};
                o["status"] = r.status == SearchStatus::found  ? "found"
                              : r.status == SearchStatus::none ? "none"
                                                               : "inconclusive";
                if (r.representation) o["parts"] = r.representation->parts;
                out << o.dump() << '\n';
            } else if (r.status == SearchStatus::found) {
                out << rep_text(*r.representation) << '\n';
            } else if (r.status == SearchStatus::none) {
                out << "none\n";
            } else {
                out << "inconclusive: node budget exhausted\n";
            }
            if (r.status == SearchStatus::budget_exhausted) status = kVerificationFailure;
        };
    });

    auto* nstar_cmd = app.add_subcommand("nstar", "Search and verify n* candidates");
    nstar_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(1u, 64u));
    nstar_cmd->add_option("--d", d, "Smallest part count")->required()->check(CLI::Range(1u, 1u << 20));
    nstar_cmd->add_option("--lo", lo, "Window lower bound (exclusive)")->required();
    nstar_cmd->add_option("--hi", hi, "Window upper bound (exclusive)")->required();
    nstar_cmd->add_option("--jmax", jmax, "Verify up to this j (default G(k)+d)");
    nstar_cmd->add_option("--stages", stages, "Sieve stages d..d+stages-1")->check(CLI::Range(1u, 64u));
    nstar_cmd->add_option("--budget", budget, "Node budget per representation");
    nstar_cmd->callback([&] {
        action = [&] {
            if (lo >= hi) throw CLI::ValidationError("--lo", "need lo < hi");
            unsigned top = jmax;
            if (top == 0) top = static_cast<unsigned>(known_bounds(k).G.value) + d;
            auto cands = search_candidates(k, d, lo, hi, stages, common.sieve());
            auto reports = verify_candidates(cands, k, d, top, budget ? budget : common.cfg.node_budget, common.sieve());
            std::optional<std::uint64_t> best;
            for (const auto& r : reports)
                if (r.status == CandidateStatus::verified) {
                    best = r.n;
                    break;
                }
            if (common.json) {
                json o{{"k", k}, {"d", d}, {"lo", lo}, {"hi", hi}, {"jmax", top}, {"candidates", cands}};
                json arr = json::array();
                for (const auto& r : reports) {
                    json e{{"n", r.n}, {"stage_reached", r.stage_reached}};
                    e["status"] = r.status == CandidateStatus::verified ? "verified"
                                  : r.status == CandidateStatus::failed ? "failed"
                                                                        : "inconclusive";
                    if (r.certificate) {
                        json reps = json::array();
                        for (const auto& rep : r.certificate->representations) reps.push_back(rep_json(rep));
                        e["representations"] = reps;
                    }
                    arr.push_back(e);
                }
                o["reports"] = arr;
                o["minimal_verified"] = best ? json(*best) : json(nullptr);
                out << o.dump() << '\n';
            } else {
                out << "# candidates (k=" << k << ", d=" << d << ", window (" << lo << "," << hi << ")): " << cands.size()
                    << '\n';
                for (const auto& r : reports) {
                    out << r.n << ' '
                        << (r.status == CandidateStatus::verified ? "verified"
                            : r.status == CandidateStatus::failed ? "failed"
                                                                  : "inconclusive")
                        << " j<=" << r.stage_reached << '\n';
                    if (r.certificate)
                        for (const auto& rep : r.certificate->representations)
                            out << "#   j=" << rep.j() << ": " << rep_text(rep) << '\n';
                }
                out << "# minimal verified: " << (best ? std::to_string(*best) : std::string("none")) << '\n';
            }
            if (!best) status = kVerificationFailure;
        };
    });

    // heur
    auto* heur_cmd = app.add_subcommand("heur", "Heuristic density model");
    heur_cmd->require_subcommand(1);
    std::string method = "quadrature", pairs_text;
    double tol = 0, point = 0, lower = 0;
    auto method_of = [&] { return method == "monte-carlo" ? VolumeMethod::monte_carlo : VolumeMethod::quadrature; };
    auto vopts = [&] {
        VolumeOptions o;
        o.mc_samples = common.cfg.mc_samples;
        o.mc_seed = common.cfg.mc_seed;
        return o;
    };

    auto* vol_cmd = heur_cmd->add_subcommand("volume", "V(j,k)");
    vol_cmd->add_option("--j", j)->required()->check(CLI::Range(1u, 64u));
    vol_cmd->add_option("--k", k)->required()->check(CLI::Range(1u, 64u));
    vol_cmd->add_option("--method", method)->check(CLI::IsMember({"quadrature", "monte-carlo"}));
    vol_cmd->add_option("--tol", tol, "Absolute tolerance")->check(CLI::PositiveNumber);
    vol_cmd->callback([&] {
        action = [&] {
            auto v = volume(j, k, method_of(), tol > 0 ? tol : common.cfg.quad_tol, vopts());
            json o{{"j", j}, {"k", k}, {"value", v.value}, {"error", v.error}, {"method", to_string(v.method)}};
            if (v.method == VolumeMethod::monte_carlo) {
                o["samples"] = v.samples;
                o["seed"] = v.seed;
            }
            if (common.json) out << o.dump() << '\n';
            else out << std::setprecision(10) << v.value << " +/- " << v.error << " (" << to_string(v.method) << ")\n";
        };
    });

    auto* dens_cmd = heur_cmd->add_subcommand("density", "Probability that n is (j,k)-representable");
    dens_cmd->add_option("--n", point)->required()->check(CLI::Range(1.0, 1e308));
    dens_cmd->add_option("--j", j)->required()->check(CLI::Range(1u, 64u));
    dens_cmd->add_option("--k", k)->required()->check(CLI::Range(1u, 64u));
    dens_cmd->callback([&] {
        action = [&] {
            HeuristicModel model(k, {j}, VolumeMethod::quadrature, common.cfg.quad_tol);
            double p = density(point, j, k, model);
            if (common.json)
                out << json{{"n", point}, {"j", j}, {"k", k}, {"constant", model.density_constant(j)}, {"density", p}}.dump()
                    << '\n';
            else
                out << std::setprecision(10) << p << " (= " << model.density_constant(j) << " * n^(" << j << "/" << k
                    << " - 1))\n";
        };
    });

    auto* exp_cmd = heur_cmd->add_subcommand("expect", "Expected count of integers >= b representable in every listed way");
    exp_cmd->add_option("--b", lower, "Lower bound b")->required()->check(CLI::Range(1.0, 1e308));
    exp_cmd->add_option("--pairs", pairs_text, "j,k;j,k;...")->required();
    exp_cmd->callback([&] {
        action = [&] {
            auto pairs = parse_pairs(pairs_text);
            unsigned kk = pairs.front().second;
            std::vector<unsigned> js;
            for (auto [pj, pk] : pairs) {
                if (pk != kk) throw CLI::ValidationError("--pairs", "all pairs must share one k");
                js.push_back(pj);
            }
            HeuristicModel model(kk, js, VolumeMethod::quadrature, common.cfg.quad_tol);
            auto r = expected_coincidences(lower, pairs, model);
            std::ostringstream e;
            e << r.exponent.E;
            if (common.json) {
                json o{{"b", lower}, {"E", e.str()}, {"regime", to_string(r.exponent.regime)}, {"constant", r.constant}};
                o["value"] = r.value ? json(*r.value) : json(nullptr);
                out << o.dump() << '\n';
            } else {
                out << "# E = " << e.str() << " (" << to_string(r.exponent.regime) << "), C = " << std::setprecision(10)
                    << r.constant << '\n';
                if (r.value) out << *r.value << '\n';
                else out << "inf\n";
            }
        };
    });

    auto* oeis_cmd = app.add_subcommand("verify-oeis", "Compare a b-file with the computed non-representable set");
    oeis_cmd->add_option("--bfile", bfile_path)->required()->check(CLI::ExistingFile);
    oeis_cmd->add_option("--k", k)->required()->check(CLI::Range(1u, 64u));
    oeis_cmd->add_option("--j", j)->required()->check(CLI::Range(1u, 1u << 20));
    oeis_cmd->add_option("--limit", limit)->required()->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
    oeis_cmd->add_flag("--at-most", at_most, "Compare against sums of at most j powers");
    oeis_cmd->add_option("--classifier", classifier, "sieve | four-squares")
        ->check(CLI::IsMember({"sieve", "four-squares"}));
    oeis_cmd->callback([&] {
        action = [&] {
            auto entries = load_bfile(bfile_path);
            std::vector<std::uint64_t> computed;
            if (classifier == "four-squares") {
                if (k != 2 || j != 4 || at_most) throw CLI::ValidationError("--classifier", "four-squares needs k=2 j=4");
                for (std::uint64_t x = 1; x < limit; ++x)
                    if (classify_four_squares(x)) computed.push_back(x);
            } else {
                auto s = at_most ? sieve_at_most(k, j, limit, common.sieve()) : sieve_exact(k, j, limit, common.sieve());
                computed = extract_bset(s).elements;
            }
            auto cmp = compare_with_bfile(entries, computed, limit);
            if (common.json) {
                json o{{"match", cmp.match}, {"limit", limit}, {"compared", cmp.compared}, {"classifier", classifier}};
                o["first_mismatch"] = cmp.first_mismatch ? json(*cmp.first_mismatch) : json(nullptr);
                if (cmp.first_mismatch) o["missing_from_computed"] = cmp.missing_from_computed;
                out << o.dump() << '\n';
            } else if (cmp.match) {
                out << "match below limit " << limit << " (" << cmp.compared << " values)\n";
            } else {
                out << "mismatch at " << *cmp.first_mismatch
                    << (cmp.missing_from_computed ? " (in b-file only)" : " (computed only)") << '\n';
            }
            if (!cmp.match) status = kVerificationFailure;
        };
    });

    auto* bounds_cmd = app.add_subcommand("bounds", "Transcribed Waring constants for k");
    bounds_cmd->add_option("--k", k)->required();
    bounds_cmd->callback([&] {
        action = [&] {
            auto b = known_bounds(k);
            auto tv = [](const TaggedValue& t) { return json{{"value", t.value}, {"tag", to_string(t.tag)}}; };
            json o{{"k", b.k}, {"g", tv(b.g)}, {"G", tv(b.G)}, {"G1", tv(b.G1)}, {"g1", tv(b.g1)},
                   {"g1_listed", b.g1_listed}};
            if (b.G1_nstar) o["G1_nstar_table"] = tv(*b.G1_nstar);
            if (b.nstar) o["nstar"] = *b.nstar;
            if (b.d) o["d"] = *b.d;
            if (b.G_plus_d) o["G_plus_d"] = *b.G_plus_d;
            if (b.at_most_threshold) {
                o["at_most_threshold"] = tv(*b.at_most_threshold);
                o["at_most_parts"] = *b.at_most_parts;
            }
            if (common.json) {
                out << o.dump() << '\n';
            } else {
                for (auto& [key, val] : o.items()) out << key << ' ' << val.dump() << '\n';
            }
        };
    });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        common.cfg = common.config_path.empty() ? load_config_from_env() : [&] {
            std::ifstream in(common.config_path);
            if (!in) throw FormatError("cannot open config " + common.config_path);
            return parse_config(in);
        }();
        if (!common.ram_cap.empty()) common.cfg.ram_cap = parse_size(common.ram_cap);
        if (common.threads) common.cfg.threads = common.threads;
        if (action) action();
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceRefusal;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const NotFoundError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CertificateError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }
    return status;
}

}  // namespace waring::cli
