// twofold: two-fold automorphism structure, canonical double-cover census
// and the graph-family constructions behind one graph6/JSON CLI.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twofold/constructions.hpp"
#include "twofold/double_cover.hpp"
#include "twofold/errors.hpp"
#include "twofold/graph_io.hpp"
#include "twofold/tf_iso.hpp"
#include "twofold/verify.hpp"

using nlohmann::json;
using namespace twofold;

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kCliInputError = 2, kCliResourceError = 3, kCliVerifyError = 4 };

std::string read_input(const std::string& spec) {
    if (spec == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw InputError("cannot open file: " + spec.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return spec;
}

std::string first_line(const std::string& text) {
    auto nl = text.find('\n');
    std::string line = nl == std::string::npos ? text : text.substr(0, nl);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    return line;
}

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json report_envelope(const std::string& command, const std::string& input, const Timer& timer,
                     json result) {
    return json{{"command", command},
                {"version", kVersion},
                {"input_digest", fnv1a_hex(input)},
                {"timing_ms", timer.ms()},
                {"result", std::move(result)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json cells_json(const std::vector<std::vector<int>>& cells) {
    json out = json::array();
    for (const auto& c : cells) out.push_back(c);
    return out;
}

json analyze_result(const Graph& g, const SearchLimits& limits) {
    json r;
    r["n"] = g.size();
    bool reduced = is_reduced(g);
    r["reduced"] = reduced;
    r["connected"] = is_connected(g);
    r["bipartite"] = is_bipartite(g);
    StabilityVerdict verdict = is_stable(g, limits);
    r["aut_order"] = verdict.aut_order;
    r["aut_pi_order"] = verdict.aut_pi_order ? json(*verdict.aut_pi_order) : json(nullptr);
    r["inst"] = verdict.inst ? json(*verdict.inst) : json(nullptr);
    r["stable"] = verdict.kind == StabilityKind::kStable;
    switch (verdict.kind) {
        case StabilityKind::kStable: r["verdict"] = "stable"; break;
        case StabilityKind::kUnstable: r["verdict"] = "unstable"; break;
        case StabilityKind::kTriviallyUnstable: r["verdict"] = "trivially_unstable"; break;
    }
    r["reason"] = verdict.reason.empty() ? json(nullptr) : json(verdict.reason);
    if (reduced && !g.has_loop()) {
        TwoFoldStructure tfs = aut_pi(g, limits);
        r["ant_size"] = tfs.ant().size();
        r["ant0_size"] = tfs.ant0().size();
        r["orbit_cells"] = cells_json(tfs.orbits());
        r["refinement_cells"] = cells_json(tfs.refinement().partition.cells);
    } else {
        r["ant_size"] = nullptr;
        r["ant0_size"] = nullptr;
        r["orbit_cells"] = nullptr;
        r["refinement_cells"] = cells_json(ne_refinement(g).partition.cells);
    }
    return r;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

// group spec: built-in name or @file carrying the group JSON
FiniteGroup load_group(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return group_from_json(read_input(spec)).first;
    return group_by_name(spec);
}

GroupAutomorphism load_sigma(const FiniteGroup& g, const std::string& group_spec,
                             const std::string& sigma_spec) {
    if (sigma_spec == "json") {
        auto [grp, sigma] = group_from_json(read_input(group_spec));
        (void)grp;
        if (sigma.empty()) throw InputError("group JSON carries no sigma");
        return GroupAutomorphism::from_map(g, sigma);
    }
    return GroupAutomorphism::by_name(g, sigma_spec);
}

struct ConstructArgs {
    std::string family;
    std::string group;
    std::string sigma = "id";
    std::string gens;
    std::string set;
    std::string c_half;
    int param = 0;
    bool verify = false;
};

json construct_result(const ConstructArgs& args, const SearchLimits& limits) {
    LabeledGraph built{Graph(1), {"0"}};
    json extras;

    if (args.family == "r-skeleton") {
        built = skeleton_r(args.param);
        if (args.verify) {
            if (!ne_refinement(built.graph).partition.discrete())
                throw InternalError("r-skeleton: refinement did not reach singleton cells");
            if (automorphism_group(built.graph, limits).order() != 1)
                throw InternalError("r-skeleton: skeleton is not rigid");
        }
    } else if (args.family == "hsigma") {
        FiniteGroup h = load_group(args.group);
        GroupAutomorphism sigma = load_sigma(h, args.group, args.sigma);
        built = gamma_construction(h, sigma, parse_int_list(args.gens));
        if (args.verify) {
            if (!is_reduced(built.graph) || !is_connected(built.graph) ||
                is_bipartite(built.graph))
                throw InternalError("hsigma: output lost a required property");
            TwoFoldStructure tfs = aut_pi(built.graph, limits);
            if (tfs.aut_pi_order() != h.order())
                throw InternalError("hsigma: |Aut^pi| != |H|");
            extras["aut_pi_order"] = tfs.aut_pi_order();
            extras["aut_order"] = tfs.aut_order();
        }
    } else if (args.family == "gcay") {
        FiniteGroup h = load_group(args.group);
        built = gcay(h, load_sigma(h, args.group, args.sigma), parse_int_list(args.set));
    } else if (args.family == "achieve") {
        FiniteGroup h = load_group(args.group);
        GroupAutomorphism sigma = load_sigma(h, args.group, args.sigma);
        SemidirectZ2 sd = semidirect_z2(h, sigma);
        // C is named by the H-parts of its (h,1) members, expanded to classes
        auto classes = conjugacy_classes(sd.group);
        std::vector<int> c;
        for (int hpart : parse_int_list(args.c_half)) {
            int el = sd.encode(hpart, 1);
            for (const auto& cls : classes)
                if (std::find(cls.begin(), cls.end(), el) != cls.end())
                    c.insert(c.end(), cls.begin(), cls.end());
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        built = achievable_construction(h, sigma, c);
        if (args.verify) {
            TfCensus cen = census(built.graph, false, false, limits);
            std::vector<bool> seen(sd.group.order(), false);
            long long expected = 0;
            for (int el : c)
                if (!seen[el]) {
                    for (const auto& cls : classes)
                        if (std::find(cls.begin(), cls.end(), el) != cls.end())
                            for (int member : cls) seen[member] = true;
                    ++expected;
                }
            if (cen.class_count() != expected)
                throw InternalError("achieve: census class count differs from |C| classes");
            extras["class_count"] = cen.class_count();
        }
    } else if (args.family == "m") {
        built.graph = m_graph(args.param);
        built.labels.clear();
        for (int v = 1; v <= args.param; ++v) built.labels.push_back(std::to_string(v));
    } else if (args.family == "m0") {
        built.graph = m0_graph(args.param);
        built.labels = m0_labels(args.param);
        if (args.verify && automorphism_group(built.graph, limits).order() != 1)
            throw InternalError("m0: graph is not asymmetric");
    } else if (args.family == "grr-z2k") {
        built = grr_z2k(args.param);
        if (args.verify && !(local_graph(args.param) == m0_graph(args.param)))
            throw InternalError("grr-z2k: local structure disagrees with m0");
    } else if (args.family == "cayley") {
        FiniteGroup h = load_group(args.group);
        built = cayley(h, parse_int_list(args.set));
    } else {
        throw InputError("unknown family: " + args.family);
    }

    json r;
    r["family"] = args.family;
    r["n"] = built.graph.size();
    r["graph6"] = graph6_encode(built.graph);
    r["labels"] = built.labels;
    r["verified"] = args.verify;
    if (!extras.is_null()) r["checks"] = extras;
    return r;
}

json census_result(const Graph& g, bool loops, bool keep_all, const SearchLimits& limits,
                   bool& identities_ok) {
    TwoFoldStructure tfs = aut_pi(g, limits);
    TfCensus cen = census(tfs, loops, keep_all);
    IdentityReport idrep = verify_identities(tfs);

    json classes = json::array();
    for (const auto& cls : cen.classes) {
        json c;
        c["rep_psi"] = cen.psis[cls.rep].cycle_string();
        c["inst"] = cls.inst;
        c["size"] = cls.members.size();
        c["witness_aut_order"] = cls.witness_aut_order;
        if (!cls.witness.has_loop()) c["witness_graph6"] = graph6_encode(cls.witness);
        classes.push_back(std::move(c));
    }

    long long lhs = loops ? cen.ant_size : cen.ant0_size;
    long long rhs = 0;
    for (const auto& cls : cen.classes) rhs += cls.inst;
    identities_ok = idrep.all_ok();

    json r;
    r["base_graph6"] = graph6_encode(g);
    r["loops_included"] = loops;
    r["aut_pi_order"] = cen.aut_pi_order;
    r["ant_size"] = cen.ant_size;
    r["ant0_size"] = cen.ant0_size;
    r["class_count"] = cen.class_count();
    r["classes"] = std::move(classes);
    r["identities"] = json{{"lhs", lhs}, {"rhs", rhs}, {"ok", identities_ok}};
    if (keep_all) {
        json all = json::array();
        for (size_t i = 0; i < cen.psis.size(); ++i) {
            json w;
            w["psi"] = cen.psis[i].cycle_string();
            if (!cen.all_witnesses[i].has_loop())
                w["graph6"] = graph6_encode(cen.all_witnesses[i]);
            all.push_back(std::move(w));
        }
        r["witnesses"] = std::move(all);
    }
    return r;
}

json suite_json(const verify::SuiteResult& res) {
    json failures = json::array();
    for (const auto& f : res.failures)
        failures.push_back(
            json{{"graph6", f.graph6}, {"permutation", f.permutation}, {"detail", f.detail}});
    return json{{"suite", res.suite},
                {"checked", res.checked},
                {"passed", res.passed()},
                {"failures", std::move(failures)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-fold automorphisms, canonical double covers and TF-isomorphism census"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int threads = (int)std::thread::hardware_concurrency();
    uint64_t node_budget = 0;  // 0: built-in default or TWOFOLD_NODE_BUDGET
    app.add_option("--threads", threads, "worker threads for the search");
    app.add_option("--node-budget", node_budget, "backtracking node budget");

    std::string input = "-";
    std::string to_format = "graph6";
    bool loops = false, keep_all = false;
    int n_max = 6, samples = 100;
    uint32_t seed = 20240901;
    std::string suite, group_spec, sigma_spec, replay_file;
    ConstructArgs cargs;

    CLI::App* analyze = app.add_subcommand("analyze", "stability report for a graph");
    analyze->add_option("input", input, "graph6 string, @file, or - for stdin");

    CLI::App* construct = app.add_subcommand("construct", "emit a named graph family");
    construct
        ->add_option("family", cargs.family,
                     "r-skeleton | hsigma | gcay | achieve | m | m0 | grr-z2k | cayley")
        ->required();
    construct->add_option("param", cargs.param, "numeric parameter (n0 or k)");
    construct->add_option("--group", cargs.group, "built-in group name or @file JSON");
    construct->add_option("--sigma", cargs.sigma, "id | inv | conj:<g> | map:... | json");
    construct->add_option("--gens", cargs.gens, "comma-separated generator indices");
    construct->add_option("--set", cargs.set, "comma-separated connection set");
    construct->add_option("--c-half", cargs.c_half,
                          "H-parts of the achieved class representatives");
    construct->add_flag("--verify", cargs.verify, "run the family invariants before emitting");

    CLI::App* census_cmd = app.add_subcommand("census", "graphs sharing the double cover");
    census_cmd->add_option("input", input, "graph6 string, @file, or - for stdin");
    census_cmd->add_flag("--loops", loops, "include antimorphisms that create loops");
    census_cmd->add_flag("--keep-all", keep_all, "materialize every witness graph");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named property suite");
    verify_cmd->add_option("suite", suite,
                           "gamma | parity | square | balls | identities | oracle-sweep | "
                           "group-bounds");
    verify_cmd->add_option("target", group_spec,
                           "group spec for group-bounds, or a balls target (C:<n> | graph6)");
    verify_cmd->add_option("--sigma", sigma_spec, "sigma spec for group-bounds");
    verify_cmd->add_option("--n-max", n_max, "corpus size bound");
    verify_cmd->add_option("--samples", samples, "random sample count");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--replay", replay_file, "re-run a dumped counterexample file");

    CLI::App* convert = app.add_subcommand("convert", "re-serialize a graph");
    convert->add_option("input", input, "graph6 string, @file, or - for stdin");
    convert->add_option("--to", to_format, "graph6 | adj | dot");

    CLI11_PARSE(app, argc, argv);

    SearchLimits limits;
    limits.node_budget = node_budget;
    limits.threads = std::max(1, threads);

    Timer timer;
    try {
        if (*analyze) {
            std::string text = read_input(input);
            Graph g = graph6_decode(first_line(text));
            emit(report_envelope("analyze", text, timer, analyze_result(g, limits)));
            return kOk;
        }
        if (*construct) {
            emit(report_envelope("construct", cargs.family + "/" + cargs.group, timer,
                                 construct_result(cargs, limits)));
            return kOk;
        }
        if (*census_cmd) {
            std::string text = read_input(input);
            Graph g = graph6_decode(first_line(text));
            bool ok = false;
            json result = census_result(g, loops, keep_all, limits, ok);
            emit(report_envelope("census", text, timer, std::move(result)));
            return ok ? kOk : kCliVerifyError;
        }
        if (*verify_cmd) {
            verify::SuiteResult res;
            if (!replay_file.empty()) {
                json spec = json::parse(read_input("@" + replay_file));
                res = verify::replay(spec.at("suite").get<std::string>(),
                                     graph6_decode(spec.at("graph6").get<std::string>()), limits);
            } else if (suite == "gamma") {
                res = verify::gamma_suite(n_max, limits);
            } else if (suite == "parity") {
                res = verify::parity_suite(n_max, limits);
            } else if (suite == "square") {
                res = verify::square_suite(n_max, limits);
            } else if (suite == "balls") {
                if (!group_spec.empty()) {
                    // single named target: C:<n> or a graph6 string
                    Graph g = group_spec.rfind("C:", 0) == 0
                                  ? cycle_graph(std::stoi(group_spec.substr(2)))
                                  : graph6_decode(group_spec);
                    res = verify::replay("balls", g, limits);
                } else {
                    res = verify::balls_suite(n_max, samples, seed, limits);
                }
            } else if (suite == "identities") {
                res = verify::identities_suite(n_max, limits);
            } else if (suite == "oracle-sweep") {
                res = verify::oracle_suite(n_max, samples, seed, limits);
            } else if (suite == "group-bounds") {
                res = verify::group_bounds_suite(group_spec, sigma_spec);
            } else {
                throw InputError("unknown suite: " + suite);
            }
            emit(report_envelope("verify", suite, timer, suite_json(res)));
            return res.passed() ? kOk : kCliVerifyError;
        }
        if (*convert) {
            std::string text = read_input(input);
            Graph g;
            try {
                g = graph6_decode(first_line(text));
            } catch (const InputError&) {
                g = adjacency_text_decode(text);
            }
            if (to_format == "graph6")
                std::cout << graph6_encode(g) << "\n";
            else if (to_format == "adj")
                std::cout << adjacency_text_encode(g);
            else if (to_format == "dot")
                std::cout << dot_export(g);
            else
                throw InputError("unknown format: " + to_format);
            return kOk;
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kCliResourceError;
    } catch (const InternalError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kCliVerifyError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kCliInputError;
    }
    return kOk;
}
