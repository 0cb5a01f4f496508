// Command-line front end: analyze, construct, check, similar, orient, verify.
//
// Exit codes: 0 success/true, 1 false, 2 parse or usage error, 3 reducible input, 4 base mismatch,
// 5 cap exceeded.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <signings/signings.hpp>

using namespace signings;
using nlohmann::json;

namespace {

enum Exit : int { ok = 0, negative = 1, usage = 2, reducible = 3, mismatch = 4, cap = 5 };

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::invalid_argument:
    case ErrorKind::solver: return usage;
    case ErrorKind::reducible:
    case ErrorKind::no_closed_path: return reducible;
    case ErrorKind::base_mismatch:
    case ErrorKind::order_mismatch: return mismatch;
    case ErrorKind::cap_exceeded: return cap;
    }
    return usage;
}

struct Settings {
    bool json = false;
    std::size_t max_order = default_max_order;
    std::size_t support_cap = default_support_cap;
    std::size_t enum_cap = default_enumeration_cap;
};

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string join_ks(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

std::vector<int> diag_values(const SignDiagonal& d) { return {d.values().begin(), d.values().end()}; }

std::string format_diag(const SignDiagonal& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.order(); ++i) os << (i ? " " : "") << d[i];
    return os.str();
}

int cmd_analyze(const Settings& s, const std::string& path) {
    const NonnegMatrix a = load_nonneg_matrix(path, s.max_order);
    const AnalysisReport r = analyze(a);
    if (s.json) {
        json j{{"irreducible", r.irreducible}};
        if (!r.irreducible) j["components"] = r.components;
        if (r.period) {
            j["period"] = *r.period;
            j["ks"] = json::array();
            for (const auto& alpha : r.admissible)
                j["ks"].push_back({{"k", alpha.k()}, {"alpha", alpha.to_string()}});
            j["even_ks"] = r.even_ks;
            j["odd_ks"] = r.odd_ks;
            j["classes"] = r.cyclic->classes;
            j["block_sizes"] = r.cyclic->block_sizes;
            j["permutation"] = std::vector<std::size_t>(r.cyclic->perm.image().begin(), r.cyclic->perm.image().end());
        } else if (r.irreducible) {
            j["period"] = nullptr;
        }
        std::cout << j.dump(2) << '\n';
    } else if (!r.irreducible) {
        std::cout << "reducible; strongly connected components: " << format_components(r.components) << '\n';
    } else if (!r.period) {
        std::cout << "irreducible, period undefined (no closed path)\n";
    } else {
        const auto& cs = *r.cyclic;
        std::vector<long long> ks;
        for (const auto& alpha : r.admissible) ks.push_back(alpha.k());
        std::cout << "irreducible, p=" << *r.period << ", ks=" << join_ks(ks) << '\n';
        std::cout << "classes:";
        for (std::size_t t = 0; t < cs.classes.size(); ++t) std::cout << " V" << t << "={" << join(cs.classes[t], ",") << '}';
        std::cout << "\nblock sizes: (" << join(cs.block_sizes, ",") << ")\n";
        std::cout << "permutation: "
                  << join(std::vector<std::size_t>(cs.perm.image().begin(), cs.perm.image().end())) << '\n';
        std::cout << "alphas:";
        for (const auto& alpha : r.admissible) std::cout << ' ' << alpha.to_string();
        std::cout << '\n';
        if (*r.period == 1) std::cout << "alpha in {1,-1}\n";
        std::cout << "M(1,A) for k in " << join_ks(r.even_ks) << '\n';
        std::cout << "M(" << RotationFactor(1, static_cast<long long>(*r.period)).to_string() << ",A) for k in "
                  << join_ks(r.odd_ks) << '\n';
    }
    return r.irreducible ? ok : reducible;
}

int cmd_construct(const Settings& s, const std::string& path, long long k) {
    const NonnegMatrix a = load_nonneg_matrix(path, s.max_order);
    const IntMatrix b = realize(construct_witness(a, k));
    if (s.json) std::cout << matrix_to_json(b).dump() << '\n';
    else std::cout << format_matrix(b);
    return ok;
}

int cmd_check(const Settings& s, const std::string& path_a, const std::string& path_b, long long k) {
    auto base = std::make_shared<const NonnegMatrix>(load_nonneg_matrix(path_a, s.max_order));
    const Signing b = Signing::from_matrix(base, load_matrix(path_b, s.max_order));
    const MembershipResult r = membership(b, k);
    const RotationFactor alpha(k, static_cast<long long>(period(digraph_of(*base))));
    if (s.json) {
        json j{{"member", r.member}, {"k", k}, {"alpha", alpha.to_string()}};
        if (r.witness) j["delta"] = diag_values(*r.witness);
        std::cout << j.dump() << '\n';
    } else if (r.member) {
        std::cout << "member: yes, alpha=" << alpha.to_string() << "\ndelta: " << format_diag(*r.witness) << '\n';
    } else {
        std::cout << "member: no, alpha=" << alpha.to_string() << '\n';
    }
    return r.member ? ok : negative;
}

int cmd_similar(const Settings& s, const std::string& path1, const std::string& path2) {
    const IntMatrix b1 = load_matrix(path1, s.max_order);
    auto base = std::make_shared<const NonnegMatrix>(abs(b1));
    const Signing x = Signing::from_matrix(base, b1);
    const Signing y = Signing::from_matrix(base, load_matrix(path2, s.max_order));
    const auto delta = decide_diag_similar(x, y);
    if (s.json) {
        json j{{"similar", delta.has_value()}};
        if (delta) j["delta"] = diag_values(*delta);
        std::cout << j.dump() << '\n';
    } else if (delta) {
        std::cout << "similar\ndelta: " << format_diag(*delta) << '\n';
    } else {
        std::cout << "not similar\n";
    }
    return delta ? ok : negative;
}

std::vector<std::size_t> parse_set(const std::string& text) {
    std::vector<std::size_t> w;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.find_first_not_of(" ") == std::string::npos) continue;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(token, &used);
            if (v < 0 || token.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(token);
            w.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse, "invalid vertex '" + token + "' in --set");
        }
    }
    return w;
}

int cmd_orient(const Settings& s, const std::string& mode, const std::vector<std::string>& paths,
               const std::string& set) {
    auto need = [&](std::size_t count) {
        if (paths.size() != count)
            throw Error(ErrorKind::invalid_argument,
                        "orient " + mode + " expects " + std::to_string(count) + " file argument(s)");
    };
    if (mode == "bipartite" || mode == "canonical") {
        need(1);
        const Graph g = parse_graph(read_file(paths[0]));
        const auto bp = bipartition_of(g);
        if (!bp) {
            if (s.json) std::cout << json{{"bipartite", false}}.dump() << '\n';
            else std::cout << "not bipartite\n";
            return negative;
        }
        if (mode == "bipartite") {
            if (s.json) std::cout << json{{"bipartite", true}, {"I", bp->I}, {"J", bp->J}}.dump() << '\n';
            else std::cout << "I: " << join(bp->I) << "\nJ: " << join(bp->J) << '\n';
        } else {
            std::cout << format_orientation(canonical_orientation(g, *bp));
        }
        return ok;
    }
    if (mode == "switch") {
        need(1);
        const Orientation o = parse_orientation(read_file(paths[0]));
        std::cout << format_orientation(switch_orientation(o, parse_set(set)));
        return ok;
    }
    if (mode == "equivalent") {
        need(2);
        const Orientation o1 = parse_orientation(read_file(paths[0]));
        const Orientation o2 = parse_orientation(read_file(paths[1]));
        const auto w = switching_equivalent(o1, o2);
        if (s.json) {
            json j{{"equivalent", w.has_value()}};
            if (w) j["W"] = *w;
            std::cout << j.dump() << '\n';
        } else if (w) {
            std::cout << "switching-equivalent\nW: {" << join(*w, ",") << "}\n";
        } else {
            std::cout << "not switching-equivalent\n";
        }
        return w ? ok : negative;
    }
    throw Error(ErrorKind::invalid_argument, "unknown orient mode '" + mode + "'");
}

int cmd_verify(const Settings& s, VerifyOptions opts) {
    opts.support_cap = s.support_cap;
    opts.enumeration_cap = s.enum_cap;
    const VerifyReport report = run_verify(opts);
    if (s.json) {
        json j = json::array();
        for (const auto& p : report.properties) {
            json e{{"property", p.name}, {"passed", p.passed}, {"cases", p.cases}};
            if (!p.passed) e["counterexample"] = p.counterexample;
            j.push_back(std::move(e));
        }
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& p : report.properties) {
            std::cout << (p.passed ? "PASS " : "FAIL ") << p.name << " (" << p.cases << " cases)\n";
            if (!p.passed) std::cout << "counterexample:\n" << p.counterexample << '\n';
        }
    }
    return report.all_passed() ? ok : negative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signings of irreducible nonnegative matrices with rotated spectra"};
    app.require_subcommand(1);

    Settings settings;
    if (const char* env = std::getenv("SIGNINGS_MAX_N")) {
        try {
            settings.max_order = std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "error: SIGNINGS_MAX_N must be a positive integer\n";
            return usage;
        }
    }
    app.add_flag("--json", settings.json, "Machine-readable output");
    app.add_option("--max-n", settings.max_order, "Largest matrix order accepted")->capture_default_str();
    app.add_option("--support-cap", settings.support_cap, "Largest support for exhaustive signing search")
        ->capture_default_str();
    app.add_option("--enum-cap", settings.enum_cap, "Largest order for class enumeration")->capture_default_str();

    std::string path_a, path_b;
    long long k = 0;
    std::function<int()> action;

    auto* analyze_cmd = app.add_subcommand("analyze", "Irreducibility, period, cyclic classes, admissible k");
    analyze_cmd->add_option("matrix", path_a, "Nonnegative matrix file")->required();
    analyze_cmd->callback([&] { action = [&] { return cmd_analyze(settings, path_a); }; });

    auto* construct_cmd = app.add_subcommand("construct", "Print a signing B with sp(B) = e^(i*pi*k/p) sp(A)");
    construct_cmd->add_option("matrix", path_a, "Nonnegative matrix file")->required();
    construct_cmd->add_option("--k,-k", k, "Rotation index in {0,...,2p-1}")->required();
    construct_cmd->callback([&] { action = [&] { return cmd_construct(settings, path_a, k); }; });

    auto* check_cmd = app.add_subcommand("check", "Decide whether B lies in M(e^(i*pi*k/p), A)");
    check_cmd->add_option("matrix", path_a, "Nonnegative matrix file A")->required();
    check_cmd->add_option("signing", path_b, "Signed matrix file B")->required();
    check_cmd->add_option("--k,-k", k, "Rotation index in {0,...,2p-1}")->required();
    check_cmd->callback([&] { action = [&] { return cmd_check(settings, path_a, path_b, k); }; });

    auto* similar_cmd = app.add_subcommand("similar", "Decide {-1,1}-diagonal similarity of two signings");
    similar_cmd->add_option("first", path_a, "Signed matrix file")->required();
    similar_cmd->add_option("second", path_b, "Signed matrix file")->required();
    similar_cmd->callback([&] { action = [&] { return cmd_similar(settings, path_a, path_b); }; });

    std::string mode, set;
    std::vector<std::string> graph_paths;
    auto* orient_cmd = app.add_subcommand("orient", "Orientations of undirected graphs");
    orient_cmd->add_option("mode", mode, "bipartite | canonical | switch | equivalent")
        ->required()
        ->check(CLI::IsMember({"bipartite", "canonical", "switch", "equivalent"}));
    orient_cmd->add_option("files", graph_paths, "Graph or orientation files")->required();
    orient_cmd->add_option("--set", set, "Switching set W, comma separated");
    orient_cmd->callback([&] { action = [&] { return cmd_orient(settings, mode, graph_paths, set); }; });

    VerifyOptions vopts;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check constructions against the brute-force oracle");
    verify_cmd->add_option("--n", vopts.max_order, "Largest matrix order")->capture_default_str();
    verify_cmd->add_option("--trials", vopts.trials, "Random matrices to draw")->capture_default_str();
    verify_cmd->add_option("--seed", vopts.seed, "Seed")->capture_default_str();
    verify_cmd->add_flag("--exhaustive", vopts.exhaustive, "Every irreducible 0/1 matrix up to order n");
    verify_cmd->callback([&] { action = [&] { return cmd_verify(settings, vopts); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}
