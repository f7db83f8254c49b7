// latroot command line: plumbing data, Delta tables, labelled graded roots,
// equivariant lattice chains, Froyshov invariants and the local map solver,
// one subcommand each.  Input is the JSON schema {"seifert": {...}} or
// {"plumbing": {...}}, from --input FILE or stdin.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latroot/barpin2.hpp"
#include "latroot/dot_io.hpp"
#include "latroot/errors.hpp"
#include "latroot/invariants.hpp"
#include "latroot/json_io.hpp"
#include "latroot/localmaps.hpp"

using namespace latroot;

namespace {

struct Options {
    std::string input;
    std::string format = "text";
    long p = 2;
    long max_degree = -1;
    long horizon = -1;
    int copies = 1;
    int level = 0;
    int degree = -1;
    unsigned long seed = 0;
    bool pretty = false;
    std::string group = "s1zp";
    std::string golden_dir = "tests/golden";
};

LoadedInput load(const Options& opt) {
    Json j;
    if (opt.input.empty() || opt.input == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        j = Json::parse(buf.str());
    } else {
        std::ifstream f(opt.input);
        if (!f) throw InputError("io.BadInput", "cannot open " + opt.input);
        j = Json::parse(f);
    }
    return parse_input(j);
}

DeltaSequence delta_of(const LoadedInput& in, long horizon) {
    if (horizon < 0) {  // table convention: nonzero values up to N_Y
        if (in.seifert)
            horizon = to_long(n_y(*in.seifert));
        else {
            auto kc = canonical_class(in.graph);
            horizon = to_long(-to_int(kc.node.c[static_cast<std::size_t>(in.graph.central)]) - 1);
        }
        if (horizon < 1) horizon = 1;
    }
    auto profile = canonical_profile(in, horizon);
    DeltaSequence d;
    d.horizon = static_cast<long>(profile.size()) - 1;
    for (std::size_t i = 0; i + 1 < profile.size(); ++i)
        d.values.push_back(profile[i + 1] - profile[i]);
    d.horizon = static_cast<long>(d.values.size()) - 1;
    return d;
}

int cmd_plumb(const Options& opt) {
    auto in = load(opt);
    auto q = intersection_matrix(in.graph);
    auto kc = canonical_class(in.graph);
    Json out;
    Json weights = Json::array();
    for (const auto& w : in.graph.weights) weights.push_back(static_cast<long long>(w));
    out["weights"] = weights;
    Json edges = Json::array();
    for (auto [i, j] : in.graph.edges) edges.push_back(Json::array({i, j}));
    out["edges"] = edges;
    out["central"] = in.graph.central;
    out["intersection_matrix"] = render_int_matrix(q);
    out["det"] = static_cast<long long>(det_bareiss(q));
    Json kdual = Json::array(), knode = Json::array();
    for (const auto& v : kc.dual.c) kdual.push_back(static_cast<long long>(to_int(v)));
    for (const auto& v : kc.node.c) {
        std::ostringstream ss;
        ss << v;
        knode.push_back(ss.str());
    }
    out["canonical_class"] = kdual;
    out["canonical_class_node_basis"] = knode;
    if (in.seifert) {
        out["h1"] = static_cast<long long>(in.seifert->h1_order());
        Rat ny = n_y_rat(*in.seifert);
        std::ostringstream ss;
        ss << ny;
        out["n_y"] = ss.str();
    }
    if (kc.node.integral()) {
        auto wu = wu_cycle(in.graph);
        Json xcan = Json::array();
        for (const auto& v : wu.x_can) xcan.push_back(static_cast<long long>(v));
        out["wu_cycle"] = xcan;
    }
    if (opt.format == "dot")
        std::cout << dot_of_plumbing(in.graph);
    else
        std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_delta(const Options& opt) {
    auto in = load(opt);
    auto d = delta_of(in, opt.horizon);
    if (opt.format == "json") {
        std::cout << render_delta(d).dump(2) << "\n";
        return 0;
    }
    std::cout << std::setw(6) << "i" << std::setw(8) << "Delta" << "\n";
    for (const auto& [i, v] : d.nonzero())
        std::cout << std::setw(6) << i << std::setw(8) << v.str() << "\n";
    return 0;
}

LabelledGradedRoot root_of(const Options& opt, const LoadedInput& in, long p) {
    auto profile = canonical_profile(in, opt.horizon);
    auto master = root_from_sequence(profile, 0);
    return p > 0 ? reduce_mod_p(master, p) : master;
}

int cmd_root(const Options& opt) {
    auto in = load(opt);
    auto r = root_of(opt, in, opt.p);
    if (opt.format == "dot")
        std::cout << dot_of_root(r);
    else
        std::cout << render_root(r).dump(2) << "\n";
    return 0;
}

int cmd_labels(const Options& opt) {
    auto in = load(opt);
    auto r = root_of(opt, in, opt.p);
    if (opt.format == "json") {
        std::cout << render_root(r).dump(2) << "\n";
        return 0;
    }
    std::cout << "leaves:\n";
    for (const auto& l : r.leaves)
        std::cout << "  " << std::setw(6) << l.name << "  i=" << std::setw(4) << l.seq_index
                  << "  lambda_V = " << l.lambda_v.str() << "\n";
    std::cout << "simple angles:\n";
    for (const auto& a : r.angles)
        std::cout << "  " << std::setw(14) << a.name << "  i=" << std::setw(4) << a.seq_index
                  << "  lambda_A = " << a.lambda_a.str() << "\n";
    return 0;
}

DgModule chain_of(const Options& opt, const LoadedInput& in) {
    if (opt.group == "pin2") {
        auto r = root_of(opt, in, 2);
        auto sym = symmetrize(r);
        return build_pin2_chain(sym);
    }
    return build_s1zp_chain(root_of(opt, in, opt.p));
}

int cmd_chain(const Options& opt) {
    auto in = load(opt);
    auto m = chain_of(opt, in);
    if (opt.pretty)
        std::cout << pretty_print(m);
    else
        std::cout << render_chain(m).dump(2) << "\n";
    return 0;
}

int cmd_froyshov(const Options& opt) {
    auto in = load(opt);
    if (!in.seifert) throw InputError("io.BadInput", "froyshov needs Seifert input");
    auto rep = froyshov(*in.seifert, opt.p, opt.max_degree);
    Json out;
    {
        std::ostringstream a, b;
        a << rep.delta;
        b << rep.delta0;
        out["delta"] = a.str();
        out["delta0"] = b.str();
    }
    out["hf_red"] = rep.hf_red;
    out["p"] = rep.p;
    out["witness_degree"] = rep.witness_degree;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_hfred(const Options& opt) {
    auto in = load(opt);
    LabelledGradedRoot master =
        in.seifert ? canonical_root(*in.seifert) : root_of(opt, in, 0);
    long f = hf_red_formula(master);
    long t = hf_red_torsion(master);
    Json out{{"hf_red_formula", f}, {"hf_red_torsion", t}, {"agree", f == t}};
    std::cout << out.dump(2) << "\n";
    return (f == t) ? 0 : 2;
}

int cmd_localmap(const Options& opt) {
    auto in = load(opt);
    auto r = root_of(opt, in, 2);
    auto sym = symmetrize(r);
    auto m = build_pin2_chain(sym);
    int level = opt.degree >= 0 ? opt.degree : opt.level;
    auto rep = local_map_exists(m, opt.copies, level);
    Json out;
    out["copies"] = rep.copies;
    out["level"] = rep.level;
    out["sat"] = rep.sat;
    out["route"] = rep.route;
    out["system_rows"] = rep.sys_rows;
    out["system_cols"] = rep.sys_cols;
    out["rank_without_anchor"] = rep.rank_without;
    out["rank_with_anchor"] = rep.rank_with;
    out["seconds"] = rep.seconds;
    if (rep.sat) {
        DgModule tp = tensor_power(m, opt.copies);
        out["witness"] = mod_str(tp, rep.witness);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_barcheck(const Options& opt) {
    int d = opt.max_degree >= 0 ? static_cast<int>(opt.max_degree) : 8;
    auto checks = verify_a0();
    auto dims = bar_homology(d);
    std::string off;
    bool tw = verify_twisting(&off);
    bool phi_ok = phi_nontrivial();
    bool psi_ok = psi_nontrivial();
    bool quasi = verify_phi_quasi_iso(d);
    std::cout << "A0 structure:        " << (checks.ok() ? "pass" : "FAIL") << "\n";
    std::cout << "bar homology dims:   ";
    for (auto v : dims) std::cout << v << " ";
    std::cout << "\n";
    std::cout << "phi nontrivial:      " << (phi_ok ? "pass" : "FAIL") << "\n";
    std::cout << "psi nontrivial:      " << (psi_ok ? "pass" : "FAIL") << "\n";
    std::cout << "twisting identity:   " << (tw ? "pass" : ("FAIL at " + off)) << "\n";
    std::cout << "Phi quasi-iso <= " << d << ":  " << (quasi ? "pass" : "FAIL") << "\n";
    return (checks.ok() && tw && phi_ok && psi_ok && quasi) ? 0 : 2;
}

int cmd_golden(const Options& opt);

}  // namespace

#include "golden_suite.inc"

int main(int argc, char** argv) {
    CLI::App app{"lattice graded-root calculator for Seifert fibered spaces"};
    app.set_config("--config");
    Options opt;
    if (const char* env = std::getenv("LATROOT_MAX_DEGREE")) opt.max_degree = std::atol(env);

    app.add_option("-i,--input", opt.input, "input JSON file ('-' or empty: stdin)");
    app.add_option("--format", opt.format, "output format: text|json|dot");
    app.add_option("--p", opt.p, "prime p (label modulus); 0 keeps integer labels");
    app.add_option("--max-degree", opt.max_degree, "degree cap override");
    app.add_option("--horizon", opt.horizon, "Delta horizon override (default N_Y + 2)");
    app.add_option("--seed", opt.seed, "seed for randomized runs");

    auto* plumb = app.add_subcommand("plumb", "plumbing graph, intersection form, K, Wu cycle");
    auto* delta = app.add_subcommand("delta", "canonical Delta table");
    auto* root = app.add_subcommand("root", "labelled planar graded root");
    auto* labels = app.add_subcommand("labels", "leaf/angle label tables");
    auto* chain = app.add_subcommand("chain", "equivariant lattice chain model");
    chain->add_option("--group", opt.group, "s1zp|pin2");
    chain->add_flag("--pretty", opt.pretty, "print differentials in paper notation");
    auto* froy = app.add_subcommand("froyshov", "delta, delta0, dim HF_red");
    auto* hfred = app.add_subcommand("hfred", "dim HF_red by both routes");
    auto* localmap = app.add_subcommand("localmap", "level-k local map existence");
    localmap->add_option("--copies", opt.copies, "tensor copies n");
    localmap->add_option("--level", opt.level, "level k in {0,1,2}");
    localmap->add_option("--degree", opt.degree, "override the search degree");
    auto* barcheck = app.add_subcommand("barcheck", "bar construction checks for BPin(2)");
    auto* golden = app.add_subcommand("golden", "replay the vendored golden tables");
    golden->add_option("--dir", opt.golden_dir, "directory with golden files");

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    try {
        if (plumb->parsed()) return cmd_plumb(opt);
        if (delta->parsed()) return cmd_delta(opt);
        if (root->parsed()) return cmd_root(opt);
        if (labels->parsed()) return cmd_labels(opt);
        if (chain->parsed()) return cmd_chain(opt);
        if (froy->parsed()) return cmd_froyshov(opt);
        if (hfred->parsed()) return cmd_hfred(opt);
        if (localmap->parsed()) return cmd_localmap(opt);
        if (barcheck->parsed()) return cmd_barcheck(opt);
        if (golden->parsed()) return cmd_golden(opt);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
