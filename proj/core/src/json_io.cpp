#include "latroot/json_io.hpp"

#include <algorithm>

#include "latroot/errors.hpp"

namespace latroot {

namespace {

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw InputError("io.BadInput", "expected an integer");
}

Json int_to_json(const Int& v) {
    // stay exact: emit small values as numbers, large ones as strings
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
    return Json(v.str());
}

}  // namespace

LoadedInput parse_input(const Json& j) {
    LoadedInput in;
    if (j.contains("seifert")) {
        const auto& s = j.at("seifert");
        SeifertData sd;
        sd.e0 = json_to_int(s.at("e0"));
        for (const auto& arm : s.at("arms")) {
            if (!arm.is_array() || arm.size() != 2)
                throw InputError("io.BadInput", "arm must be [p,q]");
            sd.arms.emplace_back(json_to_int(arm[0]), json_to_int(arm[1]));
        }
        sd.validate();
        in.seifert = sd;
        in.graph = build_plumbing(sd);
        return in;
    }
    if (j.contains("plumbing")) {
        const auto& p = j.at("plumbing");
        PlumbingGraph g;
        for (const auto& w : p.at("weights")) g.weights.push_back(json_to_int(w));
        for (const auto& e : p.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("io.BadInput", "edge must be [i,j]");
            g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        g.central = p.value("central", 0);
        if (g.central < 0 || g.central >= g.node_count())
            throw InputError("io.BadInput", "central node out of range");
        if (static_cast<int>(g.edges.size()) != g.node_count() - 1)
            throw InputError("io.BadInput", "plumbing graph must be a tree");
        g.finalize();
        // star-shaped check and arm positions
        g.arm_of.assign(g.weights.size(), {-1, 0});
        int arm = 0;
        for (int nb : g.adj[static_cast<std::size_t>(g.central)]) {
            int prev = g.central, cur = nb, pos = 1;
            for (;;) {
                g.arm_of[static_cast<std::size_t>(cur)] = {arm, pos};
                std::vector<int> nexts;
                for (int w : g.adj[static_cast<std::size_t>(cur)])
                    if (w != prev) nexts.push_back(w);
                if (nexts.empty()) break;
                if (nexts.size() > 1)
                    throw InputError("io.BadInput", "plumbing graph is not star-shaped");
                prev = cur;
                cur = nexts[0];
                ++pos;
            }
            ++arm;
        }
        if (!is_negative_definite(intersection_matrix(g)))
            throw InputError("plumbing.NotNegativeDefinite", "input graph not negative definite");
        in.graph = g;
        return in;
    }
    throw InputError("io.BadInput", "input needs a \"seifert\" or \"plumbing\" object");
}

Json render_seifert(const SeifertData& s) {
    Json arms = Json::array();
    for (const auto& [p, q] : s.arms) arms.push_back(Json::array({int_to_json(p), int_to_json(q)}));
    return Json{{"seifert", {{"e0", int_to_json(s.e0)}, {"arms", arms}}}};
}

Json render_int_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(int_to_json(v));
        rows.push_back(row);
    }
    return rows;
}

Json render_delta(const DeltaSequence& d) {
    Json rows = Json::array();
    for (const auto& [i, v] : d.nonzero())
        rows.push_back(Json{{"i", i}, {"delta", int_to_json(v)}});
    return Json{{"horizon", d.horizon}, {"rows", rows}};
}

DeltaSequence parse_delta(const Json& j) {
    DeltaSequence d;
    d.horizon = j.at("horizon").get<long>();
    d.values.assign(static_cast<std::size_t>(d.horizon) + 1, 0);
    for (const auto& row : j.at("rows"))
        d.values[row.at("i").get<std::size_t>()] = json_to_int(row.at("delta"));
    return d;
}

namespace {

Json render_label(const GroupRingElt& e) {
    Json terms = Json::array();
    for (const auto& [r, c] : e.c) terms.push_back(Json{{"res", r}, {"coef", c}});
    return terms;
}

GroupRingElt parse_label(const Json& j, long p) {
    GroupRingElt e;
    e.p = p;
    for (const auto& t : j) e.add(t.at("res").get<long>(), t.at("coef").get<long>());
    return e;
}

}  // namespace

Json render_root(const LabelledGradedRoot& r) {
    Json leaves = Json::array();
    for (const auto& l : r.leaves)
        leaves.push_back(Json{{"name", l.name},
                              {"i", l.seq_index},
                              {"chi", int_to_json(l.chi)},
                              {"lambda_v", render_label(l.lambda_v)},
                              {"lambda_v_str", l.lambda_v.str()}});
    Json angles = Json::array();
    for (const auto& a : r.angles)
        angles.push_back(Json{{"name", a.name},
                              {"i", a.seq_index},
                              {"chi", int_to_json(a.chi)},
                              {"lambda_a", render_label(a.lambda_a)},
                              {"lambda_a_str", a.lambda_a.str()}});
    return Json{{"p", r.p}, {"leaves", leaves}, {"angles", angles}};
}

LabelledGradedRoot parse_root(const Json& j) {
    LabelledGradedRoot r;
    r.p = j.at("p").get<long>();
    for (const auto& l : j.at("leaves")) {
        LabelledGradedRoot::Leaf leaf;
        leaf.name = l.at("name").get<std::string>();
        leaf.seq_index = l.at("i").get<long>();
        leaf.chi = json_to_int(l.at("chi"));
        leaf.lambda_v = parse_label(l.at("lambda_v"), r.p);
        r.leaves.push_back(std::move(leaf));
    }
    for (const auto& a : j.at("angles")) {
        LabelledGradedRoot::Angle ang;
        ang.name = a.at("name").get<std::string>();
        ang.seq_index = a.at("i").get<long>();
        ang.chi = json_to_int(a.at("chi"));
        ang.lambda_a = parse_label(a.at("lambda_a"), r.p);
        r.angles.push_back(std::move(ang));
    }
    return r;
}

namespace {

const char* ring_name(const RingSpec& s) {
    switch (s.kind) {
        case RingKind::S1Zp:
            return "s1zp";
        case RingKind::Pin2:
            return "pin2";
        case RingKind::Pin2Z2:
            return "pin2z2";
        case RingKind::UPoly:
            return "upoly";
    }
    return "?";
}

RingSpec ring_from_name(const std::string& name, long p) {
    if (name == "s1zp") return RingSpec::s1zp(p);
    if (name == "pin2") return RingSpec::pin2();
    if (name == "pin2z2") return RingSpec::pin2z2();
    if (name == "upoly") return RingSpec::upoly(p);
    throw InputError("io.BadInput", "unknown ring kind: " + name);
}

Json render_ringelt(const RingElt& e) {
    Json terms = Json::array();
    for (const auto& [m, c] : e.terms) {
        Json t;
        if (m.q) t["Q"] = m.q;
        if (m.u) t["U"] = m.u;
        if (m.s) t["S"] = m.s;
        if (m.r) t["R"] = m.r;
        if (m.t) t["theta"] = m.t;
        t["coef"] = c;
        terms.push_back(t);
    }
    return terms;
}

RingElt parse_ringelt(const Json& j) {
    RingElt e;
    for (const auto& t : j) {
        Monomial m;
        m.q = t.value("Q", 0);
        m.u = t.value("U", 0);
        m.s = t.value("S", 0);
        m.r = t.value("R", 0);
        m.t = t.value("theta", 0);
        e.terms.emplace_back(m, t.at("coef").get<std::uint32_t>());
    }
    std::sort(e.terms.begin(), e.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return e;
}

}  // namespace

Json render_chain(const DgModule& m) {
    Json gens = Json::array();
    for (const auto& g : m.gens) gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
    Json diff = Json::object();
    for (std::size_t g = 0; g < m.gens.size(); ++g) {
        if (m.diff[g].empty()) continue;
        Json entries = Json::array();
        for (const auto& [tgt, c] : m.diff[g])
            entries.push_back(
                Json{{"target", m.gens[static_cast<std::size_t>(tgt)].name}, {"coef", render_ringelt(c)}});
        diff[m.gens[g].name] = entries;
    }
    return Json{{"ring", ring_name(m.spec)}, {"p", m.spec.p}, {"generators", gens},
                {"differential", diff}};
}

DgModule parse_chain(const Json& j) {
    DgModule m;
    m.spec = ring_from_name(j.at("ring").get<std::string>(), j.at("p").get<long>());
    for (const auto& g : j.at("generators"))
        m.gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    m.diff.resize(m.gens.size());
    for (const auto& [src, entries] : j.at("differential").items()) {
        int gi = m.gen_index(src);
        if (gi < 0) throw InputError("io.BadInput", "unknown generator in differential: " + src);
        for (const auto& e : entries) {
            int ti = m.gen_index(e.at("target").get<std::string>());
            if (ti < 0) throw InputError("io.BadInput", "unknown differential target");
            m.diff[static_cast<std::size_t>(gi)].emplace_back(ti, parse_ringelt(e.at("coef")));
        }
    }
    return m;
}

std::vector<Int> canonical_profile(const LoadedInput& in, long horizon_override) {
    if (in.seifert) {
        Int n = n_y(*in.seifert);
        long horizon = horizon_override >= 0 ? horizon_override : to_long(n) + 2;
        if (horizon < 2) horizon = 2;
        auto d = delta_closed_form(*in.seifert, SpincSelector::Canonical(), horizon);
        return chi_profile(d);
    }
    // Laufer route: N_Y from the canonical-class lemma, m_{v_c}(K) = -N_Y - 1.
    auto kc = canonical_class(in.graph);
    if (!kc.node.integral())
        throw InvariantViolation("plumbing.NotSelfConjugate",
                                 "plumbing-only input needs an integral canonical class");
    Int n = -to_int(kc.node.c[static_cast<std::size_t>(in.graph.central)]) - 1;
    long horizon = horizon_override >= 0 ? horizon_override : to_long(n) + 2;
    if (horizon < 2) horizon = 2;
    return laufer_chi_profile(in.graph, horizon);
}

}  // namespace latroot
