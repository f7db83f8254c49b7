#include "latroot/compseq.hpp"

#include <algorithm>

#include "latroot/errors.hpp"

namespace latroot {

Int chi(const PlumbingGraph& g, const std::vector<Int>& k_dual, const Cycle& x) {
    const std::size_t n = g.weights.size();
    auto qx = pairing(g, x);
    Int xx = 0, kx = 0;
    for (std::size_t v = 0; v < n; ++v) {
        xx += x[v] * qx[v];
        kx += k_dual[v] * x[v];
    }
    Int num = kx + xx;
    if (num % 2 != 0)
        throw InvariantViolation("compseq.NonIntegralWeight", "k(x) + x.x is odd; k not characteristic");
    return -num / 2;
}

std::vector<Int> pairing(const PlumbingGraph& g, const Cycle& x) {
    const std::size_t n = g.weights.size();
    std::vector<Int> out(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        out[v] = g.weights[v] * x[v];
        for (int w : g.adj[v]) out[v] += x[static_cast<std::size_t>(w)];
    }
    return out;
}

namespace {

constexpr long kIterationCap = 4'000'000;

// One Laufer pass: from z, repeatedly add a non-central v with (z+l')(v) > 0.
// Updates the pairing vector incrementally.
void laufer_descend(const PlumbingGraph& g, const std::vector<Int>& lprime, Cycle& z,
                    std::vector<Int>& qz, const VertexPicker& pick, long* steps,
                    std::vector<Cycle>* trace) {
    const int n = g.node_count();
    for (;;) {
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v) {
            if (v == g.central) continue;
            if (qz[static_cast<std::size_t>(v)] + lprime[static_cast<std::size_t>(v)] > 0)
                candidates.push_back(v);
        }
        if (candidates.empty()) return;
        int v = pick ? pick(candidates) : candidates.front();
        z[static_cast<std::size_t>(v)] += 1;
        qz[static_cast<std::size_t>(v)] += g.weights[static_cast<std::size_t>(v)];
        for (int w : g.adj[static_cast<std::size_t>(v)]) qz[static_cast<std::size_t>(w)] += 1;
        if (trace) trace->push_back(z);
        if (++*steps > kIterationCap)
            throw InvariantViolation("compseq.NonTermination",
                                     "Laufer iteration exceeded cap; input not negative definite?");
    }
}

}  // namespace

Cycle laufer_min_cycle(const PlumbingGraph& g, const std::vector<Int>& lprime, long i,
                       const VertexPicker& pick) {
    const std::size_t n = g.weights.size();
    Cycle z(n, 0);
    auto qz = pairing(g, z);
    long steps = 0;
    for (long step = 0; step < i; ++step) {
        z[static_cast<std::size_t>(g.central)] += 1;
        qz[static_cast<std::size_t>(g.central)] += g.weights[static_cast<std::size_t>(g.central)];
        for (int w : g.adj[static_cast<std::size_t>(g.central)]) qz[static_cast<std::size_t>(w)] += 1;
        laufer_descend(g, lprime, z, qz, pick, &steps, nullptr);
    }
    return z;
}

std::vector<Cycle> computation_sequence(const PlumbingGraph& g, const std::vector<Int>& lprime,
                                        long i, const VertexPicker& pick, bool check_weights,
                                        const std::vector<Int>* k_dual) {
    Cycle z = laufer_min_cycle(g, lprime, i, pick);
    auto qz = pairing(g, z);
    z[static_cast<std::size_t>(g.central)] += 1;
    qz[static_cast<std::size_t>(g.central)] += g.weights[static_cast<std::size_t>(g.central)];
    for (int w : g.adj[static_cast<std::size_t>(g.central)]) qz[static_cast<std::size_t>(w)] += 1;

    std::vector<Cycle> seq{z};
    long steps = 0;
    laufer_descend(g, lprime, z, qz, pick, &steps, &seq);

    if (check_weights) {
        std::vector<Int> kd;
        if (k_dual)
            kd = *k_dual;
        else {
            auto kc = canonical_class(g);
            kd.reserve(kc.dual.c.size());
            for (const auto& r : kc.dual.c) kd.push_back(to_int(r));
        }
        Int w0 = chi(g, kd, seq.front());
        for (const auto& c : seq)
            if (chi(g, kd, c) != w0)
                throw InvariantViolation("compseq.WeightDrift",
                                         "computation sequence weight not constant");
    }
    return seq;
}

std::vector<std::pair<long, Int>> DeltaSequence::nonzero() const {
    std::vector<std::pair<long, Int>> out;
    for (long i = 0; i < static_cast<long>(values.size()); ++i)
        if (values[static_cast<std::size_t>(i)] != 0)
            out.emplace_back(i, values[static_cast<std::size_t>(i)]);
    return out;
}

DeltaSequence delta_closed_form(const SeifertData& s, const SpincSelector& sel, long horizon) {
    s.validate();
    auto eff = s.effective_arms();
    std::vector<Int> a(eff.size() + 1, 0);
    if (!sel.canonical) {
        if (sel.a.size() != eff.size() + 1)
            throw InputError("compseq.OutOfRange", "SI_red vector length must be nu+1");
        a = sel.a;
    }
    DeltaSequence d;
    d.horizon = horizon;
    d.spinc = sel;
    d.values.reserve(static_cast<std::size_t>(horizon) + 1);
    for (long i = 0; i <= horizon; ++i) {
        Int acc = 1 + a[0] - s.e0 * i;
        for (std::size_t l = 0; l < eff.size(); ++l)
            acc += floor_div(Int(-i) * eff[l].second + a[l + 1], eff[l].first);
        d.values.push_back(acc);
    }
    return d;
}

std::vector<Int> chi_profile(const DeltaSequence& d) {
    std::vector<Int> chi{0};
    chi.reserve(d.values.size() + 1);
    for (const auto& v : d.values) chi.push_back(chi.back() + v);
    return chi;
}

std::vector<Int> laufer_chi_profile(const PlumbingGraph& g, long count) {
    auto kc = canonical_class(g);
    std::vector<Int> kd;
    kd.reserve(kc.dual.c.size());
    for (const auto& r : kc.dual.c) kd.push_back(to_int(r));
    std::vector<Int> lprime(g.weights.size(), 0);

    // Single incremental pass: x(i+1) continues from x(i).
    Cycle z(g.weights.size(), 0);
    auto qz = pairing(g, z);
    long steps = 0;
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    out.push_back(chi(g, kd, z));
    for (long i = 0; i < count; ++i) {
        z[static_cast<std::size_t>(g.central)] += 1;
        qz[static_cast<std::size_t>(g.central)] += g.weights[static_cast<std::size_t>(g.central)];
        for (int w : g.adj[static_cast<std::size_t>(g.central)]) qz[static_cast<std::size_t>(w)] += 1;
        laufer_descend(g, lprime, z, qz, {}, &steps, nullptr);
        out.push_back(chi(g, kd, z));
    }
    return out;
}

}  // namespace latroot
