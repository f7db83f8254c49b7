#include "latroot/gradedroot.hpp"

#include <algorithm>

#include "latroot/errors.hpp"

namespace latroot {

void GroupRingElt::add(long residue, long coeff) {
    if (coeff == 0) return;
    if (p > 0) residue = ((residue % p) + p) % p;
    auto it = c.find(residue);
    if (it == c.end()) {
        c[residue] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

long GroupRingElt::norm() const {
    long s = 0;
    for (const auto& [r, v] : c) s += v;
    return s;
}

bool GroupRingElt::nonneg() const {
    return std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second >= 0; });
}

GroupRingElt GroupRingElt::reduced(long q) const {
    GroupRingElt out;
    out.p = q;
    for (const auto& [r, v] : c) out.add(r, v);
    return out;
}

GroupRingElt GroupRingElt::shifted(long k) const {
    GroupRingElt out;
    out.p = p;
    for (const auto& [r, v] : c) out.add(r + k, v);
    return out;
}

GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) {
    for (const auto& [r, v] : b.c) a.add(r, v);
    return a;
}

GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) {
    for (const auto& [r, v] : b.c) a.add(r, -v);
    return a;
}

std::string GroupRingElt::str() const {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [r, v] : c) {
        long av = v < 0 ? -v : v;
        if (v < 0)
            out += "-";
        else if (!first)
            out += "+";
        if (av != 1) out += std::to_string(av);
        out += "[" + std::to_string(r) + "]";
        first = false;
    }
    return out;
}

Int LabelledGradedRoot::min_leaf_chi() const {
    Int m = leaves.front().chi;
    for (const auto& l : leaves) m = std::min(m, l.chi);
    return m;
}

Int LabelledGradedRoot::max_leaf_chi() const {
    Int m = leaves.front().chi;
    for (const auto& l : leaves) m = std::max(m, l.chi);
    return m;
}

namespace {

// Assigns v_{-m}..v_m names (skipping v_0 for an even leaf count) and angle
// names "(v_a,v_b)", matching the layout used for the printed tables.
void assign_names(LabelledGradedRoot& r) {
    const long n = static_cast<long>(r.leaves.size());
    std::vector<std::string> names(static_cast<std::size_t>(n));
    const bool odd = (n % 2 == 1);
    const long m = odd ? (n - 1) / 2 : n / 2;
    for (long i = 0; i < n; ++i) {
        long idx = i - m;
        if (!odd && idx >= 0) idx += 1;  // skip v_0
        names[static_cast<std::size_t>(i)] = "v_" + std::to_string(idx);
    }
    for (long i = 0; i < n; ++i) r.leaves[static_cast<std::size_t>(i)].name = names[static_cast<std::size_t>(i)];
    for (long k = 0; k + 1 < n; ++k)
        r.angles[static_cast<std::size_t>(k)].name =
            "(" + names[static_cast<std::size_t>(k)] + "," + names[static_cast<std::size_t>(k + 1)] + ")";
}

}  // namespace

LabelledGradedRoot root_from_sequence(const std::vector<Int>& n, long p) {
    if (n.empty()) throw InputError("gradedroot.NotEventuallyIncreasing", "empty sequence");
    const long H = static_cast<long>(n.size()) - 1;

    // Local-minimum runs: maximal constant runs [a,b] entered by a strict
    // descent (or starting at 0) and left by a strict ascent (or reaching H,
    // where the tail is nondecreasing by the caller's contract).
    struct Run {
        long a, b;
    };
    std::vector<Run> runs;
    long a = 0;
    for (long i = 0; i <= H; ++i) {
        if (i < H && n[static_cast<std::size_t>(i + 1)] == n[static_cast<std::size_t>(i)]) continue;
        // run is [a..i]
        bool descends_in = (a == 0) || (n[static_cast<std::size_t>(a - 1)] > n[static_cast<std::size_t>(a)]);
        bool ascends_out = (i == H) || (n[static_cast<std::size_t>(i + 1)] > n[static_cast<std::size_t>(i)]);
        if (descends_in && ascends_out) runs.push_back({a, i});
        a = i + 1;
    }
    if (runs.empty()) throw InputError("gradedroot.NotEventuallyIncreasing", "no local minimum found");

    LabelledGradedRoot r;
    r.p = p;

    // single pass: prefix labels sum_{s < i} (n_{s+1} - n_s) tau^s snapshotted
    // at every leaf start and angle maximiser
    std::vector<long> want_at;
    for (const auto& run : runs) want_at.push_back(run.a);
    std::vector<long> angle_j;
    for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
        long lo = runs[k].b + 1, hi = runs[k + 1].a - 1;
        long j = lo;  // interior maximiser; first index on ties
        for (long t = lo; t <= hi; ++t)
            if (n[static_cast<std::size_t>(t)] > n[static_cast<std::size_t>(j)]) j = t;
        angle_j.push_back(j);
        want_at.push_back(j);
    }
    std::sort(want_at.begin(), want_at.end());
    want_at.erase(std::unique(want_at.begin(), want_at.end()), want_at.end());
    std::map<long, GroupRingElt> prefix_at;
    {
        GroupRingElt acc;
        acc.p = p;
        std::size_t next = 0;
        for (long s = 0; s <= H; ++s) {
            while (next < want_at.size() && want_at[next] == s) prefix_at[want_at[next++]] = acc;
            if (s < H)
                acc.add(s, static_cast<long>(n[static_cast<std::size_t>(s + 1)] -
                                             n[static_cast<std::size_t>(s)]));
        }
        while (next < want_at.size()) prefix_at[want_at[next++]] = acc;
    }

    for (const auto& run : runs) {
        LabelledGradedRoot::Leaf leaf;
        leaf.seq_index = run.a;
        leaf.chi = n[static_cast<std::size_t>(run.a)];
        leaf.lambda_v = prefix_at.at(run.a);
        r.leaves.push_back(std::move(leaf));
    }
    for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
        long j = angle_j[k];
        LabelledGradedRoot::Angle ang;
        ang.seq_index = j;
        ang.chi = n[static_cast<std::size_t>(j)];
        ang.lambda_a = prefix_at.at(j) - prefix_at.at(runs[k].a);
        r.angles.push_back(std::move(ang));
    }
    assign_names(r);
    return r;
}

LabelledGradedRoot reduce_mod_p(const LabelledGradedRoot& r, long p) {
    LabelledGradedRoot out = r;
    out.p = p;
    for (auto& l : out.leaves) l.lambda_v = l.lambda_v.reduced(p);
    for (auto& a : out.angles) a.lambda_a = a.lambda_a.reduced(p);
    return out;
}

bool is_reflective(const LabelledGradedRoot& r) {
    const long n = static_cast<long>(r.leaves.size()) - 1;
    for (long i = 0; i <= n; ++i)
        if (!(r.leaves[static_cast<std::size_t>(i)].lambda_v ==
              r.leaves[static_cast<std::size_t>(n - i)].lambda_v))
            return false;
    for (long i = 1; i <= n; ++i) {
        GroupRingElt lhs = r.angles[static_cast<std::size_t>(i - 1)].lambda_a +
                           r.leaves[static_cast<std::size_t>(i - 1)].lambda_v -
                           r.leaves[static_cast<std::size_t>(i)].lambda_v;
        if (!(lhs == r.angles[static_cast<std::size_t>(n - i)].lambda_a)) return false;
    }
    return true;
}

SymmetricLabelledRoot symmetrize(const LabelledGradedRoot& r) {
    if (!is_reflective(r))
        throw InvariantViolation("gradedroot.NotReflective", "labelled root is not reflective");
    SymmetricLabelledRoot s;
    s.root = r;
    const long count = static_cast<long>(r.leaves.size());
    if (count % 2 == 1) {
        s.central_leaf = true;
        s.center = static_cast<int>((count - 1) / 2);
    } else {
        s.central_leaf = false;
        s.center = static_cast<int>(count / 2 - 1);  // angle between leaves count/2-1 and count/2
    }
    return s;
}

bool equivalent(const LabelledGradedRoot& a, const LabelledGradedRoot& b) {
    if (a.p != b.p) return false;
    if (a.leaves.size() != b.leaves.size()) return false;
    const long p = a.p;
    Int wshift = b.leaves.front().chi - a.leaves.front().chi;
    for (std::size_t i = 0; i < a.leaves.size(); ++i)
        if (a.leaves[i].chi + wshift != b.leaves[i].chi) return false;
    for (std::size_t i = 0; i < a.angles.size(); ++i)
        if (a.angles[i].chi + wshift != b.angles[i].chi) return false;

    std::vector<long> shifts;
    if (p > 0)
        for (long k = 0; k < p; ++k) shifts.push_back(k);
    else {
        // integer master: candidate shifts from matching the first nonzero labels
        shifts.push_back(0);
        for (const auto& ang : a.angles)
            if (!ang.lambda_a.is_zero()) {
                for (const auto& bng : b.angles)
                    if (!bng.lambda_a.is_zero())
                        shifts.push_back(bng.lambda_a.c.begin()->first - ang.lambda_a.c.begin()->first);
                break;
            }
    }
    for (long k : shifts) {
        GroupRingElt off = b.leaves.front().lambda_v - a.leaves.front().lambda_v.shifted(k);
        bool ok = true;
        for (std::size_t i = 0; i < a.leaves.size() && ok; ++i)
            ok = (a.leaves[i].lambda_v.shifted(k) + off == b.leaves[i].lambda_v);
        for (std::size_t i = 0; i < a.angles.size() && ok; ++i)
            ok = (a.angles[i].lambda_a.shifted(k) == b.angles[i].lambda_a);
        if (ok) return true;
    }
    return false;
}

}  // namespace latroot
