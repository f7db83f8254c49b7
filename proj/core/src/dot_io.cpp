#include "latroot/dot_io.hpp"

#include <vector>

namespace latroot {

namespace {

std::string q(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string dot_of_root(const LabelledGradedRoot& r) {
    // Merge structure: each leaf attaches to the lower-weight adjacent angle;
    // each angle attaches to the nearest enclosing angle of larger weight
    // (stack construction), the outermost one to the stem.
    std::string out = "graph gradedroot {\n";
    out += "  // upside down: vertical position = -weight\n";
    out += "  node [shape=circle, width=0.12, fixedsize=true, label=\"\"];\n";
    for (const auto& l : r.leaves)
        out += "  " + q(l.name) + " [xlabel=" + q(l.name + " w=" + l.chi.str() +
               " lv=" + l.lambda_v.str()) + "];\n";
    for (std::size_t k = 0; k < r.angles.size(); ++k)
        out += "  " + q("a" + std::to_string(k)) + " [xlabel=" +
               q(r.angles[k].name + " w=" + r.angles[k].chi.str() + " la=" +
                 r.angles[k].lambda_a.str()) + "];\n";
    out += "  \"stem\" [shape=plaintext, label=\"...\"];\n";

    const std::size_t n = r.leaves.size();
    // leaf -> first merge
    for (std::size_t i = 0; i < n; ++i) {
        bool left_ok = i > 0;
        bool right_ok = i < n - 1;
        std::size_t tgt;
        if (left_ok && right_ok)
            tgt = (r.angles[i - 1].chi <= r.angles[i].chi) ? i - 1 : i;
        else if (left_ok)
            tgt = i - 1;
        else if (right_ok)
            tgt = i;
        else {
            out += "  " + q(r.leaves[i].name) + " -- \"stem\";\n";
            continue;
        }
        out += "  " + q(r.leaves[i].name) + " -- " + q("a" + std::to_string(tgt)) + ";\n";
    }
    // angle -> enclosing angle of larger weight (first-on-ties to the left)
    std::vector<long> parent(r.angles.size(), -1);
    std::vector<std::size_t> stack;
    for (std::size_t k = 0; k < r.angles.size(); ++k) {
        while (!stack.empty() && r.angles[stack.back()].chi < r.angles[k].chi) {
            if (parent[stack.back()] < 0) parent[stack.back()] = static_cast<long>(k);
            stack.pop_back();
        }
        if (!stack.empty() && parent[k] < 0) parent[k] = static_cast<long>(stack.back());
        stack.push_back(k);
    }
    for (std::size_t k = 0; k < r.angles.size(); ++k) {
        if (parent[k] >= 0)
            out += "  " + q("a" + std::to_string(k)) + " -- " +
                   q("a" + std::to_string(static_cast<std::size_t>(parent[k]))) + ";\n";
        else if (!r.angles.empty() &&
                 r.angles[k].chi == [&] {
                     Int m = r.angles[0].chi;
                     for (const auto& a : r.angles) m = std::max(m, a.chi);
                     return m;
                 }())
            out += "  " + q("a" + std::to_string(k)) + " -- \"stem\";\n";
    }
    out += "}\n";
    return out;
}

std::string dot_of_plumbing(const PlumbingGraph& g) {
    std::string out = "graph plumbing {\n  node [shape=circle];\n";
    for (int v = 0; v < g.node_count(); ++v) {
        std::string name = "n" + std::to_string(v);
        out += "  " + q(name) + " [label=" + q(g.weights[static_cast<std::size_t>(v)].str()) +
               (v == g.central ? ", style=bold" : "") + "];\n";
    }
    for (auto [i, j] : g.edges)
        out += "  " + q("n" + std::to_string(i)) + " -- " + q("n" + std::to_string(j)) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace latroot
