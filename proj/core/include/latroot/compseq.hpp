// Minimal cycles x_s(i) via generalized Laufer iteration, computation
// sequences, the weight function chi, and Delta-sequences (lattice-theoretic
// and closed-form routes).
#pragma once

#include <functional>
#include <vector>

#include "latroot/plumbing.hpp"

namespace latroot {

using Cycle = std::vector<Int>;  // node-basis integer vector

// chi(x) = -(k(x) + x.x)/2 for a characteristic functional k (dual values).
// Throws NonIntegralWeight when k(x) + x.x is odd.
Int chi(const PlumbingGraph& g, const std::vector<Int>& k_dual, const Cycle& x);

// Pairing values (Q x)(v) for all v.
std::vector<Int> pairing(const PlumbingGraph& g, const Cycle& x);

// Generalized Laufer step sequence from x(i)+v_c up to x(i+1).  lprime holds
// the dual values l'(v) (all zero for the canonical structure).  The vertex
// choice is injected so confluence can be tested; the default picks the
// smallest node id.
using VertexPicker = std::function<int(const std::vector<int>&)>;

Cycle laufer_min_cycle(const PlumbingGraph& g, const std::vector<Int>& lprime, long i,
                       const VertexPicker& pick = {});

// The full computation sequence x(i)+v_c = x_{i,0}, ..., x_{i,n_i} = x(i+1).
// Throws WeightDrift if the interior weights are not constant (input not
// almost rational) when check_weights is set.
std::vector<Cycle> computation_sequence(const PlumbingGraph& g, const std::vector<Int>& lprime,
                                        long i, const VertexPicker& pick = {},
                                        bool check_weights = true,
                                        const std::vector<Int>* k_dual = nullptr);

struct DeltaSequence {
    std::vector<Int> values;  // Delta(0..horizon)
    long horizon = 0;
    SpincSelector spinc;

    std::vector<std::pair<long, Int>> nonzero() const;
};

// Closed-form Delta(i) = 1 + a_0 - e0*i + sum_l floor((-i q_l + a_l)/p_l);
// canonical case reduces to 1 - e0*i - sum_l ceil(i q_l / p_l).
DeltaSequence delta_closed_form(const SeifertData& s, const SpincSelector& sel, long horizon);

// chi profile: chi(0) = 0, chi(i+1) = chi(i) + Delta(i).
std::vector<Int> chi_profile(const DeltaSequence& d);

// chi values of the Laufer cycles x(0..count) for the canonical structure.
std::vector<Int> laufer_chi_profile(const PlumbingGraph& g, long count);

}  // namespace latroot
