// Froyshov-type invariants computed from lattice chain models: delta (plain
// monopole, via the U-tower bottom after killing S, R, theta), delta_0^(p)
// (minimal degree of a localization-surviving class of the full equivariant
// chain), dim HF_red by the angle-drop formula and by an independent
// F_2[U]-torsion computation, and the large-p equality check.
#pragma once

#include "latroot/coeffring.hpp"
#include "latroot/compseq.hpp"
#include "latroot/gradedroot.hpp"
#include "latroot/latticechain.hpp"

namespace latroot {

struct FroyshovReport {
    Rat delta;
    Rat delta0;
    long hf_red = 0;
    long p = 2;
    int witness_degree = 0;
    ModElt witness;  // cycle of the S^1 x Z_p chain realizing delta0
    int degree_cap = 0;
};

// delta = 1/2 (anchor shift + bottom degree of the U-tower of the reduced
// chain).  Throws DegreeCapExceeded when no tower class is found in range.
Rat delta_invariant(const DgModule& s1zp_chain);

struct Delta0Result {
    Rat value;
    int degree = 0;
    ModElt witness;
    int cap_used = 0;
};
// Exhaustive ascending-degree search for the minimal local class; cap
// defaults to 2*hf_red_bound + 4 and is extended automatically when hit.
Delta0Result delta0_invariant(const DgModule& s1zp_chain, long cap_hint = -1);

// dim HF_red by the formula: sum of left drops below a maximal-degree leaf
// plus right drops above it (reads only the unlabelled root).
long hf_red_formula(const LabelledGradedRoot& root);

// Independent oracle: F_2[U]-torsion dimension of the unlabelled root complex.
long hf_red_torsion(const LabelledGradedRoot& root);

// Verifies delta0^(p) - delta = dim HF_red for p > N_Y (p coprime to the
// fibers), including the closed-form witness beta of the theorem.  Returns
// true on success; throws TheoremViolated with details otherwise.
bool check_large_p(const SeifertData& s, long p);

// Full pipeline: Seifert data -> canonical Delta -> labelled root -> chain ->
// report at the given prime.
FroyshovReport froyshov(const SeifertData& s, long p, long degree_cap = -1);

// Convenience: the canonical labelled root (integer master labels) of s,
// horizon N_Y + 2.
LabelledGradedRoot canonical_root(const SeifertData& s);

// The closed-form large-p witness beta = sum_i (-1)^i U^{m_i} x_i; exposed for
// tests.  Requires the chain built from `root` reduced mod p.
ModElt large_p_witness(const DgModule& chain, const LabelledGradedRoot& root);

}  // namespace latroot
