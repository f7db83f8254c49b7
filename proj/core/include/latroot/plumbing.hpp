// Star-shaped negative definite plumbing graphs built from Seifert invariants,
// and the characteristic data attached to them: intersection form, canonical
// class, Wu cycle, reduced Spin^c index set and the horizon N_Y.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latroot/linalg.hpp"
#include "latroot/numeric.hpp"

namespace latroot {

// Seifert data (e0; (p_1,q_1),...,(p_nu,q_nu)).  Arms equal to (1,1) are
// accepted as padding and dropped before any computation.
struct SeifertData {
    Int e0;
    std::vector<std::pair<Int, Int>> arms;

    // Arms with (p,q) != (1,1), in input order.
    std::vector<std::pair<Int, Int>> effective_arms() const;
    // |e0 * prod(p) + sum_l q_l * prod_{l' != l} p_{l'}|
    Int h1_order() const;
    void validate() const;  // throws InputError
};

enum class Basis { Node, Dual };

// A vector indexed by the nodes of a plumbing graph.  Node basis elements are
// cycles x = sum m_v(x) v; dual basis elements are functionals (values k(v)).
struct LatticeVector {
    Basis basis = Basis::Node;
    std::vector<Rat> c;

    const Rat& at(int v) const { return c[static_cast<std::size_t>(v)]; }
    bool integral() const;
};

struct PlumbingGraph {
    std::vector<Int> weights;                  // node order: v_c, arm 1 outward, arm 2, ...
    std::vector<std::pair<int, int>> edges;    // (i,j) with i < j
    int central = 0;
    std::vector<std::pair<int, int>> arm_of;   // node -> (arm index, 1-based position); central = (-1,0)
    std::vector<std::vector<int>> adj;

    int node_count() const { return static_cast<int>(weights.size()); }
    void finalize();  // fills adj from edges
};

// Selects a Spin^c structure: the canonical one (SI_red zero vector) or an
// explicit reduced Seifert invariant vector (a_0,...,a_nu).
struct SpincSelector {
    bool canonical = true;
    std::vector<Int> a;

    static SpincSelector Canonical() { return {}; }
    static SpincSelector SIRed(std::vector<Int> v) { return {false, std::move(v)}; }
};

// Negative continued fraction p/q = [k_1,...,k_s], all k_i >= 2.
// Returns the empty list for (1,1).
std::vector<Int> neg_cont_frac(const Int& p, const Int& q);

// Builds the star-shaped plumbing graph; throws NotNegativeDefinite when the
// result fails the minor test (inconsistent input).
PlumbingGraph build_plumbing(const SeifertData& s);

IntMatrix intersection_matrix(const PlumbingGraph& g);

bool is_negative_definite(const IntMatrix& q);

struct CanonicalClass {
    LatticeVector dual;  // K(v) = -w(v) - 2
    LatticeVector node;  // m_v(K), rational in general
};
CanonicalClass canonical_class(const PlumbingGraph& g);

// N_Y = ((nu-2) prod p - sum_l prod_{l' != l} p)/|H_1|, exact rational.
Rat n_y_rat(const SeifertData& s);
// Integer N_Y; throws the NonIntegral diagnostic when the rational value is
// not an integer (non-self-conjugate canonical structure).
Int n_y(const SeifertData& s);

struct SiRedResult {
    std::vector<std::vector<Int>> vectors;          // full range i >= 1 (with rigorous cutoff)
    std::vector<std::vector<Int>> printed_range;    // the i = 1..nu variant, as printed
    bool cardinality_ok = false;                    // |vectors| == |H_1|
    bool printed_range_agrees = false;
    Int h1;
};
// Enumerates SI_red(Y).  The full-range variant is the primary result; the
// printed finite-range variant is kept for the cross-check and the two are
// diffed.  A cardinality mismatch of the primary result raises
// CardinalityMismatch; a disagreement of the printed variant is only recorded.
SiRedResult si_red_enumerate(const SeifertData& s);

struct WuData {
    std::vector<Int> lambda;   // 0/1 coefficients of the spherical Wu class
    std::vector<Int> x_can;    // Wu = K + 2 x_can, node basis
    Int m_vc;                  // m_{v_c}(x_can) = N_hat
};
// Requires the canonical Spin^c structure to be self-conjugate (m(K) integral)
// and |det Q| odd; throws NotSelfConjugate otherwise.
WuData wu_cycle(const PlumbingGraph& g);

// N_hat: N/2 + 1 for even N, (N+1)/2 for odd N.
Int n_hat(const Int& n);

}  // namespace latroot
