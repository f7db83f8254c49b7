// Planar graded roots from eventually increasing integer sequences, with
// Z[Z_p] leaf and angle labels, reflectivity test and symmetrization.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "latroot/numeric.hpp"

namespace latroot {

// Formal Z-linear combination of Z_p elements.  p == 0 is the integer-indexed
// master record (no reduction applied yet).
struct GroupRingElt {
    long p = 0;
    std::map<long, long> c;  // residue -> coefficient, zeros erased

    void add(long residue, long coeff);
    long norm() const;  // |x| = sum of coefficients
    bool nonneg() const;
    GroupRingElt reduced(long p) const;
    GroupRingElt shifted(long k) const;  // residues translated by k (mod p if p > 0)
    bool is_zero() const { return c.empty(); }

    friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b);
    friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b);
    bool operator==(const GroupRingElt&) const = default;

    // "[0]-[1]+2[6]" style; "0" when empty.
    std::string str() const;
};

struct LabelledGradedRoot {
    struct Leaf {
        long seq_index = 0;  // first index of the minimising run
        Int chi;
        GroupRingElt lambda_v;
        std::string name;  // v_{-m}..v_m naming
    };
    struct Angle {
        long seq_index = 0;  // interior maximiser j
        Int chi;
        GroupRingElt lambda_a;
        std::string name;  // "(v_a,v_b)"
    };

    long p = 0;  // label modulus (0 = integer master)
    std::vector<Leaf> leaves;    // left to right
    std::vector<Angle> angles;   // angles[k] joins leaves[k], leaves[k+1]

    Int min_leaf_chi() const;
    Int max_leaf_chi() const;
};

// Builds the labelled root of the sequence n_0..n_H.  The sequence must be
// nondecreasing from its last recorded local minimum on (the caller passes a
// horizon with that property; Delta-profiles use horizon >= N_Y + 2).
LabelledGradedRoot root_from_sequence(const std::vector<Int>& n, long p);

LabelledGradedRoot reduce_mod_p(const LabelledGradedRoot& r, long p);

// The two reflectivity conditions on labels.
bool is_reflective(const LabelledGradedRoot& r);

struct SymmetricLabelledRoot {
    LabelledGradedRoot root;
    bool central_leaf = false;  // otherwise central angle
    int center = 0;             // leaf index (central leaf) or angle index (central angle)
};

// Throws NotReflective when the conditions fail.
SymmetricLabelledRoot symmetrize(const LabelledGradedRoot& r);

// Equivalence of labelled roots: equal weights up to a common shift and equal
// labels up to a global cyclic residue shift plus a global lambda_V offset.
bool equivalent(const LabelledGradedRoot& a, const LabelledGradedRoot& b);

}  // namespace latroot
