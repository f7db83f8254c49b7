// Lattice chain models read off labelled planar graded roots: the S^1 x Z_p
// chain over R_p (one generator per leaf and per simple angle) and the
// Pin(2) x Z_2 chain over (F_2[Q,U,theta], dU = Q^3) built from a symmetric
// Z_2-labelled root.
#pragma once

#include "latroot/coeffring.hpp"
#include "latroot/gradedroot.hpp"

namespace latroot {

// Cochain model with generators x_k (leaves) and y_k (angles); differentials
// carry the exponents U^{lambda_A} (left leaf) and U^{lambda_A + lambda_V -
// lambda_V'} (right leaf).  Degrees are anchored so the maximal-degree (i.e.
// minimal-weight) leaf generator sits in degree 0.
DgModule build_s1zp_chain(const LabelledGradedRoot& r);

// Pin(2) x Z_2 lattice chain from a symmetric root (p = 2 labels).  Leaf and
// angle pairs become rank-2 blocks with internal differential Q(x_+ + x_-);
// the centre contributes a single free generator.  Q^2 U_Q corrections are
// attached per the printed convention (negative-index targets).  The residue
// labels are translated by `twist` before use; twist = -1 picks the shift of
// the central leaf/angle sequence index, which reproduces the printed module
// for Sigma(3,5,19).
DgModule build_pin2_chain(const SymmetricLabelledRoot& sr, int twist = -1);

// Paper-style rendering, one line per generator with nonzero differential.
std::string pretty_print(const DgModule& m);

// Integer index of the named generator's block ("x_-3" -> 3, "y_2" -> 2).
int block_index(const std::string& gen_name);

}  // namespace latroot
