// Existence of level-k local maps R -> M^{tensor n} over the Pin(2) x Z_2
// coefficient dga, decided by exact F_2 linear feasibility on the degree-k
// graded piece: d(alpha) = 0, the Q^k monomial of Coef(alpha; x_0,...,x_0)
// equal to 1 and its U monomial equal to 0 (k = 2).  Remaining coefficient
// monomials are theta-divisible and therefore free, which is exactly the
// criterion "Coef = Q^k + theta y".
//
// Large instances are decided through a sound ladder: SAT found on a
// subcomplex lifts to the full module (subcomplex cycles are cycles), and
// UNSAT proved on a quotient by an outer-block subcomplex implies UNSAT for
// the full module (quotients carry cycles to cycles and fix the anchored
// coefficient).  The ladder terminates at the full module, so answers are
// always exact.
#pragma once

#include <string>

#include "latroot/coeffring.hpp"

namespace latroot {

struct LocalMapReport {
    bool sat = false;
    int copies = 1;
    int level = 0;
    int degree = 0;
    ModElt witness;         // cycle in the tensor power (SAT only)
    std::string route;      // "direct", "subcomplex s=..", "quotient t=.."
    std::size_t sys_rows = 0, sys_cols = 0;  // dimensions of the decided system
    long rank_without = 0, rank_with = 0;    // UNSAT rank certificate
    double seconds = 0.0;
};

// The R-coefficient of the basis tuple (by generator indices into the base
// module) in an element of the n-fold tensor power.
RingElt coef(const DgModule& tensor_mod, int copies, int base_gen_count, const ModElt& x,
             const std::vector<int>& tuple);

// Decides existence of a level-k local map R -> base^{tensor copies}.
// size_limit bounds |piece(k)| * |piece(k+1)| for a direct solve; larger
// systems go through the ladder.
LocalMapReport local_map_exists(const DgModule& base, int copies, int level,
                                std::size_t size_limit = std::size_t(1) << 31);

// Verifies a SAT witness independently: cycle, anchored coefficient in the
// allowed set, and stably nonzero localization.  Throws on failure.
void verify_local_witness(const DgModule& base, int copies, int level, const ModElt& witness);

// Is the projection onto the given leaf generator (plus its mirror when one
// exists) a local map of level 0?
bool projection_is_local(const DgModule& base, const std::string& leaf = "x_0");

// The n = 4 obstruction: formal reduction through the level-0 projection,
// plus a direct quotient-ladder confirmation.
LocalMapReport derive_4copy_obstruction(const DgModule& base);

}  // namespace latroot
