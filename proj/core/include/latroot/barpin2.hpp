// Desk-scale verification of the bar-construction model of C_*(BPin(2);F_2):
// the 8-dimensional cellular dga A_0 = F_2<s,j>/(sj+j^3s, s^2, j^4+1), its
// two-sided bar complex, the generating cycles phi (degree 1) and psi (degree
// 4), the twisting morphism Phi_0 and the induced quasi-isomorphism Phi from
// the dual coalgebra of (F_2[Q,U], dU = Q^3).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latroot {

struct FiniteDgaChecks {
    bool associative = false;
    bool leibniz = false;
    bool d_squared = false;
    bool relations = false;  // sj = j^3 s, s^2 = 0, j^4 = 1
    bool ok() const { return associative && leibniz && d_squared && relations; }
};

// Structural checks of A_0 on all basis pairs/triples.
FiniteDgaChecks verify_a0();

// dim H_d(B A_0) for 0 <= d <= max_degree (word-degree truncation).
std::vector<long> bar_homology(int max_degree);

// Are [phi] and [psi] nonzero (hence generators of H_1 and H_4)?
bool phi_nontrivial();
bool psi_nontrivial();

// The twisting identity d Phi_0 + Phi_0 d = mu (Phi_0 x Phi_0) Delta on the
// monomial grid Q^i U^j, i <= 6, j <= 3 (vanishing outside the support is part
// of the check).  On failure, *offending names the first bad monomial.
bool verify_twisting(std::string* offending = nullptr);

// Phi is a chain map and induces isomorphisms H_d for d <= max_degree; also
// checks Phi(Q) = phi and Phi(U^2) = psi.
bool verify_phi_quasi_iso(int max_degree);

}  // namespace latroot
