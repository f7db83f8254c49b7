#include "doctest.h"
#include "latroot/barpin2.hpp"

using namespace latroot;

TEST_CASE("A0 is a well-formed dga") {
    auto c = verify_a0();
    CHECK(c.associative);
    CHECK(c.leibniz);
    CHECK(c.d_squared);
    CHECK(c.relations);
}

TEST_CASE("bar homology dims match Z_2[Q,V]/(Q^3)") {
    auto dims = bar_homology(8);
    std::vector<long> want{1, 1, 1, 0, 1, 1, 1, 0, 1};
    CHECK(dims == want);
}

TEST_CASE("phi and psi are nontrivial cycles") {
    CHECK(phi_nontrivial());
    CHECK(psi_nontrivial());
}

TEST_CASE("twisting identity holds on the monomial grid") {
    std::string off;
    CHECK(verify_twisting(&off));
    CHECK(off.empty());
}

TEST_CASE("Phi is a quasi-isomorphism through degree 8") {
    CHECK(verify_phi_quasi_iso(8));
}
