#include <random>

#include "doctest.h"
#include "latroot/compseq.hpp"
#include "latroot/errors.hpp"
#include "latroot/invariants.hpp"
#include "latroot/latticechain.hpp"
#include "test_helpers.hpp"

using namespace latroot;
using namespace latroot::testing;

namespace {

RingElt entry_of(const DgModule& m, const std::string& src, const std::string& tgt) {
    int s = m.gen_index(src), t = m.gen_index(tgt);
    REQUIRE(s >= 0);
    REQUIRE(t >= 0);
    RingElt acc;
    for (const auto& [g, c] : m.diff[static_cast<std::size_t>(s)])
        if (g == t) acc = re_add(m.spec, acc, c);
    return acc;
}

std::string entry_str(const DgModule& m, const std::string& src, const std::string& tgt) {
    return entry_of(m, src, tgt).str();
}

}  // namespace

TEST_CASE("S1xZp chain of Sigma(3,5,19) at a large prime") {
    auto root = canonical_root(sigma_3_5_19());
    auto rp = reduce_mod_p(root, 127);
    auto m = build_s1zp_chain(rp);
    REQUIRE(m.gens.size() == 21);

    // printed differentials (S appears as the variable of R_p)
    CHECK(entry_str(m, "x_0", "y_-1") == "U+58S");
    CHECK(entry_str(m, "x_0", "y_1") == "U+60S");
    CHECK(entry_str(m, "x_1", "y_1") == "U+61S");
    CHECK(entry_str(m, "x_1", "y_2") == "U+72S");
    CHECK(entry_str(m, "x_-1", "y_-1") == "U+57S");
    CHECK(entry_str(m, "x_-1", "y_-2") == "U+46S");
    CHECK(entry_str(m, "x_-5", "y_-5") == "U");
    CHECK(entry_str(m, "x_5", "y_5") == "U+118S");
    // product exponents
    CHECK(entry_of(m, "x_2", "y_3") ==
          re_mul(m.spec, u_exp(m.spec, [] {
                     GroupRingElt e;
                     e.p = 127;
                     e.add(75, 1);
                     return e;
                 }()),
                 u_exp(m.spec, [] {
                     GroupRingElt e;
                     e.p = 127;
                     e.add(87, 1);
                     return e;
                 }())));

    // anchored degrees
    CHECK(m.gens[static_cast<std::size_t>(m.gen_index("x_0"))].degree == 0);
    CHECK(m.gens[static_cast<std::size_t>(m.gen_index("x_5"))].degree == -12);
    CHECK(m.gens[static_cast<std::size_t>(m.gen_index("x_-5"))].degree == -12);
    CHECK(m.gens[static_cast<std::size_t>(m.gen_index("y_4"))].degree == -7);
    CHECK(m.gens[static_cast<std::size_t>(m.gen_index("y_5"))].degree == -13);
}

TEST_CASE("single-leaf root gives a rank-1 free module") {
    auto r = root_from_sequence(std::vector<Int>(4, 0), 2);
    auto m = build_s1zp_chain(r);
    CHECK(m.gens.size() == 1);
    CHECK(m.diff[0].empty());
    CHECK(m.gens[0].degree == 0);
}

TEST_CASE("chains satisfy d^2 = 0 and homogeneity on randomized data") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 12; ++t) {
        auto s = random_brieskorn(rng, 11);
        auto root = canonical_root(s);
        for (long p : {2L, 5L, 31L}) {
            auto m = build_s1zp_chain(reduce_mod_p(root, p));
            check_homogeneous(m);  // throws on failure
            check_d_squared(m);
        }
    }
}

TEST_CASE("p=2 chain is the fold of the large-p chain") {
    auto root = canonical_root(sigma_2_3_19());
    auto big = build_s1zp_chain(reduce_mod_p(root, 97));
    auto two = build_s1zp_chain(reduce_mod_p(root, 2));
    REQUIRE(big.gens.size() == two.gens.size());
    for (std::size_t g = 0; g < big.gens.size(); ++g) {
        CHECK(big.gens[g].name == two.gens[g].name);
        CHECK(big.gens[g].degree == two.gens[g].degree);
        // folding residues of the big-p exponents reproduces the p=2 entries:
        // (U + kS) -> U + (k mod 2) theta^2
        REQUIRE(big.diff[g].size() == two.diff[g].size());
        for (std::size_t e = 0; e < big.diff[g].size(); ++e) {
            RingElt folded;
            for (const auto& [mono, c] : big.diff[g][e].second.terms) {
                Monomial f;
                f.u = mono.u;
                f.t = 2 * mono.s;
                folded = re_add(two.spec, folded, re_monomial(f, c % 2));
            }
            CHECK(folded == two.diff[g][e].second);
        }
    }
}

TEST_CASE("Pin(2) chain of Sigma(3,5,19) equals the printed module") {
    auto root = canonical_root(sigma_3_5_19());
    auto sym = symmetrize(reduce_mod_p(root, 2));
    auto m = build_pin2_chain(sym);
    REQUIRE(m.gens.size() == 21);
    check_homogeneous(m);
    check_d_squared(m);

    auto spec = m.spec;
    Monomial u1, t2, q1, q2;
    u1.u = 1;
    t2.t = 2;
    q1.q = 1;
    q2.q = 2;
    RingElt U = re_monomial(u1);
    RingElt Ut = re_add(spec, U, re_monomial(t2));
    RingElt Q = re_monomial(q1);
    RingElt Q2 = re_monomial(q2);

    CHECK(entry_of(m, "x_0", "y_1") == Ut);
    CHECK(entry_of(m, "x_0", "y_-1") == re_add(spec, Ut, Q2));
    CHECK(entry_of(m, "x_1", "y_1") == U);
    CHECK(entry_of(m, "x_1", "y_2") == Ut);
    CHECK(entry_of(m, "x_1", "y_-1") == Q2);
    CHECK(entry_of(m, "x_1", "y_-2") == Q2);
    CHECK(entry_of(m, "x_1", "x_1") == Q);
    CHECK(entry_of(m, "x_1", "x_-1") == Q);
    CHECK(entry_of(m, "x_-1", "y_-1") == U);
    CHECK(entry_of(m, "x_-1", "y_-2") == Ut);
    CHECK(entry_of(m, "x_-1", "y_-1") == U);
    CHECK(entry_of(m, "x_-1", "y_1").is_zero());
    CHECK(entry_of(m, "x_2", "y_2") == U);
    CHECK(entry_of(m, "x_2", "y_3") == re_mul(spec, U, U));
    CHECK(entry_of(m, "x_2", "y_-3").is_zero());  // U_Q^{2[0]} = 2U = 0
    CHECK(entry_of(m, "x_3", "y_3") == Ut);
    CHECK(entry_of(m, "x_3", "y_4") == re_mul(spec, U, re_mul(spec, Ut, Ut)));
    CHECK(entry_of(m, "x_3", "y_-3") == Q2);
    CHECK(entry_of(m, "x_3", "y_-4") == re_mul(spec, Q2, re_mul(spec, Ut, Ut)));
    CHECK(entry_of(m, "x_4", "y_5") == re_mul(spec, re_mul(spec, U, U), re_mul(spec, Ut, Ut)));
    CHECK(entry_of(m, "x_4", "y_-5").is_zero());  // U_Q^{2[0]+2[1]} = 0
    CHECK(entry_of(m, "x_5", "y_5") == Ut);
    CHECK(entry_of(m, "x_5", "y_-5") == Q2);
    CHECK(entry_of(m, "x_-5", "y_-5") == Ut);
    CHECK(entry_of(m, "y_3", "y_3") == Q);
    CHECK(entry_of(m, "y_3", "y_-3") == Q);
    CHECK(entry_of(m, "y_-3", "y_3") == Q);

    // degrees of the printed module
    CHECK(m.gens[static_cast<std::size_t>(m.gen_index("x_0"))].degree == 0);
    CHECK(m.gens[static_cast<std::size_t>(m.gen_index("y_4"))].degree == -7);
    CHECK(m.gens[static_cast<std::size_t>(m.gen_index("x_5"))].degree == -12);
}

TEST_CASE("Pin(2) chains on random data: d^2 = 0 and SWF-type localization") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 8) {
        auto s = random_brieskorn_small(rng, 40);
        bool all_odd = true;
        for (const auto& [p, q] : s.effective_arms())
            if (p % 2 == 0) all_odd = false;
        if (!all_odd) continue;  // free Z_2-action needs odd fibers
        auto root = reduce_mod_p(canonical_root(s), 2);
        if (!is_reflective(root)) continue;
        auto sym = symmetrize(root);
        auto m = build_pin2_chain(sym);
        check_homogeneous(m);
        check_d_squared(m);
        // rank-1 localized homology: some shift of the R_0 pattern, i.e.
        // exactly one residue class mod 4 is empty and the others have
        // dimension one, over two V-periods
        auto red = reduce_theta(m);
        auto view = make_localized_view(red);
        int n0 = m.gens[static_cast<std::size_t>(
                            m.gen_index(sym.central_leaf ? "x_0" : "y_0"))]
                     .degree;
        int zeros = 0;
        for (int r = 0; r < 4; ++r) {
            long d1 = view.localized_dim(n0 + r);
            long d2 = view.localized_dim(n0 + r + 4);
            CHECK(d1 == d2);
            CHECK(d1 <= 1);
            if (d1 == 0) ++zeros;
        }
        CHECK(zeros == 1);
        ++done;
    }
}

TEST_CASE("central-angle Pin(2) chain assembles and squares to zero") {
    auto root = reduce_mod_p(canonical_root(sigma_3_5_7()), 2);
    auto sym = symmetrize(root);
    REQUIRE_FALSE(sym.central_leaf);
    auto m = build_pin2_chain(sym);
    check_homogeneous(m);
    check_d_squared(m);
    // 4 leaves + 3 angles, central angle contributes one generator
    CHECK(m.gens.size() == 7);
    CHECK(m.gen_index("y_0") >= 0);
}

TEST_CASE("S1 chain localization has rank one for graded-root chains") {
    for (const auto& s : {sigma_2_3_19(), sigma_3_5_19()}) {
        auto m = build_s1zp_chain(reduce_mod_p(canonical_root(s), 2));
        auto mu = reduce_to_u_only(m);
        auto view = make_localized_view(mu);
        CHECK(view.localized_dim(0) == 1);
        CHECK(view.localized_dim(1) == 0);
    }
}

TEST_CASE("pretty printer emits the paper notation") {
    auto root = canonical_root(sigma_3_5_19());
    auto m = build_pin2_chain(symmetrize(reduce_mod_p(root, 2)));
    auto text = pretty_print(m);
    CHECK(text.find("dx_0 = (U+θ^2)y_1 + (U+θ^2+Q^2)y_-1") != std::string::npos);
}
