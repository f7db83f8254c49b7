#include "doctest.h"
#include "latroot/errors.hpp"
#include "latroot/invariants.hpp"
#include "latroot/localmaps.hpp"
#include "test_helpers.hpp"

using namespace latroot;
using namespace latroot::testing;

namespace {

DgModule module_m() {
    auto root = canonical_root(sigma_3_5_19());
    return build_pin2_chain(symmetrize(reduce_mod_p(root, 2)));
}

}  // namespace

TEST_CASE("coef extraction") {
    auto m = module_m();
    auto tp = tensor_power(m, 3);
    int x0 = m.gen_index("x_0");
    const int G = static_cast<int>(m.gens.size());
    int idx = (x0 * G + x0) * G + x0;
    Monomial q2;
    q2.q = 2;
    ModElt x{{idx, re_monomial(q2)}};
    auto c = coef(tp, 3, G, x, {x0, x0, x0});
    CHECK(c == re_monomial(q2));
    CHECK(coef(tp, 3, G, x, {x0, x0, m.gen_index("y_1")}).is_zero());
}

TEST_CASE("level-1 map exists into M with the printed witness") {
    auto m = module_m();
    auto rep = local_map_exists(m, 1, 1);
    CHECK(rep.sat);
    // the canonical witness f(1) = Q x_0 + (U + theta^2) y_-1 is a valid
    // cycle with the right coefficient; the solver's witness verifies too
    Monomial q1, u1, t2;
    q1.q = 1;
    u1.u = 1;
    t2.t = 2;
    ModElt f1{{m.gen_index("x_0"), re_monomial(q1)},
              {m.gen_index("y_-1"), re_add(m.spec, re_monomial(u1), re_monomial(t2))}};
    CHECK(d_of(m, f1).empty());
    verify_local_witness(m, 1, 1, f1);
    verify_local_witness(m, 1, 1, rep.witness);
}

TEST_CASE("no level-0 map into M") {
    auto m = module_m();
    auto rep = local_map_exists(m, 1, 0);
    CHECK_FALSE(rep.sat);
}

TEST_CASE("level-2 map exists into M tensor M") {
    auto m = module_m();
    auto rep = local_map_exists(m, 2, 2);
    CHECK(rep.sat);
    verify_local_witness(m, 2, 2, rep.witness);

    // the tensor square of the level-1 witness is a pure-paper witness
    Monomial q1, u1, t2;
    q1.q = 1;
    u1.u = 1;
    t2.t = 2;
    RingElt Ut = re_add(m.spec, re_monomial(u1), re_monomial(t2));
    int x0 = m.gen_index("x_0"), ym1 = m.gen_index("y_-1");
    const int G = static_cast<int>(m.gens.size());
    auto pair_idx = [G](int a, int b) { return a * G + b; };
    ModElt sq{{pair_idx(x0, x0), re_monomial(Monomial{0, 0, 0, 2, 0})},
              {pair_idx(x0, ym1), re_mul(m.spec, re_monomial(q1), Ut)},
              {pair_idx(ym1, x0), re_mul(m.spec, re_monomial(q1), Ut)},
              {pair_idx(ym1, ym1), re_mul(m.spec, Ut, Ut)}};
    verify_local_witness(m, 2, 2, sq);
}

TEST_CASE("no level-2 map into M tensor 3") {
    auto m = module_m();
    auto rep = local_map_exists(m, 3, 2);
    CHECK_FALSE(rep.sat);
    CHECK(rep.sys_rows > 0);  // a rank certificate was recorded
    CHECK(rep.rank_with >= rep.rank_without);
}

TEST_CASE("no level-2 map into M tensor 4 (reduction and direct)") {
    auto m = module_m();
    auto rep = derive_4copy_obstruction(m);
    CHECK_FALSE(rep.sat);
}

TEST_CASE("level bookkeeping composes with the projection") {
    // (id x p) of the tensor-square witness is Q f(1), a level-2 witness in M
    auto m = module_m();
    Monomial q1, u1, t2, q2;
    q1.q = 1;
    u1.u = 1;
    t2.t = 2;
    q2.q = 2;
    RingElt Ut = re_add(m.spec, re_monomial(u1), re_monomial(t2));
    ModElt composed{{m.gen_index("x_0"), re_monomial(q2)},
                    {m.gen_index("y_-1"), re_mul(m.spec, re_monomial(q1), Ut)}};
    CHECK(d_of(m, composed).empty());
    verify_local_witness(m, 1, 2, composed);
}

TEST_CASE("projections and locality") {
    auto m = module_m();
    CHECK(projection_is_local(m, "x_0"));
    CHECK_FALSE(projection_is_local(m, "x_5"));

    DgModule free;
    free.spec = RingSpec::pin2z2();
    free.gens = {{"x_0", 0}};
    free.diff.resize(1);
    CHECK(projection_is_local(free, "x_0"));
}

TEST_CASE("solver determinism") {
    auto m = module_m();
    auto a = local_map_exists(m, 1, 1);
    auto b = local_map_exists(m, 1, 1);
    CHECK(a.witness == b.witness);
    CHECK(a.route == b.route);
}
