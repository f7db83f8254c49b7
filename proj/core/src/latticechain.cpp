#include "latroot/latticechain.hpp"

#include <algorithm>

#include "latroot/errors.hpp"

namespace latroot {

namespace {

// Symmetric display index of leaf position i among n leaves: ...,-1,0,1,...
// (odd count) or ...,-1,1,... (even count).
long sym_index(long i, long n) {
    if (n % 2 == 1) return i - (n - 1) / 2;
    long idx = i - n / 2;
    return idx >= 0 ? idx + 1 : idx;
}

std::string gen_name(const char* prefix, long k) {
    return std::string(prefix) + "_" + std::to_string(k);
}

}  // namespace

int block_index(const std::string& gen_name) {
    auto pos = gen_name.find('_');
    long v = std::stol(gen_name.substr(pos + 1));
    return static_cast<int>(v < 0 ? -v : v);
}

DgModule build_s1zp_chain(const LabelledGradedRoot& r) {
    if (r.p < 2)
        throw InputError("latticechain.OutOfRange", "labels must be reduced mod a prime first");
    RingSpec spec = RingSpec::s1zp(r.p);
    DgModule m;
    m.spec = spec;

    const long n = static_cast<long>(r.leaves.size());
    const Int chi_min = r.min_leaf_chi();

    // leaf generators
    std::vector<int> leaf_gen(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        Int deg = 2 * (chi_min - r.leaves[static_cast<std::size_t>(i)].chi);
        leaf_gen[static_cast<std::size_t>(i)] = static_cast<int>(m.gens.size());
        m.gens.push_back({gen_name("x", sym_index(i, n)), static_cast<int>(to_long(deg))});
    }
    // angle generators; the angle between leaves i and i+1 is named after its
    // outer leaf (y_0 for the central angle of an even-count root)
    std::vector<int> angle_gen(r.angles.size());
    for (long k = 0; k + 1 < n; ++k) {
        long a = sym_index(k, n), b = sym_index(k + 1, n);
        long label = (b <= 0) ? a : (a >= 0 ? b : 0);
        long na = r.angles[static_cast<std::size_t>(k)].lambda_a.norm();
        int deg = m.gens[static_cast<std::size_t>(leaf_gen[static_cast<std::size_t>(k)])].degree + 1 -
                  2 * static_cast<int>(na);
        angle_gen[static_cast<std::size_t>(k)] = static_cast<int>(m.gens.size());
        m.gens.push_back({gen_name("y", label), deg});
    }

    m.diff.resize(m.gens.size());
    for (long k = 0; k + 1 < n; ++k) {
        const auto& ang = r.angles[static_cast<std::size_t>(k)];
        const auto& left = r.leaves[static_cast<std::size_t>(k)];
        const auto& right = r.leaves[static_cast<std::size_t>(k + 1)];
        GroupRingElt left_exp = ang.lambda_a;
        GroupRingElt right_exp = ang.lambda_a + left.lambda_v - right.lambda_v;
        if (!left_exp.nonneg() || !right_exp.nonneg())
            throw InvariantViolation("latticechain.InhomogeneousDifferential",
                                     "angle exponent with negative coefficients");
        m.diff[static_cast<std::size_t>(leaf_gen[static_cast<std::size_t>(k)])].emplace_back(
            angle_gen[static_cast<std::size_t>(k)], u_exp(spec, left_exp));
        m.diff[static_cast<std::size_t>(leaf_gen[static_cast<std::size_t>(k + 1)])].emplace_back(
            angle_gen[static_cast<std::size_t>(k)], u_exp(spec, right_exp));
    }

    check_homogeneous(m);
    check_d_squared(m);
    return m;
}

DgModule build_pin2_chain(const SymmetricLabelledRoot& sr, int twist) {
    const LabelledGradedRoot& r = sr.root;
    if (r.p != 2) throw InputError("latticechain.OutOfRange", "Pin(2) chain needs p = 2 labels");
    if (!is_reflective(r))
        throw InvariantViolation("gradedroot.NotReflective", "Pin(2) chain needs a reflective root");

    if (twist < 0) {
        long center_seq = sr.central_leaf
                              ? r.leaves[static_cast<std::size_t>(sr.center)].seq_index
                              : r.angles[static_cast<std::size_t>(sr.center)].seq_index;
        twist = static_cast<int>(((center_seq % 2) + 2) % 2);
    }
    auto tw = [&](const GroupRingElt& e) { return e.shifted(-twist); };

    RingSpec spec = RingSpec::pin2z2();
    DgModule m;
    m.spec = spec;
    const long count = static_cast<long>(r.leaves.size());
    const Int chi_min = r.min_leaf_chi();
    auto leaf_deg = [&](long pos) {
        return static_cast<int>(to_long(2 * (chi_min - r.leaves[static_cast<std::size_t>(pos)].chi)));
    };

    Monomial mq;
    mq.q = 1;
    Monomial mq2;
    mq2.q = 2;
    const RingElt Q = re_monomial(mq);
    const RingElt Q2 = re_monomial(mq2);

    std::map<long, int> gen_of;  // display index -> generator (x: key, y: key + offset)
    auto add_gen = [&](const char* prefix, long k, int deg) {
        int id = static_cast<int>(m.gens.size());
        m.gens.push_back({gen_name(prefix, k), deg});
        return id;
    };

    if (sr.central_leaf) {
        const long nside = (count - 1) / 2;  // leaf pairs on each side
        const long c = sr.center;
        // exponents per side index i = 1..nside (positive side; reflectivity
        // makes the mirrors agree)
        std::vector<GroupRingElt> A(static_cast<std::size_t>(nside) + 1),
            B(static_cast<std::size_t>(nside) + 1);
        for (long i = 1; i <= nside; ++i) {
            const auto& ang = r.angles[static_cast<std::size_t>(c + i - 1)];
            const auto& lf = r.leaves[static_cast<std::size_t>(c + i - 1)];
            const auto& rf = r.leaves[static_cast<std::size_t>(c + i)];
            A[static_cast<std::size_t>(i)] = tw(ang.lambda_a);
            B[static_cast<std::size_t>(i)] = tw(ang.lambda_a + lf.lambda_v - rf.lambda_v);
        }
        int x0 = add_gen("x", 0, leaf_deg(c));
        std::vector<int> xp(static_cast<std::size_t>(nside) + 1), xn(xp.size()), yp(xp.size()),
            yn(xp.size());
        for (long i = 1; i <= nside; ++i) {
            xp[static_cast<std::size_t>(i)] = add_gen("x", i, leaf_deg(c + i));
            xn[static_cast<std::size_t>(i)] = add_gen("x", -i, leaf_deg(c - i));
            int ydeg = leaf_deg(c + i - 1) + 1 -
                       2 * static_cast<int>(A[static_cast<std::size_t>(i)].norm());
            yp[static_cast<std::size_t>(i)] = add_gen("y", i, ydeg);
            yn[static_cast<std::size_t>(i)] = add_gen("y", -i, ydeg);
        }
        m.diff.resize(m.gens.size());
        auto& dx0 = m.diff[static_cast<std::size_t>(x0)];
        RingElt uA1 = u_exp(spec, A[1]);
        dx0.emplace_back(yp[1], uA1);
        dx0.emplace_back(yn[1], re_add(spec, uA1, re_mul(spec, Q2, uq_exp(A[1]))));
        for (long i = 1; i <= nside; ++i) {
            auto& dxp = m.diff[static_cast<std::size_t>(xp[static_cast<std::size_t>(i)])];
            auto& dxn = m.diff[static_cast<std::size_t>(xn[static_cast<std::size_t>(i)])];
            dxp.emplace_back(xp[static_cast<std::size_t>(i)], Q);
            dxp.emplace_back(xn[static_cast<std::size_t>(i)], Q);
            dxn.emplace_back(xp[static_cast<std::size_t>(i)], Q);
            dxn.emplace_back(xn[static_cast<std::size_t>(i)], Q);
            RingElt uB = u_exp(spec, B[static_cast<std::size_t>(i)]);
            RingElt qB = re_mul(spec, Q2, uq_exp(B[static_cast<std::size_t>(i)]));
            dxp.emplace_back(yp[static_cast<std::size_t>(i)], uB);
            if (!qB.is_zero()) dxp.emplace_back(yn[static_cast<std::size_t>(i)], qB);
            dxn.emplace_back(yn[static_cast<std::size_t>(i)], uB);
            if (i < nside) {
                RingElt uA = u_exp(spec, A[static_cast<std::size_t>(i + 1)]);
                RingElt qA = re_mul(spec, Q2, uq_exp(A[static_cast<std::size_t>(i + 1)]));
                dxp.emplace_back(yp[static_cast<std::size_t>(i + 1)], uA);
                if (!qA.is_zero()) dxp.emplace_back(yn[static_cast<std::size_t>(i + 1)], qA);
                dxn.emplace_back(yn[static_cast<std::size_t>(i + 1)], uA);
            }
            auto& dyp = m.diff[static_cast<std::size_t>(yp[static_cast<std::size_t>(i)])];
            auto& dyn = m.diff[static_cast<std::size_t>(yn[static_cast<std::size_t>(i)])];
            dyp.emplace_back(yp[static_cast<std::size_t>(i)], Q);
            dyp.emplace_back(yn[static_cast<std::size_t>(i)], Q);
            dyn.emplace_back(yp[static_cast<std::size_t>(i)], Q);
            dyn.emplace_back(yn[static_cast<std::size_t>(i)], Q);
        }
    } else {
        const long nside = count / 2;
        const long ca = sr.center;  // central angle index; leaves ca, ca+1 are v_{-1}, v_1
        std::vector<GroupRingElt> A(static_cast<std::size_t>(nside)),
            B(static_cast<std::size_t>(nside));
        A[0] = tw(r.angles[static_cast<std::size_t>(ca)].lambda_a);
        for (long i = 1; i < nside; ++i) {
            const auto& ang = r.angles[static_cast<std::size_t>(ca + i)];
            const auto& lf = r.leaves[static_cast<std::size_t>(ca + i)];
            const auto& rf = r.leaves[static_cast<std::size_t>(ca + i + 1)];
            A[static_cast<std::size_t>(i)] = tw(ang.lambda_a);
            B[static_cast<std::size_t>(i)] = tw(ang.lambda_a + lf.lambda_v - rf.lambda_v);
        }
        std::vector<int> xp(static_cast<std::size_t>(nside) + 1), xn(xp.size()), yp(xp.size()),
            yn(xp.size());
        for (long i = 1; i <= nside; ++i) {
            xp[static_cast<std::size_t>(i)] = add_gen("x", i, leaf_deg(ca + i));
            xn[static_cast<std::size_t>(i)] = add_gen("x", -i, leaf_deg(ca + 1 - i));
        }
        int y0 = add_gen("y", 0, leaf_deg(ca + 1) + 1 - 2 * static_cast<int>(A[0].norm()));
        for (long i = 2; i <= nside; ++i) {
            int ydeg = leaf_deg(ca + i - 1) + 1 -
                       2 * static_cast<int>(A[static_cast<std::size_t>(i - 1)].norm());
            yp[static_cast<std::size_t>(i)] = add_gen("y", i, ydeg);
            yn[static_cast<std::size_t>(i)] = add_gen("y", -i, ydeg);
        }
        m.diff.resize(m.gens.size());
        for (long i = 1; i <= nside; ++i) {
            auto& dxp = m.diff[static_cast<std::size_t>(xp[static_cast<std::size_t>(i)])];
            auto& dxn = m.diff[static_cast<std::size_t>(xn[static_cast<std::size_t>(i)])];
            dxp.emplace_back(xp[static_cast<std::size_t>(i)], Q);
            dxp.emplace_back(xn[static_cast<std::size_t>(i)], Q);
            dxn.emplace_back(xp[static_cast<std::size_t>(i)], Q);
            dxn.emplace_back(xn[static_cast<std::size_t>(i)], Q);
            if (i == 1) {
                RingElt uA0 = u_exp(spec, A[0]);
                dxp.emplace_back(y0, uA0);
                dxn.emplace_back(y0, re_add(spec, uA0, re_mul(spec, Q2, uq_exp(A[0]))));
            } else {
                RingElt uB = u_exp(spec, B[static_cast<std::size_t>(i - 1)]);
                RingElt qB = re_mul(spec, Q2, uq_exp(B[static_cast<std::size_t>(i - 1)]));
                dxp.emplace_back(yp[static_cast<std::size_t>(i)], uB);
                if (!qB.is_zero()) dxp.emplace_back(yn[static_cast<std::size_t>(i)], qB);
                dxn.emplace_back(yn[static_cast<std::size_t>(i)], uB);
            }
            if (i < nside) {
                RingElt uA = u_exp(spec, A[static_cast<std::size_t>(i)]);
                RingElt qA = re_mul(spec, Q2, uq_exp(A[static_cast<std::size_t>(i)]));
                dxp.emplace_back(yp[static_cast<std::size_t>(i + 1)], uA);
                if (!qA.is_zero()) dxp.emplace_back(yn[static_cast<std::size_t>(i + 1)], qA);
                dxn.emplace_back(yn[static_cast<std::size_t>(i + 1)], uA);
            }
        }
        for (long i = 2; i <= nside; ++i) {
            auto& dyp = m.diff[static_cast<std::size_t>(yp[static_cast<std::size_t>(i)])];
            auto& dyn = m.diff[static_cast<std::size_t>(yn[static_cast<std::size_t>(i)])];
            dyp.emplace_back(yp[static_cast<std::size_t>(i)], Q);
            dyp.emplace_back(yn[static_cast<std::size_t>(i)], Q);
            dyn.emplace_back(yp[static_cast<std::size_t>(i)], Q);
            dyn.emplace_back(yn[static_cast<std::size_t>(i)], Q);
        }
    }

    check_homogeneous(m);
    check_d_squared(m);
    return m;
}

std::string pretty_print(const DgModule& m) {
    std::string out;
    for (std::size_t g = 0; g < m.gens.size(); ++g) {
        if (m.diff[g].empty()) continue;
        ModElt e;
        for (const auto& [t, c] : m.diff[g]) e.emplace_back(t, c);
        out += "d" + m.gens[g].name + " = " + mod_str(m, e) + "\n";
    }
    return out;
}

}  // namespace latroot
