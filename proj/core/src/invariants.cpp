#include "latroot/invariants.hpp"

#include <algorithm>

#include "latroot/errors.hpp"

namespace latroot {

namespace {

int min_gen_degree(const DgModule& m) {
    int d = m.gens.front().degree;
    for (const auto& g : m.gens) d = std::min(d, g.degree);
    return d;
}

int max_gen_degree(const DgModule& m) {
    int d = m.gens.front().degree;
    for (const auto& g : m.gens) d = std::max(d, g.degree);
    return d;
}

// Upper bound for the total U-depth of torsion: half the summed degrees of
// all differential entries.
long torsion_depth_bound(const DgModule& m) {
    long total = 0;
    for (const auto& row : m.diff)
        for (const auto& [t, c] : row)
            if (!c.is_zero()) total += c.degree();
    return total / 2 + 2;
}

// Project a cycle of the full module onto the reduced module's graded piece.
PieceVec project_cycle(const DgModule& reduced, const GradedPiece& piece, const ModElt& x) {
    ModElt filtered;
    for (const auto& [g, c] : x) {
        RingElt fc;
        for (const auto& [mono, coeff] : c.terms) {
            bool keep = false;
            switch (reduced.spec.kind) {
                case RingKind::UPoly:
                    keep = (mono.s == 0 && mono.r == 0 && mono.t == 0 && mono.q == 0);
                    break;
                case RingKind::Pin2:
                    keep = (mono.t == 0);
                    break;
                default:
                    keep = true;
            }
            if (keep) fc.terms.emplace_back(mono, coeff);
        }
        if (!fc.is_zero()) filtered.emplace_back(g, fc);
    }
    return to_piece_vec(reduced, piece, filtered);
}

}  // namespace

Rat delta_invariant(const DgModule& s1zp_chain) {
    DgModule mu = reduce_to_u_only(s1zp_chain);
    auto view = make_localized_view(mu);
    int lo = min_gen_degree(mu);
    int hi = max_gen_degree(mu) + 2 * static_cast<int>(torsion_depth_bound(mu)) + 4;
    for (int d = lo; d <= hi; ++d) {
        GradedPiece piece = enumerate_piece(mu, d);
        if (piece.dim() == 0) continue;
        GradedPiece above = enumerate_piece(mu, d + 1);
        auto cycles = cycle_basis(mu, piece, above);
        if (cycles.empty()) continue;
        if (view.stable_rank(d, cycles) > 0)
            return (s1zp_chain.anchor_shift + d) / 2;
    }
    throw InvariantViolation("invariants.DegreeCapExceeded", "no U-tower class found in range");
}

Delta0Result delta0_invariant(const DgModule& s1zp_chain, long cap_hint) {
    DgModule mu = reduce_to_u_only(s1zp_chain);
    auto view = make_localized_view(mu);
    int lo = min_gen_degree(s1zp_chain);
    long cap = cap_hint >= 0 ? cap_hint
                             : 2 * torsion_depth_bound(s1zp_chain) + 4;
    for (;;) {
        for (int d = lo; d <= cap; ++d) {
            GradedPiece full_piece = enumerate_piece(s1zp_chain, d);
            if (full_piece.dim() == 0) continue;
            GradedPiece full_above = enumerate_piece(s1zp_chain, d + 1);
            auto cycles = cycle_basis(s1zp_chain, full_piece, full_above);
            if (cycles.empty()) continue;

            GradedPiece red_piece = enumerate_piece(mu, d);
            std::vector<PieceVec> projected;
            projected.reserve(cycles.size());
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < cycles.size(); ++i) {
                ModElt elt = from_piece_vec(s1zp_chain, full_piece, cycles[i]);
                projected.push_back(project_cycle(mu, red_piece, elt));
                keep.push_back(i);
            }
            int witness_row = -1;
            if (view.stable_rank(d, projected, &witness_row) > 0) {
                Delta0Result res;
                res.degree = d;
                res.value = (s1zp_chain.anchor_shift + d) / 2;
                res.cap_used = static_cast<int>(cap);
                if (witness_row >= 0)
                    res.witness =
                        from_piece_vec(s1zp_chain, full_piece, cycles[keep[static_cast<std::size_t>(witness_row)]]);
                return res;
            }
        }
        cap = cap * 2 + 8;  // extend on DegreeCapExceeded
        if (cap > 4096)
            throw InvariantViolation("invariants.DegreeCapExceeded",
                                     "no local class found below the extension limit");
    }
}

long hf_red_formula(const LabelledGradedRoot& root) {
    const auto& leaves = root.leaves;
    const auto& angles = root.angles;
    if (leaves.size() <= 1) return 0;
    // maximal-degree leaf = minimal chi
    std::size_t ell = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (leaves[i].chi < leaves[ell].chi) ell = i;
    Int total = 0;
    for (std::size_t j = 0; j < angles.size(); ++j) {
        if (j < ell)
            total += angles[j].chi - leaves[j].chi;  // n^- of angle j (left leaf drop)
        else
            total += angles[j].chi - leaves[j + 1].chi;  // n^+ (right leaf drop)
    }
    return to_long(total);
}

namespace {

// Univariate polynomials over F_2, dense coefficient vectors without trailing
// zeros; enough machinery to diagonalize a matrix over the PID F_2[U].
using F2Poly = std::vector<unsigned char>;

int pdeg(const F2Poly& p) { return static_cast<int>(p.size()) - 1; }

void ptrim(F2Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

F2Poly paddmul(const F2Poly& a, const F2Poly& b, int shift) {
    // a + U^shift * b
    F2Poly out = a;
    if (out.size() < b.size() + static_cast<std::size_t>(shift))
        out.resize(b.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < b.size(); ++i) out[i + static_cast<std::size_t>(shift)] ^= b[i];
    ptrim(out);
    return out;
}

// a mod b and a div b
std::pair<F2Poly, F2Poly> pdivmod(F2Poly a, const F2Poly& b) {
    F2Poly q;
    while (pdeg(a) >= pdeg(b) && !a.empty()) {
        int shift = pdeg(a) - pdeg(b);
        if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<std::size_t>(shift) + 1, 0);
        q[static_cast<std::size_t>(shift)] ^= 1;
        a = paddmul(a, b, shift);
    }
    ptrim(q);
    return {q, a};
}

// Total F_2-dimension of the torsion of coker(d) for a matrix over F_2[U],
// by full diagonalization (row/column operations over the PID).
long poly_matrix_torsion_dim(std::vector<std::vector<F2Poly>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    long total = 0;
    std::size_t top = 0;
    while (top < rows && top < cols) {
        // find the nonzero entry of minimal degree in the remaining block
        int best_deg = -1;
        std::size_t br = top, bc = top;
        for (std::size_t r = top; r < rows; ++r)
            for (std::size_t c = top; c < cols; ++c)
                if (!a[r][c].empty() && (best_deg < 0 || pdeg(a[r][c]) < best_deg)) {
                    best_deg = pdeg(a[r][c]);
                    br = r;
                    bc = c;
                }
        if (best_deg < 0) break;
        std::swap(a[top], a[br]);
        for (std::size_t r = top; r < rows; ++r) std::swap(a[r][top], a[r][bc]);

        bool clean = true;
        for (std::size_t r = top + 1; r < rows; ++r) {
            if (a[r][top].empty()) continue;
            auto [q, rem] = pdivmod(a[r][top], a[top][top]);
            // row_r -= q * row_top
            for (std::size_t c = top; c < cols; ++c) {
                if (a[top][c].empty() || q.empty()) {
                    if (c == top) a[r][c] = rem;
                    continue;
                }
                F2Poly prod(q.size() + a[top][c].size() - 1, 0);
                for (std::size_t i = 0; i < q.size(); ++i)
                    if (q[i])
                        for (std::size_t j = 0; j < a[top][c].size(); ++j)
                            if (a[top][c][j]) prod[i + j] ^= 1;
                ptrim(prod);
                a[r][c] = paddmul(a[r][c], prod, 0);
                if (c == top) a[r][c] = rem;
            }
            if (!rem.empty()) clean = false;
        }
        for (std::size_t c = top + 1; c < cols; ++c) {
            if (a[top][c].empty()) continue;
            auto [q, rem] = pdivmod(a[top][c], a[top][top]);
            for (std::size_t r = top; r < rows; ++r) {
                if (a[r][top].empty() || q.empty()) {
                    if (r == top) a[r][c] = rem;
                    continue;
                }
                F2Poly prod(q.size() + a[r][top].size() - 1, 0);
                for (std::size_t i = 0; i < q.size(); ++i)
                    if (q[i])
                        for (std::size_t j = 0; j < a[r][top].size(); ++j)
                            if (a[r][top][j]) prod[i + j] ^= 1;
                ptrim(prod);
                a[r][c] = paddmul(a[r][c], prod, 0);
                if (r == top) a[r][c] = rem;
            }
            if (!rem.empty()) clean = false;
        }
        if (!clean) continue;  // smaller-degree remainders appeared; re-pivot
        total += pdeg(a[top][top]);
        ++top;
    }
    return total;
}

}  // namespace

long hf_red_torsion(const LabelledGradedRoot& root) {
    // Independent oracle: the unlabelled root complex over F_2[U] is
    // 0 -> (leaves) -d-> (angles) -> 0 with d(x_i) = U^{chi(w)-chi(v_i)} into
    // the adjacent angles; H_tor = torsion of coker(d), computed by exact
    // elimination over F_2[U].
    const std::size_t nl = root.leaves.size();
    const std::size_t na = root.angles.size();
    if (na == 0) return 0;
    std::vector<std::vector<F2Poly>> d(nl, std::vector<F2Poly>(na));
    auto upow = [](const Int& e) {
        F2Poly p(static_cast<std::size_t>(to_long(e)) + 1, 0);
        p.back() = 1;
        return p;
    };
    for (std::size_t j = 0; j < na; ++j) {
        d[j][j] = upow(root.angles[j].chi - root.leaves[j].chi);          // left leaf
        d[j + 1][j] = upow(root.angles[j].chi - root.leaves[j + 1].chi);  // right leaf
    }
    return poly_matrix_torsion_dim(std::move(d));
}

LabelledGradedRoot canonical_root(const SeifertData& s) {
    Int n = n_y(s);
    long horizon = to_long(n) + 2;
    if (horizon < 2) horizon = 2;
    auto d = delta_closed_form(s, SpincSelector::Canonical(), horizon);
    return root_from_sequence(chi_profile(d), 0);
}

ModElt large_p_witness(const DgModule& chain, const LabelledGradedRoot& root) {
    const long p = root.p;
    const long k = static_cast<long>(root.angles.size());
    // exponents n_j^- (left) and n_j^+ (right) per angle, as group ring elts
    std::vector<GroupRingElt> nm(static_cast<std::size_t>(k)), np(static_cast<std::size_t>(k));
    for (long j = 0; j < k; ++j) {
        const auto& ang = root.angles[static_cast<std::size_t>(j)];
        nm[static_cast<std::size_t>(j)] = ang.lambda_a;
        np[static_cast<std::size_t>(j)] = ang.lambda_a + root.leaves[static_cast<std::size_t>(j)].lambda_v -
                                          root.leaves[static_cast<std::size_t>(j + 1)].lambda_v;
    }
    ModElt beta;
    long sign = 1;
    for (long i = 0; i <= k; ++i) {
        GroupRingElt m;
        m.p = p;
        for (long j = 0; j < i; ++j) m = m + nm[static_cast<std::size_t>(j)];
        for (long j = i; j < k; ++j) m = m + np[static_cast<std::size_t>(j)];
        // locate the leaf generator by position: leaves are x_{sym index}
        long count = static_cast<long>(root.leaves.size());
        long idx = (count % 2 == 1) ? i - (count - 1) / 2 : (i - count / 2 >= 0 ? i - count / 2 + 1 : i - count / 2);
        int g = chain.gen_index("x_" + std::to_string(idx));
        if (g < 0) throw InvariantViolation("invariants.TheoremViolated", "missing leaf generator");
        RingElt c = u_exp(chain.spec, m);
        if (sign < 0) c = re_scale(chain.spec, c, -1);
        beta.emplace_back(g, c);
        sign = -sign;
    }
    return beta;
}

bool check_large_p(const SeifertData& s, long p) {
    Int n = n_y(s);
    if (Int(p) <= n)
        throw InputError("invariants.OutOfRange", "check_large_p requires p > N_Y");
    for (const auto& [pl, ql] : s.effective_arms())
        if (pl % p == 0)
            throw InputError("invariants.OutOfRange", "p must not divide any fiber order");

    auto master = canonical_root(s);
    auto rp = reduce_mod_p(master, p);
    DgModule chain = build_s1zp_chain(rp);

    Rat delta = delta_invariant(chain);
    long hf = hf_red_formula(master);
    long hf2 = hf_red_torsion(master);
    if (hf != hf2)
        throw InvariantViolation("invariants.TheoremViolated",
                                 "hf_red formula and torsion oracle disagree");
    auto d0 = delta0_invariant(chain);
    if (!(d0.value - delta == Rat(hf)))
        throw InvariantViolation("invariants.TheoremViolated",
                                 "delta0 - delta != dim HF_red at large p");

    // the closed-form witness: cycle, right degree, local
    ModElt beta = large_p_witness(chain, rp);
    if (!d_of(chain, beta).empty())
        throw InvariantViolation("invariants.TheoremViolated", "closed-form witness not a cycle");
    int beta_deg = -1;
    for (const auto& [g, c] : beta) {
        int dg = chain.gens[static_cast<std::size_t>(g)].degree + c.degree();
        if (beta_deg < 0) beta_deg = dg;
        if (dg != beta_deg)
            throw InvariantViolation("invariants.TheoremViolated", "witness not homogeneous");
    }
    if (beta_deg != 2 * hf)
        throw InvariantViolation("invariants.TheoremViolated", "witness degree != 2 dim HF_red");
    DgModule mu = reduce_to_u_only(chain);
    auto view = make_localized_view(mu);
    GradedPiece red_piece = enumerate_piece(mu, beta_deg);
    std::vector<PieceVec> rows{project_cycle(mu, red_piece, beta)};
    if (view.stable_rank(beta_deg, rows) == 0)
        throw InvariantViolation("invariants.TheoremViolated", "witness not local");
    return true;
}

FroyshovReport froyshov(const SeifertData& s, long p, long degree_cap) {
    auto master = canonical_root(s);
    auto rp = reduce_mod_p(master, p);
    DgModule chain = build_s1zp_chain(rp);
    FroyshovReport rep;
    rep.p = p;
    rep.delta = delta_invariant(chain);
    rep.hf_red = hf_red_formula(master);
    long cap = degree_cap >= 0 ? degree_cap : 2 * rep.hf_red + 4;
    auto d0 = delta0_invariant(chain, cap);
    rep.delta0 = d0.value;
    rep.witness_degree = d0.degree;
    rep.witness = d0.witness;
    rep.degree_cap = d0.cap_used;
    if (rep.delta0 < rep.delta)
        throw InvariantViolation("invariants.TheoremViolated", "delta0 < delta");
    return rep;
}

}  // namespace latroot
