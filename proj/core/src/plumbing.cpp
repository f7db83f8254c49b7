#include "latroot/plumbing.hpp"

#include <algorithm>
#include <numeric>

#include "latroot/errors.hpp"

namespace latroot {

std::vector<std::pair<Int, Int>> SeifertData::effective_arms() const {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& a : arms)
        if (!(a.first == 1 && a.second == 1)) out.push_back(a);
    return out;
}

Int SeifertData::h1_order() const {
    auto eff = effective_arms();
    Int prod = 1;
    for (const auto& a : eff) prod *= a.first;
    Int acc = e0 * prod;
    for (std::size_t l = 0; l < eff.size(); ++l) {
        Int partial = eff[l].second;
        for (std::size_t m = 0; m < eff.size(); ++m)
            if (m != l) partial *= eff[m].first;
        acc += partial;
    }
    return abs(acc);
}

void SeifertData::validate() const {
    for (const auto& [p, q] : arms) {
        if (p == 1 && q == 1) continue;
        if (!(p > 0 && q > 0 && q < p))
            throw InputError("plumbing.OutOfRange", "arm (p,q) needs 0 < q < p");
        if (gcd(p, q) != 1)
            throw InputError("plumbing.NonCoprime", "arm (p,q) not coprime");
    }
    // negative orbifold Euler number: e0 + sum q/p < 0
    auto eff = effective_arms();
    Rat orb = Rat(e0);
    for (const auto& [p, q] : eff) orb += Rat(q) / Rat(p);
    if (orb >= 0)
        throw InputError("plumbing.NotNegativeDefinite",
                         "orbifold Euler number e0 + sum q_l/p_l must be negative");
    if (h1_order() < 1)
        throw InputError("plumbing.NotRationalHomologySphere", "|H_1| must be >= 1");
}

bool LatticeVector::integral() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& r) { return is_integer(r); });
}

void PlumbingGraph::finalize() {
    adj.assign(weights.size(), {});
    for (auto [i, j] : edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
}

std::vector<Int> neg_cont_frac(const Int& p, const Int& q) {
    if (p == 1 && q == 1) return {};
    if (!(p > 0 && q > 0 && q < p))
        throw InputError("plumbing.OutOfRange", "neg_cont_frac needs 0 < q < p");
    if (gcd(p, q) != 1) throw InputError("plumbing.NonCoprime", "gcd(p,q) != 1");
    std::vector<Int> ks;
    Int a = p, b = q;
    while (b > 0) {
        Int k = ceil_div(a, b);
        ks.push_back(k);
        // p/q = k - 1/(p'/q') with p' = b, q' = k*b - a
        Int nb = k * b - a;
        a = b;
        b = nb;
    }
    return ks;
}

PlumbingGraph build_plumbing(const SeifertData& s) {
    s.validate();
    PlumbingGraph g;
    g.weights.push_back(s.e0);
    g.arm_of.push_back({-1, 0});
    g.central = 0;
    int arm_idx = 0;
    for (const auto& [p, q] : s.effective_arms()) {
        auto ks = neg_cont_frac(p, q);
        int prev = g.central;
        int pos = 1;
        for (const auto& k : ks) {
            int id = g.node_count();
            g.weights.push_back(-k);
            g.arm_of.push_back({arm_idx, pos});
            g.edges.emplace_back(prev, id);
            prev = id;
            ++pos;
        }
        ++arm_idx;
    }
    g.finalize();
    if (!is_negative_definite(intersection_matrix(g)))
        throw InputError("plumbing.NotNegativeDefinite", "intersection form not negative definite");
    return g;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    const std::size_t n = g.weights.size();
    IntMatrix q(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) q[i][i] = g.weights[i];
    for (auto [i, j] : g.edges) {
        q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
    }
    return q;
}

bool is_negative_definite(const IntMatrix& q) {
    // -Q positive definite <=> all leading principal minors of -Q positive.
    IntMatrix neg = q;
    for (auto& row : neg)
        for (auto& v : row) v = -v;
    for (const auto& minor : leading_principal_minors(neg))
        if (minor <= 0) return false;
    return true;
}

CanonicalClass canonical_class(const PlumbingGraph& g) {
    const std::size_t n = g.weights.size();
    CanonicalClass out;
    out.dual.basis = Basis::Dual;
    out.dual.c.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.dual.c[v] = Rat(-g.weights[v] - 2);

    RatMatrix q(n, std::vector<Rat>(n));
    auto qi = intersection_matrix(g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = Rat(qi[i][j]);
    out.node.basis = Basis::Node;
    out.node.c = solve_rational(std::move(q), out.dual.c);
    return out;
}

Rat n_y_rat(const SeifertData& s) {
    auto eff = s.effective_arms();
    if (eff.empty()) throw InputError("plumbing.OutOfRange", "n_y needs at least one arm");
    Int nu = static_cast<long>(eff.size());
    Int prod = 1;
    for (const auto& a : eff) prod *= a.first;
    Int acc = (nu - 2) * prod;
    for (std::size_t l = 0; l < eff.size(); ++l) {
        Int partial = 1;
        for (std::size_t m = 0; m < eff.size(); ++m)
            if (m != l) partial *= eff[m].first;
        acc -= partial;
    }
    return Rat(acc) / Rat(s.h1_order());
}

Int n_y(const SeifertData& s) {
    Rat v = n_y_rat(s);
    if (!is_integer(v))
        throw InvariantViolation("plumbing.NonIntegral",
                                 "N_Y is not an integer: canonical Spin^c structure not self-conjugate");
    return to_int(v);
}

Int n_hat(const Int& n) {
    if (n % 2 == 0) return n / 2 + 1;
    return (n + 1) / 2;
}

namespace {

// LHS of the SI_red inequality at index i.
Int si_lhs(const SeifertData& s, const std::vector<std::pair<Int, Int>>& eff,
           const std::vector<Int>& a, const Int& i) {
    Int acc = 1 + a[0] + i * s.e0;
    for (std::size_t l = 0; l < eff.size(); ++l)
        acc += floor_div(i * eff[l].second + a[l + 1], eff[l].first);
    return acc;
}

}  // namespace

SiRedResult si_red_enumerate(const SeifertData& s) {
    s.validate();
    auto eff = s.effective_arms();
    const std::size_t nu = eff.size();
    SiRedResult res;
    res.h1 = s.h1_order();

    Int prod = 1;
    for (const auto& a : eff) prod *= a.first;

    // a_0 is bounded by the i = 1 inequality: 1 + a_0 + e0 + (nonneg) <= 0.
    Int a0_max = -1 - s.e0;
    if (a0_max < 0) a0_max = 0;

    std::vector<Int> a(nu + 1, 0);
    std::vector<std::vector<Int>> full, printed;

    // Beyond i_cut the inequality holds automatically: the floor bound gives
    // LHS <= 1 + a_0 + sum a_l/p_l - i |H_1| / prod(p).
    auto enumerate = [&](auto&& self, std::size_t arm) -> void {
        if (arm == nu) {
            for (Int a0 = 0; a0 <= a0_max; ++a0) {
                a[0] = a0;
                Rat slack = Rat(1 + a0);
                for (std::size_t l = 0; l < nu; ++l) slack += Rat(a[l + 1]) / Rat(eff[l].first);
                Int i_cut = to_int(slack * Rat(prod) / Rat(res.h1)) + 1;
                bool ok_full = true;
                for (Int i = 1; i <= i_cut; ++i)
                    if (si_lhs(s, eff, a, i) > 0) {
                        ok_full = false;
                        break;
                    }
                bool ok_printed = true;
                for (Int i = 1; i <= Int(static_cast<long>(nu)); ++i)
                    if (si_lhs(s, eff, a, i) > 0) {
                        ok_printed = false;
                        break;
                    }
                if (ok_full) full.push_back(a);
                if (ok_printed) printed.push_back(a);
            }
            return;
        }
        for (Int v = 0; v < eff[arm].first; ++v) {
            a[arm + 1] = v;
            self(self, arm + 1);
        }
        a[arm + 1] = 0;
    };
    enumerate(enumerate, 0);

    res.vectors = std::move(full);
    res.printed_range = std::move(printed);
    res.cardinality_ok = (Int(static_cast<long>(res.vectors.size())) == res.h1);
    res.printed_range_agrees = (res.printed_range == res.vectors);
    if (!res.cardinality_ok)
        throw InvariantViolation("plumbing.CardinalityMismatch",
                                 "|SI_red| != |H_1|: index-range question triggered");
    return res;
}

WuData wu_cycle(const PlumbingGraph& g) {
    const std::size_t n = g.weights.size();
    auto qi = intersection_matrix(g);
    auto kc = canonical_class(g);
    if (!kc.node.integral())
        throw InvariantViolation("plumbing.NotSelfConjugate",
                                 "canonical class not integral in node basis");

    // Solve Q * lambda = diag(Q) (mod 2); unique when det Q is odd, and the
    // lexicographically least solution (free variables zero) otherwise.
    F2Matrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (qi[i][j] % 2 != 0) m.set(i, j, true);
        if (qi[i][i] % 2 != 0) m.set(i, n, true);
    }
    m.eliminate();
    std::vector<Int> lambda(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t piv = n + 1;
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(r, c)) {
                piv = c;
                break;
            }
        if (piv == n + 1) {
            if (m.get(r, n))
                throw InvariantViolation("plumbing.NotSelfConjugate", "no spherical Wu class");
            continue;
        }
        lambda[piv] = m.get(r, n) ? 1 : 0;
    }

    // Wu = sum lambda(v) v; x_can = (lambda - m(K)) / 2 in the node basis.
    WuData out;
    out.lambda = lambda;
    out.x_can.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        Rat diff = Rat(lambda[v]) - kc.node.c[v];
        Rat half = diff / 2;
        if (!is_integer(half))
            throw InvariantViolation("plumbing.NotSelfConjugate", "Wu cycle not integral");
        out.x_can[v] = to_int(half);
    }
    out.m_vc = out.x_can[static_cast<std::size_t>(g.central)];
    return out;
}

}  // namespace latroot
