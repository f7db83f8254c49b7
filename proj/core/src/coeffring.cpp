#include "latroot/coeffring.hpp"

#include <algorithm>
#include <cassert>

#include "latroot/errors.hpp"

namespace latroot {

namespace {

std::uint32_t norm_coeff(const RingSpec& spec, std::int64_t c) {
    std::int64_t p = spec.p;
    std::int64_t v = c % p;
    if (v < 0) v += p;
    return static_cast<std::uint32_t>(v);
}

bool legal_monomial(const RingSpec& spec, const Monomial& m) {
    if (m.u < 0 || m.s < 0 || m.r < 0 || m.q < 0 || m.t < 0) return false;
    switch (spec.kind) {
        case RingKind::S1Zp:
            if (m.q != 0) return false;
            if (spec.p == 2) return m.s == 0 && m.r == 0;
            return m.t == 0 && m.r <= 1;
        case RingKind::Pin2:
            return m.s == 0 && m.r == 0 && m.t == 0;
        case RingKind::Pin2Z2:
            return m.s == 0 && m.r == 0;
        case RingKind::UPoly:
            return m.s == 0 && m.r == 0 && m.q == 0 && m.t == 0;
    }
    return false;
}

void sort_and_combine(const RingSpec& spec, std::vector<std::pair<Monomial, std::int64_t>>& raw,
                      RingElt& out) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.terms.clear();
    for (std::size_t i = 0; i < raw.size();) {
        std::int64_t acc = 0;
        std::size_t j = i;
        while (j < raw.size() && raw[j].first == raw[i].first) acc += raw[j++].second;
        std::uint32_t c = norm_coeff(spec, acc);
        if (c != 0) out.terms.emplace_back(raw[i].first, c);
        i = j;
    }
}

}  // namespace

std::string Monomial::str() const {
    std::string out;
    auto app = [&](const char* sym, int e) {
        if (e == 0) return;
        out += sym;
        if (e > 1) out += "^" + std::to_string(e);
    };
    app("Q", q);
    app("U", u);
    app("S", s);
    app("R", r);
    app("θ", t);
    if (out.empty()) out = "1";
    return out;
}

bool RingElt::is_homogeneous() const {
    if (terms.empty()) return true;
    int d = terms.front().first.degree();
    return std::all_of(terms.begin(), terms.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

int RingElt::degree() const { return terms.empty() ? -1 : terms.front().first.degree(); }

std::uint32_t RingElt::coeff_of(const Monomial& m) const {
    for (const auto& [mono, c] : terms)
        if (mono == m) return c;
    return 0;
}

std::string RingElt::str() const {
    if (terms.empty()) return "0";
    auto order = terms;
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.u != b.first.u) return a.first.u > b.first.u;
        if (a.first.s != b.first.s) return a.first.s > b.first.s;
        if (a.first.q != b.first.q) return a.first.q < b.first.q;
        return a.first.t < b.first.t;
    });
    std::string out;
    for (const auto& [m, c] : order) {
        if (!out.empty()) out += "+";
        if (m == Monomial{}) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += m.str();
    }
    return out;
}

RingElt re_monomial(const Monomial& m, std::uint32_t c) {
    RingElt e;
    if (c != 0) e.terms.emplace_back(m, c);
    return e;
}

RingElt re_scalar(std::uint32_t c) { return re_monomial(Monomial{}, c); }

RingElt re_add(const RingSpec& spec, const RingElt& a, const RingElt& b) {
    std::vector<std::pair<Monomial, std::int64_t>> raw;
    raw.reserve(a.terms.size() + b.terms.size());
    for (const auto& t : a.terms) raw.emplace_back(t.first, t.second);
    for (const auto& t : b.terms) raw.emplace_back(t.first, t.second);
    RingElt out;
    sort_and_combine(spec, raw, out);
    return out;
}

RingElt re_scale(const RingSpec& spec, const RingElt& a, std::int64_t c) {
    std::vector<std::pair<Monomial, std::int64_t>> raw;
    for (const auto& t : a.terms) raw.emplace_back(t.first, static_cast<std::int64_t>(t.second) * c);
    RingElt out;
    sort_and_combine(spec, raw, out);
    return out;
}

RingElt re_mul(const RingSpec& spec, const RingElt& a, const RingElt& b) {
    std::vector<std::pair<Monomial, std::int64_t>> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m{ma.u + mb.u, ma.s + mb.s, ma.r + mb.r, ma.q + mb.q, ma.t + mb.t};
            if (m.r >= 2) continue;  // R^2 = 0
            raw.emplace_back(m, static_cast<std::int64_t>(ca) * cb);
        }
    RingElt out;
    sort_and_combine(spec, raw, out);
    return out;
}

RingElt re_diff(const RingSpec& spec, const RingElt& a) {
    if (spec.kind == RingKind::S1Zp || spec.kind == RingKind::UPoly) return {};
    // d(Q^q theta^t U^u) = u Q^{q+3} theta^t U^{u-1}, mod 2
    std::vector<std::pair<Monomial, std::int64_t>> raw;
    for (const auto& [m, c] : a.terms) {
        if (m.u % 2 == 0) continue;
        Monomial n = m;
        n.u -= 1;
        n.q += 3;
        raw.emplace_back(n, c);
    }
    RingElt out;
    sort_and_combine(spec, raw, out);
    return out;
}

RingElt u_exp(const RingSpec& spec, const GroupRingElt& n) {
    if (!n.nonneg())
        throw InvariantViolation("coeffring.NegativeExponent", "U^n needs nonnegative coefficients");
    RingElt acc = re_scalar(1);
    for (const auto& [res, mult] : n.c) {
        long k = spec.p > 0 ? ((res % spec.p) + spec.p) % spec.p : res;
        RingElt base;
        Monomial mu;
        mu.u = 1;
        base = re_monomial(mu);
        if (k != 0) {
            Monomial ms;
            if (spec.kind == RingKind::S1Zp && spec.p > 2)
                ms.s = 1;
            else
                ms.t = 2;  // S = theta^2 when p = 2
            base = re_add(spec, base, re_monomial(ms, norm_coeff(spec, k)));
        }
        for (long i = 0; i < mult; ++i) acc = re_mul(spec, acc, base);
    }
    return acc;
}

RingElt uq_exp(const GroupRingElt& n) {
    RingSpec spec = RingSpec::pin2z2();
    long np = 0, nm = 0;
    for (const auto& [res, mult] : n.c) {
        long r = ((res % 2) + 2) % 2;
        if (mult < 0)
            throw InvariantViolation("coeffring.NegativeExponent", "U_Q^n needs nonnegative coefficients");
        (r == 0 ? np : nm) += mult;
    }
    Monomial mu;
    mu.u = 1;
    Monomial mt;
    mt.t = 2;
    RingElt U = re_monomial(mu);
    RingElt Ut = re_add(spec, U, re_monomial(mt));  // U + theta^2
    auto pow = [&](const RingElt& b, long e) {
        RingElt r = re_scalar(1);
        for (long i = 0; i < e; ++i) r = re_mul(spec, r, b);
        return r;
    };
    if (np == 0 && nm == 0) return {};
    if (np > 0 && nm == 0) return re_scale(spec, pow(U, np - 1), np);
    if (np == 0 && nm > 0) return re_scale(spec, pow(Ut, nm - 1), nm);
    RingElt a = re_scale(spec, re_mul(spec, pow(U, np - 1), pow(Ut, nm)), np);
    RingElt b = re_scale(spec, re_mul(spec, pow(U, np), pow(Ut, nm - 1)), nm);
    return re_add(spec, a, b);
}

std::vector<Monomial> monomials_of_degree(const RingSpec& spec, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    switch (spec.kind) {
        case RingKind::S1Zp:
            if (spec.p == 2) {
                for (int u = 0; 2 * u <= k; ++u) out.push_back({u, 0, 0, 0, k - 2 * u});
            } else {
                for (int r = 0; r <= 1 && r <= k; ++r)
                    for (int u = 0; 2 * u + r <= k; ++u) {
                        int rest = k - 2 * u - r;
                        if (rest % 2 != 0) continue;
                        out.push_back({u, rest / 2, r, 0, 0});
                    }
            }
            break;
        case RingKind::Pin2:
            for (int u = 0; 2 * u <= k; ++u) out.push_back({u, 0, 0, k - 2 * u, 0});
            break;
        case RingKind::Pin2Z2:
            for (int u = 0; 2 * u <= k; ++u)
                for (int q = 0; 2 * u + q <= k; ++q)
                    out.push_back({u, 0, 0, q, k - 2 * u - q});
            break;
        case RingKind::UPoly:
            if (k % 2 == 0) out.push_back({k / 2, 0, 0, 0, 0});
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

int DgModule::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i);
    return -1;
}

ModElt mod_add(const RingSpec& spec, const ModElt& a, const ModElt& b) {
    std::map<int, RingElt> acc;
    for (const auto& [g, c] : a) acc[g] = re_add(spec, acc.count(g) ? acc[g] : RingElt{}, c);
    for (const auto& [g, c] : b) acc[g] = re_add(spec, acc.count(g) ? acc[g] : RingElt{}, c);
    ModElt out;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) out.emplace_back(g, std::move(c));
    return out;
}

ModElt mod_scale(const RingSpec& spec, const ModElt& a, const RingElt& c) {
    ModElt out;
    for (const auto& [g, e] : a) {
        RingElt prod = re_mul(spec, c, e);
        if (!prod.is_zero()) out.emplace_back(g, std::move(prod));
    }
    return out;
}

ModElt d_of(const DgModule& m, const ModElt& x) {
    std::map<int, RingElt> acc;
    auto accumulate = [&](int g, const RingElt& c) {
        auto it = acc.find(g);
        if (it == acc.end())
            acc[g] = c;
        else
            it->second = re_add(m.spec, it->second, c);
    };
    for (const auto& [g, c] : x) {
        RingElt dc = re_diff(m.spec, c);
        if (!dc.is_zero()) accumulate(g, dc);
        // sign (-1)^{|c|}; only visible for odd p
        std::int64_t sign = 1;
        if (m.spec.p > 2 && !c.is_zero() && c.degree() % 2 != 0) sign = -1;
        for (const auto& [tgt, e] : m.diff[static_cast<std::size_t>(g)]) {
            RingElt prod = re_mul(m.spec, c, e);
            if (sign < 0) prod = re_scale(m.spec, prod, -1);
            if (!prod.is_zero()) accumulate(tgt, prod);
        }
    }
    ModElt out;
    for (auto& [g, c] : acc)
        if (!c.is_zero()) out.emplace_back(g, std::move(c));
    return out;
}

std::string mod_str(const DgModule& m, const ModElt& x) {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : x) {
        if (!out.empty()) out += " + ";
        bool paren = c.terms.size() > 1;
        out += paren ? "(" + c.str() + ")" : c.str() == "1" ? "" : c.str();
        out += m.gens[static_cast<std::size_t>(g)].name;
    }
    return out;
}

void check_homogeneous(const DgModule& m) {
    for (std::size_t g = 0; g < m.gens.size(); ++g)
        for (const auto& [tgt, c] : m.diff[g]) {
            if (!c.is_homogeneous())
                throw InvariantViolation("coeffring.InhomogeneousDifferential",
                                         "entry " + m.gens[g].name + " -> " +
                                             m.gens[static_cast<std::size_t>(tgt)].name);
            int want = m.gens[g].degree + 1 - m.gens[static_cast<std::size_t>(tgt)].degree;
            if (c.degree() != want)
                throw InvariantViolation("coeffring.InhomogeneousDifferential",
                                         "degree mismatch at " + m.gens[g].name + " -> " +
                                             m.gens[static_cast<std::size_t>(tgt)].name);
        }
}

void check_d_squared(const DgModule& m) {
    for (std::size_t g = 0; g < m.gens.size(); ++g) {
        ModElt one{{static_cast<int>(g), re_scalar(1)}};
        ModElt dd = d_of(m, d_of(m, one));
        if (!dd.empty())
            throw InvariantViolation("coeffring.DSquaredNonzero",
                                     "d^2(" + m.gens[g].name + ") = " + mod_str(m, dd));
    }
}

DgModule tensor(const DgModule& a, const DgModule& b) {
    if (!(a.spec == b.spec))
        throw InvariantViolation("coeffring.RingMismatch", "tensor factors over different rings");
    DgModule out;
    out.spec = a.spec;
    out.anchor_shift = a.anchor_shift + b.anchor_shift;
    const int nb = static_cast<int>(b.gens.size());
    auto pair_index = [nb](int i, int j) { return i * nb + j; };
    for (const auto& ga : a.gens)
        for (const auto& gb : b.gens)
            out.gens.push_back({ga.name + "|" + gb.name, ga.degree + gb.degree});
    out.diff.resize(out.gens.size());
    for (int i = 0; i < static_cast<int>(a.gens.size()); ++i)
        for (int j = 0; j < nb; ++j) {
            auto& entry = out.diff[static_cast<std::size_t>(pair_index(i, j))];
            for (const auto& [tgt, c] : a.diff[static_cast<std::size_t>(i)])
                entry.emplace_back(pair_index(tgt, j), c);
            std::int64_t sign =
                (a.spec.p > 2 && a.gens[static_cast<std::size_t>(i)].degree % 2 != 0) ? -1 : 1;
            for (const auto& [tgt, c] : b.diff[static_cast<std::size_t>(j)]) {
                RingElt cc = sign < 0 ? re_scale(a.spec, c, -1) : c;
                entry.emplace_back(pair_index(i, tgt), std::move(cc));
            }
        }
    return out;
}

DgModule tensor_power(const DgModule& a, int n) {
    if (n < 1) throw InputError("coeffring.OutOfRange", "tensor power needs n >= 1");
    DgModule out = a;
    for (int i = 1; i < n; ++i) out = tensor(out, a);
    return out;
}

bool closed_under_d(const DgModule& m, const std::vector<char>& subset) {
    for (std::size_t g = 0; g < m.gens.size(); ++g) {
        if (!subset[g]) continue;
        for (const auto& [tgt, c] : m.diff[g])
            if (!subset[static_cast<std::size_t>(tgt)]) return false;
    }
    return true;
}

namespace {

DgModule restrict_to(const DgModule& m, const std::vector<char>& keep, bool drop_targets) {
    DgModule out;
    out.spec = m.spec;
    out.anchor_shift = m.anchor_shift;
    std::vector<int> remap(m.gens.size(), -1);
    for (std::size_t g = 0; g < m.gens.size(); ++g)
        if (keep[g]) {
            remap[g] = static_cast<int>(out.gens.size());
            out.gens.push_back(m.gens[g]);
        }
    out.diff.resize(out.gens.size());
    for (std::size_t g = 0; g < m.gens.size(); ++g) {
        if (!keep[g]) continue;
        for (const auto& [tgt, c] : m.diff[g]) {
            if (remap[static_cast<std::size_t>(tgt)] < 0) {
                if (!drop_targets)
                    throw InvariantViolation("coeffring.NotASubcomplex", "submodule not d-closed");
                continue;
            }
            out.diff[static_cast<std::size_t>(remap[g])].emplace_back(
                remap[static_cast<std::size_t>(tgt)], c);
        }
    }
    return out;
}

}  // namespace

DgModule subcomplex(const DgModule& m, const std::vector<char>& keep) {
    if (!closed_under_d(m, keep))
        throw InvariantViolation("coeffring.NotASubcomplex", "span is not closed under d");
    return restrict_to(m, keep, false);
}

DgModule quotient_complex(const DgModule& m, const std::vector<char>& kill) {
    std::vector<char> complement(m.gens.size());
    for (std::size_t i = 0; i < kill.size(); ++i) complement[i] = !kill[i];
    if (!closed_under_d(m, kill))
        throw InvariantViolation("coeffring.NotASubcomplex", "killed span is not closed under d");
    return restrict_to(m, complement, true);
}

DgModule normalize_acyclic(const DgModule& m) {
    DgModule cur = m;
    for (;;) {
        int src = -1, tgt = -1;
        std::uint32_t unit = 0;
        for (std::size_t g = 0; g < cur.gens.size() && src < 0; ++g)
            for (const auto& [t, c] : cur.diff[g])
                if (c.terms.size() == 1 && c.terms.front().first == Monomial{} &&
                    static_cast<int>(g) != t) {
                    src = static_cast<int>(g);
                    tgt = t;
                    unit = c.terms.front().second;
                    break;
                }
        if (src < 0) return cur;

        std::uint32_t inv = fp_inv(unit, static_cast<std::uint32_t>(cur.spec.p));
        ModElt dsrc;
        for (const auto& [t, c] : cur.diff[static_cast<std::size_t>(src)]) dsrc.emplace_back(t, c);

        DgModule next;
        next.spec = cur.spec;
        next.anchor_shift = cur.anchor_shift;
        std::vector<int> remap(cur.gens.size(), -1);
        for (std::size_t g = 0; g < cur.gens.size(); ++g) {
            if (static_cast<int>(g) == src || static_cast<int>(g) == tgt) continue;
            remap[g] = static_cast<int>(next.gens.size());
            next.gens.push_back(cur.gens[g]);
        }
        next.diff.resize(next.gens.size());
        for (std::size_t g = 0; g < cur.gens.size(); ++g) {
            if (remap[g] < 0) continue;
            ModElt row;
            for (const auto& [t, c] : cur.diff[g]) row.emplace_back(t, c);
            // cancel the tgt-component through d(src)
            RingElt e;
            for (const auto& [t, c] : row)
                if (t == tgt) e = c;
            if (!e.is_zero()) {
                RingElt f = re_scale(cur.spec, e, -static_cast<std::int64_t>(inv));
                row = mod_add(cur.spec, row, mod_scale(cur.spec, dsrc, f));
            }
            for (const auto& [t, c] : row) {
                if (t == src || t == tgt) continue;
                if (!c.is_zero())
                    next.diff[static_cast<std::size_t>(remap[g])].emplace_back(
                        remap[static_cast<std::size_t>(t)], c);
            }
        }
        check_d_squared(next);
        cur = std::move(next);
    }
}

namespace {

DgModule filter_monomials(const DgModule& m, RingSpec new_spec, bool (*keep)(const Monomial&)) {
    DgModule out;
    out.spec = new_spec;
    out.anchor_shift = m.anchor_shift;
    out.gens = m.gens;
    out.diff.resize(m.diff.size());
    for (std::size_t g = 0; g < m.diff.size(); ++g)
        for (const auto& [tgt, c] : m.diff[g]) {
            RingElt fc;
            for (const auto& [mono, coeff] : c.terms)
                if (keep(mono)) fc.terms.emplace_back(mono, coeff);
            if (!fc.is_zero()) out.diff[g].emplace_back(tgt, fc);
        }
    return out;
}

}  // namespace

DgModule reduce_to_u_only(const DgModule& m) {
    return filter_monomials(m, RingSpec::upoly(m.spec.p),
                            [](const Monomial& mo) { return mo.s == 0 && mo.r == 0 && mo.t == 0; });
}

DgModule reduce_theta(const DgModule& m) {
    RingSpec spec = m.spec.kind == RingKind::Pin2Z2 ? RingSpec::pin2() : m.spec;
    return filter_monomials(m, spec, [](const Monomial& mo) { return mo.t == 0; });
}

// ---------------------------------------------------------------------------

GradedPiece enumerate_piece(const DgModule& m, int d) {
    GradedPiece piece;
    piece.degree = d;
    for (std::size_t g = 0; g < m.gens.size(); ++g) {
        int k = d - m.gens[g].degree;
        for (const auto& mono : monomials_of_degree(m.spec, k))
            piece.basis.emplace_back(static_cast<int>(g), mono);
    }
    std::sort(piece.basis.begin(), piece.basis.end());
    for (std::size_t i = 0; i < piece.basis.size(); ++i) piece.index[piece.basis[i]] = i;
    return piece;
}

PieceVec to_piece_vec(const DgModule& m, const GradedPiece& piece, const ModElt& x) {
    PieceVec v(piece.dim(), 0);
    for (const auto& [g, c] : x)
        for (const auto& [mono, coeff] : c.terms) {
            auto it = piece.index.find({g, mono});
            if (it == piece.index.end())
                throw InvariantViolation("coeffring.DegreeMismatch",
                                         "element does not live in the requested piece");
            v[it->second] = static_cast<std::uint32_t>(
                (v[it->second] + coeff) % static_cast<std::uint32_t>(m.spec.p));
        }
    return v;
}

ModElt from_piece_vec(const DgModule& m, const GradedPiece& piece, const PieceVec& v) {
    std::map<int, RingElt> acc;
    for (std::size_t i = 0; i < piece.dim(); ++i) {
        if (v[i] == 0) continue;
        const auto& [g, mono] = piece.basis[i];
        acc[g] = re_add(m.spec, acc.count(g) ? acc[g] : RingElt{}, re_monomial(mono, v[i]));
    }
    ModElt out;
    for (auto& [g, c] : acc) out.emplace_back(g, std::move(c));
    return out;
}

namespace {

template <typename Emit>
void assemble_d_row(const DgModule& m, int g, const Monomial& mono, Emit&& emit) {
    const RingSpec& spec = m.spec;
    // ring differential of the coefficient
    RingElt dmono = re_diff(spec, re_monomial(mono));
    for (const auto& [mo, c] : dmono.terms) emit(g, mo, static_cast<std::int64_t>(c));
    // coefficient times the generator differential, with the Koszul sign
    std::int64_t sign = (spec.p > 2 && mono.degree() % 2 != 0) ? -1 : 1;
    for (const auto& [tgt, c] : m.diff[static_cast<std::size_t>(g)]) {
        RingElt prod = re_mul(spec, re_monomial(mono), c);
        for (const auto& [mo, cc] : prod.terms)
            emit(tgt, mo, sign * static_cast<std::int64_t>(cc));
    }
}

}  // namespace

FpMatrix boundary_matrix(const DgModule& m, const GradedPiece& from, const GradedPiece& to) {
    FpMatrix mat(from.dim(), to.dim(), static_cast<std::uint32_t>(m.spec.p));
    for (std::size_t row = 0; row < from.dim(); ++row) {
        const auto& [g, mono] = from.basis[row];
        assemble_d_row(m, g, mono, [&](int tg, const Monomial& mo, std::int64_t c) {
            auto it = to.index.find({tg, mo});
            if (it == to.index.end())
                throw InvariantViolation("coeffring.DegreeMismatch", "boundary leaves the piece");
            mat.add_at(row, it->second, c);
        });
    }
    return mat;
}

FpMatrix mult_matrix(const DgModule& m, const GradedPiece& from, const GradedPiece& to,
                     const RingElt& c) {
    FpMatrix mat(from.dim(), to.dim(), static_cast<std::uint32_t>(m.spec.p));
    for (std::size_t row = 0; row < from.dim(); ++row) {
        const auto& [g, mono] = from.basis[row];
        RingElt prod = re_mul(m.spec, re_monomial(mono), c);
        for (const auto& [mo, cc] : prod.terms) {
            auto it = to.index.find({g, mo});
            if (it == to.index.end())
                throw InvariantViolation("coeffring.DegreeMismatch", "product leaves the piece");
            mat.add_at(row, it->second, cc);
        }
    }
    return mat;
}

std::vector<PieceVec> cycle_basis(const DgModule& m, const GradedPiece& piece,
                                  const GradedPiece& next) {
    // cycles = left kernel of the boundary matrix
    auto mat = boundary_matrix(m, piece, next);
    FpMatrix t(mat.cols(), mat.rows(), mat.p());
    for (std::size_t r = 0; r < mat.rows(); ++r)
        for (std::size_t c = 0; c < mat.cols(); ++c) t.set(c, r, mat.get(r, c));
    return t.kernel_basis();
}

HomologyResult homology_in_degree(const DgModule& m, int d) {
    GradedPiece below = enumerate_piece(m, d - 1);
    GradedPiece here = enumerate_piece(m, d);
    GradedPiece above = enumerate_piece(m, d + 1);
    auto cycles = cycle_basis(m, here, above);

    FpRowSpace space(here.dim(), static_cast<std::uint32_t>(m.spec.p));
    if (below.dim() > 0 && here.dim() > 0) {
        auto bmat = boundary_matrix(m, below, here);
        for (std::size_t r = 0; r < bmat.rows(); ++r) {
            PieceVec row(here.dim());
            for (std::size_t ccol = 0; ccol < here.dim(); ++ccol) row[ccol] = bmat.get(r, ccol);
            space.insert(std::move(row));
        }
    }
    HomologyResult res;
    for (auto& z : cycles)
        if (space.insert(z)) {
            ++res.dim;
            res.reps.push_back(from_piece_vec(m, here, z));
        }
    return res;
}

// ---------------------------------------------------------------------------

LocalizedView make_localized_view(const DgModule& reduced) {
    LocalizedView v;
    v.reduced = &reduced;
    Monomial step;
    if (reduced.spec.kind == RingKind::S1Zp || reduced.spec.kind == RingKind::UPoly) {
        step.u = 1;
    } else {
        step.u = 2;  // V = U^2, a central cycle in the Pin rings
    }
    v.step = re_monomial(step);
    return v;
}

long LocalizedView::stable_rank(int d, const std::vector<PieceVec>& rows, int* witness_row) const {
    const DgModule& m = *reduced;
    if (witness_row) *witness_row = -1;
    if (rows.empty()) return 0;
    const int delta = step.degree();
    const auto p = static_cast<std::uint32_t>(m.spec.p);

    std::vector<PieceVec> cur = rows;
    GradedPiece piece = enumerate_piece(m, d);
    long prev_rank = -1;
    for (int k = 0; k <= max_extra_steps; ++k) {
        int deg = d + k * delta;
        // rank of cur modulo boundaries at this degree
        GradedPiece below = enumerate_piece(m, deg - 1);
        FpRowSpace space(piece.dim(), p);
        if (below.dim() > 0 && piece.dim() > 0) {
            auto bmat = boundary_matrix(m, below, piece);
            for (std::size_t r = 0; r < bmat.rows(); ++r) {
                PieceVec row(piece.dim());
                for (std::size_t ccol = 0; ccol < piece.dim(); ++ccol) row[ccol] = bmat.get(r, ccol);
                space.insert(std::move(row));
            }
        }
        std::size_t base = space.dim();
        long rank = 0;
        for (const auto& r : cur)
            if (space.insert(r)) ++rank;
        (void)base;

        if (rank == prev_rank) {
            if (witness_row && rank > 0) {
                FpRowSpace bsp(piece.dim(), p);
                if (below.dim() > 0 && piece.dim() > 0) {
                    auto bmat = boundary_matrix(m, below, piece);
                    for (std::size_t r = 0; r < bmat.rows(); ++r) {
                        PieceVec row(piece.dim());
                        for (std::size_t ccol = 0; ccol < piece.dim(); ++ccol)
                            row[ccol] = bmat.get(r, ccol);
                        bsp.insert(std::move(row));
                    }
                }
                for (std::size_t i = 0; i < cur.size(); ++i)
                    if (!bsp.contains(cur[i])) {
                        *witness_row = static_cast<int>(i);
                        break;
                    }
            }
            return rank;
        }
        prev_rank = rank;

        GradedPiece nextp = enumerate_piece(m, deg + delta);
        auto mm = mult_matrix(m, piece, nextp, step);
        std::vector<PieceVec> nxt;
        nxt.reserve(cur.size());
        for (const auto& r : cur) {
            PieceVec out(nextp.dim(), 0);
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (r[i] == 0) continue;
                for (std::size_t j = 0; j < nextp.dim(); ++j) {
                    std::uint64_t v = out[j] + static_cast<std::uint64_t>(r[i]) * mm.get(i, j) % p;
                    out[j] = static_cast<std::uint32_t>(v % p);
                }
            }
            nxt.push_back(std::move(out));
        }
        cur = std::move(nxt);
        piece = std::move(nextp);
    }
    throw InvariantViolation("coeffring.DegreeCapExceeded",
                             "localization tower did not stabilize within the step cap");
}

long LocalizedView::localized_dim(int d) const {
    const DgModule& m = *reduced;
    const int delta = step.degree();
    long prev = -1;
    for (int j = 0; j <= max_extra_steps; ++j) {
        int deg = d + j * delta;
        GradedPiece piece = enumerate_piece(m, deg);
        GradedPiece above = enumerate_piece(m, deg + 1);
        auto cycles = cycle_basis(m, piece, above);
        long r = stable_rank(deg, cycles, nullptr);
        if (r == prev) return r;
        prev = r;
    }
    throw InvariantViolation("coeffring.DegreeCapExceeded",
                             "localized dimension did not stabilize within the step cap");
}

}  // namespace latroot
