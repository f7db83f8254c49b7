// Exact arithmetic in the graded coefficient rings and free graded dg-modules
// over them:
//   S1Zp  p=2 : F_2[U,theta]                    d = 0
//   S1Zp  p>2 : F_p[U,R,S]/(R^2)                d = 0 (treated as formal)
//   Pin2      : F_2[Q,U]                        dU = Q^3
//   Pin2Z2    : F_2[Q,U,theta]                  dU = Q^3
// plus group-ring exponent products U^n and U_Q^n, tensor products, per-degree
// homology, and localization via stabilized multiplication towers.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latroot/gradedroot.hpp"
#include "latroot/linalg.hpp"
#include "latroot/numeric.hpp"

namespace latroot {

enum class RingKind { S1Zp, Pin2, Pin2Z2, UPoly };

struct RingSpec {
    RingKind kind = RingKind::S1Zp;
    long p = 2;

    static RingSpec s1zp(long p) { return {RingKind::S1Zp, p}; }
    static RingSpec pin2() { return {RingKind::Pin2, 2}; }
    static RingSpec pin2z2() { return {RingKind::Pin2Z2, 2}; }
    static RingSpec upoly(long p) { return {RingKind::UPoly, p}; }  // F_p[U], d = 0

    bool has_theta() const { return (kind == RingKind::S1Zp && p == 2) || kind == RingKind::Pin2Z2; }
    bool has_q() const { return kind == RingKind::Pin2 || kind == RingKind::Pin2Z2; }
    bool has_sr() const { return kind == RingKind::S1Zp && p > 2; }
    bool operator==(const RingSpec&) const = default;
};

// Monomial exponents; which fields may be nonzero depends on the ring.
// Degrees: U:2, S:2, R:1, Q:1, theta:1.
struct Monomial {
    std::int32_t u = 0, s = 0, r = 0, q = 0, t = 0;

    int degree() const { return 2 * u + 2 * s + r + q + t; }
    auto operator<=>(const Monomial&) const = default;
    std::string str() const;
};

// Sparse polynomial: sorted monomials with coefficients in (0, p).
struct RingElt {
    std::vector<std::pair<Monomial, std::uint32_t>> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_homogeneous() const;
    int degree() const;  // degree of a homogeneous element; -1 for 0
    std::uint32_t coeff_of(const Monomial& m) const;
    std::string str() const;
    bool operator==(const RingElt&) const = default;
};

RingElt re_monomial(const Monomial& m, std::uint32_t c = 1);
RingElt re_scalar(std::uint32_t c);
RingElt re_add(const RingSpec& spec, const RingElt& a, const RingElt& b);
RingElt re_scale(const RingSpec& spec, const RingElt& a, std::int64_t c);
RingElt re_mul(const RingSpec& spec, const RingElt& a, const RingElt& b);
// The ring differential (dU = Q^3 in the Pin rings; zero otherwise).
RingElt re_diff(const RingSpec& spec, const RingElt& a);

// U^n = prod_k (U + k S)^{n_k}; for p = 2, S means theta^2.  Requires n >= 0.
RingElt u_exp(const RingSpec& spec, const GroupRingElt& n);
// The four-case U_Q^n over the Pin(2)xZ_2 ring, n = n_+[0] + n_-[1].
RingElt uq_exp(const GroupRingElt& n);

// All legal monomials of the given degree, sorted.
std::vector<Monomial> monomials_of_degree(const RingSpec& spec, int k);

// ---------------------------------------------------------------------------

// Free graded dg-module of finite rank.
struct DgModule {
    struct Gen {
        std::string name;
        int degree = 0;
    };

    RingSpec spec;
    std::vector<Gen> gens;
    // diff[i] = differential of generator i as sum of coef * gen.
    std::vector<std::vector<std::pair<int, RingElt>>> diff;
    Rat anchor_shift = 0;  // absolute Q-valued degree shift carried as metadata

    int gen_index(const std::string& name) const;  // -1 if absent
};

// Sparse module element.
using ModElt = std::vector<std::pair<int, RingElt>>;

ModElt mod_add(const RingSpec& spec, const ModElt& a, const ModElt& b);
ModElt mod_scale(const RingSpec& spec, const ModElt& a, const RingElt& c);
// d(sum c_i g_i) with the Leibniz rule (ring differential included).
ModElt d_of(const DgModule& m, const ModElt& x);
std::string mod_str(const DgModule& m, const ModElt& x);

// Structural checks; throw InvariantViolation on failure.
void check_homogeneous(const DgModule& m);   // every entry matches deg(tgt)+|c| = deg(src)+1
void check_d_squared(const DgModule& m);     // symbolic d(d(g)) = 0 for all generators

DgModule tensor(const DgModule& a, const DgModule& b);
DgModule tensor_power(const DgModule& a, int n);

// Subcomplex / quotient support.
bool closed_under_d(const DgModule& m, const std::vector<char>& subset);
DgModule subcomplex(const DgModule& m, const std::vector<char>& keep);
DgModule quotient_complex(const DgModule& m, const std::vector<char>& kill);

// Collapses unit arrows (entries that are nonzero scalars) until none remain.
DgModule normalize_acyclic(const DgModule& m);

// Reductions along ring surjections (both are chain-map quotients):
DgModule reduce_to_u_only(const DgModule& m);  // S1Zp: S,R,theta -> 0
DgModule reduce_theta(const DgModule& m);      // Pin2Z2 -> Pin2: theta -> 0

// ---------------------------------------------------------------------------

struct GradedPiece {
    int degree = 0;
    std::vector<std::pair<int, Monomial>> basis;  // (gen, monomial), sorted
    std::map<std::pair<int, Monomial>, std::size_t> index;

    std::size_t dim() const { return basis.size(); }
};

GradedPiece enumerate_piece(const DgModule& m, int d);

using PieceVec = std::vector<std::uint32_t>;  // dense coordinates mod p

PieceVec to_piece_vec(const DgModule& m, const GradedPiece& piece, const ModElt& x);
ModElt from_piece_vec(const DgModule& m, const GradedPiece& piece, const PieceVec& v);

// Boundary matrix d : piece(d) -> piece(d+1); rows indexed by the source basis.
FpMatrix boundary_matrix(const DgModule& m, const GradedPiece& from, const GradedPiece& to);
// Multiplication by a homogeneous central cycle c : piece(d) -> piece(d + |c|).
FpMatrix mult_matrix(const DgModule& m, const GradedPiece& from, const GradedPiece& to,
                     const RingElt& c);

struct HomologyResult {
    long dim = 0;
    std::vector<ModElt> reps;  // representative cycles
};
HomologyResult homology_in_degree(const DgModule& m, int d);

// Basis of cycles at degree d (as dense vectors over the piece).
std::vector<PieceVec> cycle_basis(const DgModule& m, const GradedPiece& piece, const GradedPiece& next);

// ---------------------------------------------------------------------------
// Localization by inverting U, computed through stabilized multiplication
// towers (no infinite-dimensional pieces are ever materialised):
//   S1Zp rings: step U (a central cycle since d = 0);
//   Pin rings:  step V = U^2 after reducing theta (U is not a cycle, V is).

struct LocalizedView {
    const DgModule* reduced;  // reduced module (u_only or theta-free); not owned
    RingElt step;             // U or U^2
    int max_extra_steps = 64;

    // dim of the degree-d piece of the localized homology.
    long localized_dim(int d) const;
    // Rank of the stably-surviving image of span(rows) inside localized degree
    // d homology; rows live in piece(reduced, d).  If witness_row is non-null,
    // stores the index of some row with nonzero stable image (or -1).
    long stable_rank(int d, const std::vector<PieceVec>& rows, int* witness_row = nullptr) const;
};

LocalizedView make_localized_view(const DgModule& reduced);

}  // namespace latroot
