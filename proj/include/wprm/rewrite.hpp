#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/lattice.hpp"
#include "wprm/plane.hpp"

namespace wprm {

/// Monomial x0^e0 * x1^e1 * x2^e2; weighted degree e0 + a*e1 + b*e2.
struct monomial {
    long long e0 = 0, e1 = 0, e2 = 0;

    bool operator==(const monomial&) const = default;

    bool divides(const monomial& m) const { return e0 <= m.e0 && e1 <= m.e1 && e2 <= m.e2; }

    /// Lex with x2 > x1 > x0.
    friend bool operator<(const monomial& l, const monomial& r) {
        if (l.e2 != r.e2) return l.e2 < r.e2;
        if (l.e1 != r.e1) return l.e1 < r.e1;
        return l.e0 < r.e0;
    }

    std::string to_string() const {
        return std::to_string(e0) + "," + std::to_string(e1) + "," + std::to_string(e2);
    }
};

inline long long weighted_degree(const monomial& m, const plane& pl) {
    return m.e0 + pl.a() * m.e1 + pl.b() * m.e2;
}

/// The degree-d monomial with exponent pair (a1,a2): x0^{d-a*a1-b*a2} x1^{a1} x2^{a2}.
inline monomial monomial_of(const lattice_point& p, long long d, const plane& pl) {
    long long e0 = d - pl.a() * p.a1 - pl.b() * p.a2;
    if (e0 < 0) fail(errc::bad_argument, "monomial_of: point outside P_d");
    return {e0, p.a1, p.a2};
}

/// A pure-difference binomial lhs - rhs vanishing on Y, oriented lhs > rhs.
struct binomial_relation {
    monomial lhs, rhs;
};

/// The universal Groebner (and Graver) basis {f0, f1, f2} of I(Y) under lex
/// x2 > x1 > x0; fi omits the variable xi.
inline std::vector<binomial_relation> groebner_basis(const plane& pl) {
    const long long a = pl.a(), b = pl.b(), q = pl.q();
    return {
        {{0, 1, (q - 1) * a + 1}, {0, (q - 1) * b + 1, 1}}, // f0: x1*x2^{(q-1)a+1} -> x1^{(q-1)b+1}*x2
        {{1, 0, q}, {(q - 1) * b + 1, 0, 1}},               // f1: x0*x2^q -> x0^{(q-1)b+1}*x2
        {{1, q, 0}, {(q - 1) * a + 1, 1, 0}},               // f2: x0*x1^q -> x0^{(q-1)a+1}*x1
    };
}

/// One rewrite step by the given rule, if its leading monomial divides m.
inline bool rewrite_step(monomial& m, const binomial_relation& rel) {
    if (!rel.lhs.divides(m)) return false;
    m.e0 += rel.rhs.e0 - rel.lhs.e0;
    m.e1 += rel.rhs.e1 - rel.lhs.e1;
    m.e2 += rel.rhs.e2 - rel.lhs.e2;
    return true;
}

/// Rewrites until no rule applies (f0, then f1, then f2 at each step); the
/// result is the standard monomial of m's class, with exponent pair in
/// red(deg m).  Terminates because every step strictly decreases lex order.
inline monomial normal_form(monomial m, const plane& pl) {
    const auto rules = groebner_basis(pl);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rel : rules)
            if (rewrite_step(m, rel)) { changed = true; break; }
    }
    return m;
}

/// Standard monomials of degree d, i.e. the monomials of red(d), sorted.
inline std::vector<monomial> standard_monomials(const plane& pl, long long d) {
    std::vector<monomial> out;
    for (const auto& p : compute_reduction(pl, d).all()) out.push_back(monomial_of(p, d, pl));
    return out;
}

/// The footprint complement of `lead` in degree d_tilde: standard monomials
/// of degree d_tilde not divisible by lead.
inline std::vector<monomial> footprint(const plane& pl, long long d_tilde, const monomial& lead) {
    if (d_tilde < weighted_degree(lead, pl))
        fail(errc::bad_argument, "footprint: d_tilde below deg(lead)");
    std::vector<monomial> out;
    for (const auto& m : standard_monomials(pl, d_tilde))
        if (!lead.divides(m)) out.push_back(m);
    return out;
}

/// |projective shadow| of x^{a,d} in degree d_tilde: the number of standard
/// monomials of degree d_tilde divisible by x^{a,d}.  This enumeration is
/// the oracle against which the closed formula L(a) is tested.
inline long long shadow_size(const plane& pl, long long d_tilde, const lattice_point& a, long long d) {
    if (!in_regularity_set(pl, d_tilde))
        fail(errc::degree_not_regular, "shadow_size: d_tilde not in reg(Y)");
    if (d_tilde < d) fail(errc::bad_argument, "shadow_size: d_tilde < d");
    const monomial lead = monomial_of(a, d, pl);
    long long count = 0;
    for (const auto& m : standard_monomials(pl, d_tilde))
        if (lead.divides(m)) ++count;
    return count;
}

} // namespace wprm
