#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/gf.hpp"
#include "wprm/lattice.hpp"
#include "wprm/plane.hpp"
#include "wprm/rewrite.hpp"

namespace wprm {

/// A homogeneous polynomial of one weighted degree, as a term map with no
/// zero coefficients.
class polynomial {
public:
    polynomial() = default;

    void add_term(const monomial& m, fe c, const field& F) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = F.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<monomial, fe>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Weighted degree; requires a nonzero polynomial.
    long long degree(const plane& pl) const {
        if (terms_.empty()) fail(errc::bad_argument, "polynomial: degree of zero");
        long long d = weighted_degree(terms_.begin()->first, pl);
        for (const auto& [m, c] : terms_)
            if (weighted_degree(m, pl) != d) fail(errc::bad_argument, "polynomial: not homogeneous");
        return d;
    }

    static polynomial product(const polynomial& f, const polynomial& g, const field& F) {
        polynomial out;
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_)
                out.add_term({mf.e0 + mg.e0, mf.e1 + mg.e1, mf.e2 + mg.e2}, F.mul(cf, cg), F);
        return out;
    }

    /// "coeff*x0^e0*x1^e1*x2^e2" terms joined by "+", in increasing lex order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += "+";
            s += std::to_string(c) + "*x0^" + std::to_string(m.e0) + "*x1^" + std::to_string(m.e1) +
                 "*x2^" + std::to_string(m.e2);
        }
        return s;
    }

private:
    std::map<monomial, fe> terms_;
};

inline fe evaluate_monomial(const monomial& m, const proj_point& P, const field& F) {
    // 0^0 = 1 via the pow convention.
    return F.mul(F.mul(F.pow(P.x0, m.e0), F.pow(P.x1, m.e1)), F.pow(P.x2, m.e2));
}

inline fe evaluate(const polynomial& f, const proj_point& P, const field& F) {
    fe acc = 0;
    for (const auto& [m, c] : f.terms()) acc = F.add(acc, F.mul(c, evaluate_monomial(m, P, F)));
    return acc;
}

/// Number of points of Y where f does not vanish.
inline long long codeword_weight(const polynomial& f, const plane& pl) {
    long long w = 0;
    for (const auto& P : enumerate_points(pl))
        if (evaluate(f, P, pl.gf()) != 0) ++w;
    return w;
}

/// A generator matrix over F_q.  For C_d the rows are the evaluations of the
/// standard monomials of degree d (sorted) at the canonical points of Y.
struct linear_code {
    std::vector<std::vector<fe>> generator; // rows x length
    std::vector<monomial> row_monomials;    // one per row, when applicable
    long long length = 0;
    long long degree = 0;

    long long rows() const { return static_cast<long long>(generator.size()); }
};

inline linear_code build_code(const plane& pl, long long d) {
    if (d < 1) fail(errc::bad_argument, "build_code: d < 1");
    linear_code code;
    code.degree = d;
    code.length = pl.n();
    code.row_monomials = standard_monomials(pl, d);
    const auto pts = enumerate_points(pl);
    for (const auto& m : code.row_monomials) {
        std::vector<fe> row(pts.size());
        for (size_t j = 0; j < pts.size(); ++j) row[j] = evaluate_monomial(m, pts[j], pl.gf());
        code.generator.push_back(std::move(row));
    }
    return code;
}

/// Row rank by Gaussian elimination; pivots are chosen first nonzero,
/// leftmost, so the echelon form is deterministic.
inline long long rank(std::vector<std::vector<fe>> M, const field& F) {
    if (M.empty()) return 0;
    const size_t cols = M[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < M.size(); ++c) {
        size_t piv = r;
        while (piv < M.size() && M[piv][c] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[r]);
        const fe inv = F.inv(M[r][c]);
        for (size_t j = c; j < cols; ++j) M[r][j] = F.mul(M[r][j], inv);
        for (size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0) continue;
            const fe factor = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(factor, M[r][j]));
        }
        ++r;
    }
    return static_cast<long long>(r);
}

inline long long rank(const linear_code& code, const field& F) { return rank(code.generator, F); }

struct distance_result {
    long long value = 0;
    enum class kind { exact, lower_bound } status = kind::exact;
    std::optional<polynomial> witness;

    bool exact() const { return status == kind::exact; }

    std::string to_json() const {
        std::string s = "{\"value\":" + std::to_string(value) + ",\"status\":\"" +
                        (exact() ? "exact" : "lower_bound") + "\"";
        if (witness) s += ",\"witness\":\"" + witness->to_string() + "\"";
        return s + "}";
    }
};

inline constexpr long long default_search_cap = 1LL << 24;

/// Exact minimum weight by enumerating all q^rows - 1 nonzero messages in
/// base-q counter order, maintaining the codeword incrementally (one
/// generator row updated per digit change).  Returns the smallest minimizing
/// message as a witness polynomial when row monomials are available.
inline distance_result exhaustive_min_distance(const linear_code& code, const plane& pl,
                                               long long cap = default_search_cap) {
    const field& F = pl.gf();
    const long long q = F.q(), k = code.rows(), n = code.length;
    if (k == 0) fail(errc::bad_argument, "exhaustive_min_distance: empty code");
    long long space = 1;
    for (long long i = 0; i < k; ++i) {
        if (space > cap / q) fail(errc::too_large, "exhaustive_min_distance: q^k exceeds cap");
        space *= q;
    }
    if (space > cap) fail(errc::too_large, "exhaustive_min_distance: q^k exceeds cap");

    std::vector<fe> msg(k, 0);
    std::vector<fe> word(n, 0);
    long long weight = 0;
    long long best = n + 1;
    std::vector<fe> best_msg;

    auto apply_digit = [&](long long i, fe from, fe to) {
        const fe delta = F.sub(to, from);
        const auto& row = code.generator[i];
        for (long long j = 0; j < n; ++j) {
            if (row[j] == 0) continue;
            if (word[j] != 0) --weight;
            word[j] = F.add(word[j], F.mul(delta, row[j]));
            if (word[j] != 0) ++weight;
        }
    };

    for (long long count = 1; count < space; ++count) {
        long long i = 0;
        while (msg[i] == q - 1) {
            apply_digit(i, q - 1, 0);
            msg[i] = 0;
            ++i;
        }
        apply_digit(i, msg[i], msg[i] + 1);
        msg[i] += 1;
        if (weight < best) {
            best = weight;
            best_msg = msg;
        }
    }

    distance_result res;
    res.value = best;
    res.status = distance_result::kind::exact;
    if (!code.row_monomials.empty()) {
        polynomial w;
        for (long long i = 0; i < k; ++i)
            if (best_msg[i] != 0) w.add_term(code.row_monomials[i], best_msg[i], F);
        res.witness = w;
    }
    return res;
}

/// The q+1 points of Y on the line x0 = 0, in enumeration order.
inline std::vector<proj_point> line_points(const plane& pl) {
    std::vector<proj_point> out;
    for (const auto& P : enumerate_points(pl))
        if (P.x0 == 0) out.push_back(P);
    return out;
}

namespace detail {

inline std::vector<lattice_point> hypotenuse_set(const plane& pl, long long d) {
    if (d == 0) return {{0, 0}};
    return compute_reduction(pl, d).H;
}

} // namespace detail

/// The reduced code C~_{d,Z} on the q+1 line points, spanned by
/// ev_Z(x^{a,d-bq} * x2^q), a in H(d-bq), and ev_Z(x^{a,d-aq} * x1^q),
/// a in H(d-aq).  Its exhaustive distance resolves the b = a+1 window.
inline linear_code tilde_code(const plane& pl, long long d) {
    const long long a = pl.a(), b = pl.b(), q = pl.q();
    if (d < b * q) fail(errc::degree_too_small, "tilde_code: requires d >= bq");
    const auto Z = line_points(pl);
    linear_code code;
    code.degree = d;
    code.length = static_cast<long long>(Z.size());
    auto push_rows = [&](long long dsub, bool x2_power) {
        for (const auto& p : detail::hypotenuse_set(pl, dsub)) {
            monomial m = monomial_of(p, dsub, pl);
            if (x2_power)
                m.e2 += q;
            else
                m.e1 += q;
            std::vector<fe> row(Z.size());
            for (size_t j = 0; j < Z.size(); ++j) row[j] = evaluate_monomial(m, Z[j], pl.gf());
            code.row_monomials.push_back(m);
            code.generator.push_back(std::move(row));
        }
    };
    push_rows(d - b * q, /*x2_power=*/true);
    push_rows(d - a * q, /*x2_power=*/false);
    return code;
}

/// Exact minimum distance of the tilde code: enumerate the span of a row
/// basis (rows of tilde codes need not be independent).
inline distance_result tilde_code_min_distance(const plane& pl, long long d,
                                               long long cap = default_search_cap) {
    linear_code code = tilde_code(pl, d);
    if (code.rows() == 0) fail(errc::bad_argument, "tilde_code_min_distance: no rows");
    // Reduce to an independent row basis before enumerating.
    std::vector<std::vector<fe>> M = code.generator;
    const field& F = pl.gf();
    const size_t cols = M[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < M.size(); ++c) {
        size_t piv = r;
        while (piv < M.size() && M[piv][c] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[r]);
        const fe inv = F.inv(M[r][c]);
        for (size_t j = 0; j < cols; ++j) M[r][j] = F.mul(M[r][j], inv);
        for (size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0) continue;
            const fe factor = M[i][c];
            for (size_t j = 0; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(factor, M[r][j]));
        }
        ++r;
    }
    linear_code basis;
    basis.degree = d;
    basis.length = code.length;
    basis.generator.assign(M.begin(), M.begin() + r);
    distance_result res = exhaustive_min_distance(basis, pl, cap);
    res.witness.reset(); // echelon rows carry no monomial labels
    return res;
}

namespace detail {

inline polynomial linear_factor(long long var, fe root, long long weight_exp, const field& F) {
    // x_var - root * x0^weight_exp
    polynomial f;
    monomial lead{0, 0, 0};
    (var == 1 ? lead.e1 : lead.e2) = 1;
    f.add_term(lead, 1, F);
    f.add_term({weight_exp, 0, 0}, F.neg(root), F);
    return f;
}

inline polynomial monomial_poly(const monomial& m, const field& F) {
    polynomial f;
    f.add_term(m, 1, F);
    return f;
}

} // namespace detail

/// The explicit minimal-weight polynomial for degree d, when one of the
/// product constructions applies:
///   (i)   d <= a(q-1):              weight q(q - floor((d-1)/a))
///   (ii)  a(q-1) < d <= a(q-1)+b:   weight q
///   (iii) a(q-1)+b < d <= (a+b)(q-1): weight q - ell
///   (iv)  d > (a+b)(q-1):           weight 1
///   (v)   a = 1, b >= 2, b | d, d/b >= q: weight 1
/// Root sets are the smallest field elements in encoding order.
inline polynomial extremal_polynomial(const plane& pl, long long d) {
    const field& F = pl.gf();
    const long long a = pl.a(), b = pl.b(), q = pl.q();
    if (d < 1) fail(errc::bad_argument, "extremal_polynomial: d < 1");

    if (a == 1 && b >= 2 && d % b == 0 && d / b >= q) {
        // x2^{1+d0-q} (x2^{q-1} - x0^{b(q-1)} - x1^{(q-1)(b-1)}(x1^{q-1} - x0^{q-1}))
        const long long d0 = d / b;
        polynomial inner;
        inner.add_term({0, 0, q - 1}, 1, F);
        inner.add_term({b * (q - 1), 0, 0}, F.neg(1), F);
        inner.add_term({0, (q - 1) * b, 0}, F.neg(1), F);
        inner.add_term({q - 1, (q - 1) * (b - 1), 0}, 1, F);
        return polynomial::product(detail::monomial_poly({0, 0, 1 + d0 - q}, F), inner, F);
    }

    if (d <= a * (q - 1)) { // case (i)
        const long long r = (d - 1) % a, cnt = (d - 1) / a;
        polynomial f = detail::monomial_poly({r + 1, 0, 0}, F);
        for (fe y = 0; y < cnt; ++y) f = polynomial::product(f, detail::linear_factor(1, y, a, F), F);
        return f;
    }
    polynomial x1_nonzero = detail::monomial_poly({0, 0, 0}, F);
    for (fe y = 1; y < q; ++y) x1_nonzero = polynomial::product(x1_nonzero, detail::linear_factor(1, y, a, F), F);

    if (d <= a * (q - 1) + b) { // case (ii)
        return polynomial::product(detail::monomial_poly({d - (q - 1) * a, 0, 0}, F), x1_nonzero, F);
    }
    if (d <= (a + b) * (q - 1)) { // case (iii)
        const long long ell = (d - 1 - a * (q - 1)) / b;
        const long long r = (d - 1 - a * (q - 1)) - ell * b;
        polynomial f = polynomial::product(detail::monomial_poly({r + 1, 0, 0}, F), x1_nonzero, F);
        for (fe y = 0; y < ell; ++y) f = polynomial::product(f, detail::linear_factor(2, y, b, F), F);
        return f;
    }
    // case (iv)
    polynomial f = polynomial::product(detail::monomial_poly({d - (q - 1) * (a + b), 0, 0}, F), x1_nonzero, F);
    for (fe y = 1; y < q; ++y) f = polynomial::product(f, detail::linear_factor(2, y, b, F), F);
    return f;
}

/// The weight-L(a1,a2) witness for a hypotenuse point with a2 >= q, available
/// when a | q-1 and b = a+1 (the high-a2 window construction).
inline polynomial high_a2_witness(const plane& pl, long long d, const lattice_point& pt) {
    const field& F = pl.gf();
    const long long a = pl.a(), b = pl.b(), q = pl.q();
    if ((q - 1) % a != 0 || b != a + 1)
        fail(errc::no_branch_applies, "high_a2_witness: requires a | q-1 and b = a+1");
    if (pt.a2 < q || a * pt.a1 + b * pt.a2 != d)
        fail(errc::bad_argument, "high_a2_witness: point must lie on the hypotenuse with a2 >= q");

    const long long k2 = (pt.a2 - q) / a;
    const long long r2 = (pt.a2 - q) % a;
    const fe eta = F.primitive_element();

    // x1^{a1} x2^{1+r2} (x2^{q-1} - x0^{b(q-1)} - x1^{(q-1)/a}(x1^{q-1} - x0^{a(q-1)}))
    polynomial inner;
    inner.add_term({0, 0, q - 1}, 1, F);
    inner.add_term({b * (q - 1), 0, 0}, F.neg(1), F);
    inner.add_term({0, (q - 1) / a + (q - 1), 0}, F.neg(1), F);
    inner.add_term({a * (q - 1), (q - 1) / a, 0}, 1, F);
    polynomial f = polynomial::product(detail::monomial_poly({0, pt.a1, 1 + r2}, F), inner, F);

    // k2 factors (x2^a - eta^j x1^b), with j in {1..q-1} avoiding multiples of a.
    long long picked = 0;
    for (long long j = 1; j < q && picked < k2; ++j) {
        if (j % a == 0) continue;
        polynomial factor;
        factor.add_term({0, 0, a}, 1, F);
        factor.add_term({0, b, 0}, F.neg(F.pow(eta, j)), F);
        f = polynomial::product(f, factor, F);
        ++picked;
    }
    if (picked < k2) fail(errc::no_branch_applies, "high_a2_witness: not enough admissible factors");
    return f;
}

/// Text format: first line "n k q a b d", then one line per row of
/// space-separated field-element encodings.
inline std::string to_matrix_text(const linear_code& code, const plane& pl) {
    std::string s = std::to_string(code.length) + " " + std::to_string(code.rows()) + " " +
                    std::to_string(pl.q()) + " " + std::to_string(pl.a()) + " " +
                    std::to_string(pl.b()) + " " + std::to_string(code.degree) + "\n";
    for (const auto& row : code.generator) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) s += " ";
            s += std::to_string(row[j]);
        }
        s += "\n";
    }
    return s;
}

} // namespace wprm
