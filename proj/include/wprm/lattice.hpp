#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/plane.hpp"

namespace wprm {

inline constexpr long long max_degree = 1'000'000;

inline void check_degree(long long d) {
    if (d > max_degree) fail(errc::too_large, "degree exceeds guard " + std::to_string(max_degree));
}

/// Exponent pair (a1,a2) of x1,x2; lies in P_d iff a*a1 + b*a2 <= d.
struct lattice_point {
    long long a1 = 0, a2 = 0;

    bool operator==(const lattice_point&) const = default;

    /// Order induced by lex on monomials with x2 > x1 > x0: compare a2 first.
    friend bool operator<(const lattice_point& l, const lattice_point& r) {
        return l.a2 != r.a2 ? l.a2 < r.a2 : l.a1 < r.a1;
    }
};

/// All (a1,a2) in N^2 with a*a1 + b*a2 <= d, sorted.
inline std::vector<lattice_point> polygon_points(const plane& pl, long long d) {
    if (d < 0) fail(errc::bad_argument, "polygon_points: d < 0");
    check_degree(d);
    std::vector<lattice_point> pts;
    for (long long a2 = 0; a2 * pl.b() <= d; ++a2)
        for (long long a1 = 0; a1 * pl.a() + a2 * pl.b() <= d; ++a1) pts.push_back({a1, a2});
    std::sort(pts.begin(), pts.end());
    return pts;
}

/// Number of representations d = ma*a + mb*b with (ma,mb) in N^2.
inline long long denumerant(long long d, long long a, long long b) {
    if (d < 0) return 0;
    check_degree(d);
    long long count = 0;
    for (long long ma = 0; ma * a <= d; ++ma)
        if ((d - ma * a) % b == 0) ++count;
    return count;
}

inline bool in_semigroup(long long x, long long a, long long b) { return denumerant(x, a, b) > 0; }

/// The per-degree integers controlling which stratum formulas apply.
struct degree_profile {
    long long d = 0;
    long long mu_a = 0, mu_b = 0;
    long long alpha2 = 0; // floor((d-1-a(q-1))/b), possibly negative
    long long ell = 0;    // max(0, min(q-1, alpha2))
    std::optional<lattice_point> N0; // first interior hypotenuse point (x',y')
    long long t = 0;      // min(q-2, floor((d-b*y'-1)/(ab))); valid iff N0
    long long i_max = 0;  // floor((d-b*y'-1)/(ab)); valid iff N0
};

namespace detail {

// Floor division for a possibly negative numerator (den > 0).
inline long long floor_div(long long num, long long den) {
    long long quot = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0))) --quot;
    return quot;
}

} // namespace detail

inline degree_profile compute_degree_profile(const plane& pl, long long d) {
    if (d < 1) fail(errc::bad_argument, "degree_profile: d < 1");
    check_degree(d);
    const long long a = pl.a(), b = pl.b(), q = pl.q();
    degree_profile p;
    p.d = d;
    p.mu_a = std::min((d - 1) / a, q - 1);
    p.mu_b = std::min((d - 1) / b, q - 1);
    p.alpha2 = detail::floor_div(d - 1 - a * (q - 1), b);
    p.ell = std::max<long long>(0, std::min(q - 1, p.alpha2));
    for (long long yp = 1; b * yp < d; ++yp) {
        if ((d - b * yp) % a == 0) {
            p.N0 = lattice_point{(d - b * yp) / a, yp};
            p.i_max = (d - b * yp - 1) / (a * b);
            p.t = std::min(q - 2, p.i_max);
            break;
        }
    }
    return p;
}

/// The three strata of red(d): the rectangle R, the trapezoid T, and the
/// hypotenuse points H.
struct reduction {
    std::vector<lattice_point> R, T, H;

    std::vector<lattice_point> all() const {
        std::vector<lattice_point> out;
        out.reserve(R.size() + T.size() + H.size());
        out.insert(out.end(), R.begin(), R.end());
        out.insert(out.end(), T.begin(), T.end());
        out.insert(out.end(), H.begin(), H.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    bool contains(const lattice_point& p) const {
        auto in = [&](const std::vector<lattice_point>& v) {
            return std::find(v.begin(), v.end(), p) != v.end();
        };
        return in(R) || in(T) || in(H);
    }
};

inline reduction compute_reduction(const plane& pl, long long d) {
    const degree_profile pr = compute_degree_profile(pl, d);
    const long long a = pl.a(), b = pl.b();
    reduction red;
    for (long long y = 0; y <= pr.ell; ++y)
        for (long long x = 0; x <= pr.mu_a; ++x) red.R.push_back({x, y});
    for (long long y = pr.ell + 1; y <= pr.mu_b; ++y)
        for (long long x = 0; x <= (d - 1 - b * y) / a; ++x) red.T.push_back({x, y});
    if (pr.N0) {
        for (long long i = 0; i <= pr.t; ++i) {
            lattice_point p{pr.N0->a1 - i * b, pr.N0->a2 + i * a};
            if (p.a1 >= 0) red.H.push_back(p);
        }
    }
    if (b <= d && d % b == 0) red.H.push_back({0, d / b});
    if (d % a == 0) red.H.push_back({d / a, 0});
    std::sort(red.R.begin(), red.R.end());
    std::sort(red.T.begin(), red.T.end());
    std::sort(red.H.begin(), red.H.end());
    return red;
}

/// |H(d)| by the closed formula: den(d;a,b) for d <= ab(q-1), otherwise
/// q-1 plus one per divisible corner.
inline long long hypotenuse_count(const plane& pl, long long d) {
    const long long a = pl.a(), b = pl.b(), q = pl.q();
    if (d <= a * b * (q - 1)) return denumerant(d, a, b);
    return q - 1 + (d % a == 0 ? 1 : 0) + (d % b == 0 ? 1 : 0);
}

/// dim C_d = (ell+1)*mu_a + mu_b + 1 + sum_{y=ell+1}^{mu_b} floor((d-1-by)/a) + |H(d)|.
inline long long dimension(const plane& pl, long long d) {
    const degree_profile pr = compute_degree_profile(pl, d);
    long long dim = (pr.ell + 1) * pr.mu_a + pr.mu_b + 1;
    for (long long y = pr.ell + 1; y <= pr.mu_b; ++y) dim += (d - 1 - pl.b() * y) / pl.a();
    return dim + hypotenuse_count(pl, d);
}

/// Closed form for a = 1:
/// (ell+1)(mu_a+1) + (mu_b-ell)d - b*C(mu_b+1,2) + b*C(ell+1,2) + mu_b + 1 + 1_{b|d}.
inline long long dimension_a1_closed_form(const plane& pl, long long d) {
    if (pl.a() != 1) fail(errc::bad_argument, "dimension_a1_closed_form: requires a = 1");
    const degree_profile pr = compute_degree_profile(pl, d);
    const long long b = pl.b();
    auto choose2 = [](long long m) { return m * (m - 1) / 2; };
    return (pr.ell + 1) * (pr.mu_a + 1) + (pr.mu_b - pr.ell) * d - b * choose2(pr.mu_b + 1) +
           b * choose2(pr.ell + 1) + pr.mu_b + 1 + (d % b == 0 ? 1 : 0);
}

/// d in reg(Y) iff d = d0*ab with d0 >= q and (a+b)(q-1) < d; these are the
/// degrees where C_d is the trivial [n,n,1] code.
inline bool in_regularity_set(const plane& pl, long long d) {
    if (d < 0) fail(errc::bad_argument, "in_regularity_set: d < 0");
    check_degree(d);
    const long long a = pl.a(), b = pl.b(), q = pl.q();
    return d % (a * b) == 0 && d / (a * b) >= q && (a + b) * (q - 1) < d;
}

/// Least regular degree >= d + (q-1)*max(a+b, ab) + slack; suitable for the
/// degree-independent shadow count of the footprint bound.
inline long long smallest_regular_degree_above(const plane& pl, long long d, long long slack = 0) {
    if (d < 1 || slack < 0) fail(errc::bad_argument, "smallest_regular_degree_above: bad arguments");
    const long long a = pl.a(), b = pl.b(), q = pl.q();
    long long lo = d + (q - 1) * std::max(a + b, a * b) + slack;
    // reg(Y) is an arithmetic progression of step ab; start at the first multiple.
    long long dt = ((lo + a * b - 1) / (a * b)) * (a * b);
    while (!in_regularity_set(pl, dt)) dt += a * b;
    return dt;
}

/// JSON with three arrays "R","T","H" of [a1,a2] pairs, sorted lex.
inline std::string to_json(const reduction& red) {
    auto arr = [](const std::vector<lattice_point>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += "[" + std::to_string(v[i].a1) + "," + std::to_string(v[i].a2) + "]";
        }
        return s + "]";
    };
    return "{\"R\":" + arr(red.R) + ",\"T\":" + arr(red.T) + ",\"H\":" + arr(red.H) + "}";
}

} // namespace wprm
