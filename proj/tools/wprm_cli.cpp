// Command-line interface for weighted projective Reed-Muller code
// construction and verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wprm/bounds.hpp"
#include "wprm/evalcode.hpp"
#include "wprm/gf.hpp"
#include "wprm/lattice.hpp"
#include "wprm/plane.hpp"
#include "wprm/rewrite.hpp"

using nlohmann::json;

namespace {

constexpr long long dmax_guard = 10000;

struct run_config {
    int q = 0;
    long long a = 0, b = 0, d = 0;
    std::string format = "text";
    long long cap = wprm::default_search_cap;
    long long seed = 0;
    std::optional<long long> skip_exhaustive_above;
};

wprm::plane make_plane(const run_config& cfg) {
    // q must be a prime power; factor it as p^k.
    int p = cfg.q, k = 1;
    for (int f = 2; f * f <= p; ++f) {
        if (p % f != 0) continue;
        k = 0;
        int m = p;
        while (m % f == 0) {
            m /= f;
            ++k;
        }
        if (m != 1) wprm::fail(wprm::errc::not_prime, "q is not a prime power");
        p = f;
        break;
    }
    return wprm::plane(wprm::field(p, k), cfg.a, cfg.b);
}

json distance_to_json(const wprm::distance_result& r) {
    json j = {{"value", r.value}, {"status", r.exact() ? "exact" : "lower_bound"}};
    if (r.witness) j["witness"] = r.witness->to_string();
    return j;
}

int cmd_params(const run_config& cfg) {
    const wprm::plane pl = make_plane(cfg);
    const long long k = wprm::dimension(pl, cfg.d);
    const wprm::distance_result dm = wprm::min_distance(pl, cfg.d, cfg.cap);
    const bool reg = wprm::in_regularity_set(pl, cfg.d);
    if (cfg.format == "json") {
        json j = {{"q", cfg.q},        {"a", cfg.a},
                  {"b", cfg.b},        {"d", cfg.d},
                  {"n", pl.n()},       {"k", k},
                  {"regular", reg},    {"dmin", distance_to_json(dm)},
                  {"field", pl.gf().spec_string()}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "n=" << pl.n() << " k=" << k << " dmin=" << dm.value << "("
              << (dm.exact() ? "exact" : "lower_bound") << ")"
              << " regular=" << (reg ? "yes" : "no") << " field=" << pl.gf().spec_string() << "\n";
    if (dm.witness) std::cout << "witness: " << dm.witness->to_string() << "\n";
    return 0;
}

int cmd_table(const run_config& cfg, const std::string& out_path) {
    const wprm::plane pl = make_plane(cfg);
    std::ostringstream os;
    json rows = json::array();
    if (cfg.format == "csv") os << "d,n,k,dmin,status\n";
    for (long long d = 1; d <= cfg.d; ++d) {
        const long long k = wprm::dimension(pl, d);
        const wprm::distance_result dm = wprm::min_distance(pl, d, cfg.cap);
        const std::string status = dm.exact() ? "exact" : "lower_bound";
        if (cfg.format == "json")
            rows.push_back({{"d", d}, {"n", pl.n()}, {"k", k}, {"dmin", dm.value}, {"status", status}});
        else
            os << d << "," << pl.n() << "," << k << "," << dm.value << "," << status << "\n";
    }
    if (cfg.format == "json") os << rows.dump(2) << "\n";
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 2;
        }
        f << os.str();
    }
    return 0;
}

int cmd_matrix(const run_config& cfg, const std::string& out_path) {
    const wprm::plane pl = make_plane(cfg);
    const wprm::linear_code code = wprm::build_code(pl, cfg.d);
    const std::string text = wprm::to_matrix_text(code, pl);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

int cmd_reduction(const run_config& cfg) {
    const wprm::plane pl = make_plane(cfg);
    std::cout << wprm::to_json(wprm::compute_reduction(pl, cfg.d)) << "\n";
    return 0;
}

int cmd_distance(const run_config& cfg) {
    const wprm::plane pl = make_plane(cfg);
    json j = {{"q", cfg.q}, {"a", cfg.a}, {"b", cfg.b}, {"d", cfg.d}};
    j["formula"] = distance_to_json(wprm::min_distance(pl, cfg.d, cfg.cap));
    if (!wprm::in_regularity_set(pl, cfg.d)) {
        const wprm::l_value lv = wprm::min_L_over_reduction(pl, cfg.d);
        j["footprint_bound"] = {{"value", lv.value}, {"point", {lv.point.a1, lv.point.a2}}};
        if (cfg.d >= pl.b() * pl.q()) {
            try {
                const wprm::distance_result sub = wprm::tilde_code_min_distance(pl, cfg.d, cfg.cap);
                j["tilde_code_dmin"] = sub.value;
            } catch (const wprm::error&) {
                // enumeration over the cap; omit
            }
        }
    }
    const wprm::linear_code code = wprm::build_code(pl, cfg.d);
    try {
        const wprm::distance_result ex = wprm::exhaustive_min_distance(code, pl, cfg.cap);
        j["exhaustive"] = distance_to_json(ex);
    } catch (const wprm::error& e) {
        if (e.code() != wprm::errc::too_large) throw;
        j["exhaustive"] = "skipped: search space exceeds cap";
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct verify_state {
    long long checked = 0;
    bool failed = false;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && !failed) {
            failed = true;
            first_failure = what;
        }
    }
};

int cmd_verify(const run_config& cfg) {
    const wprm::plane pl = make_plane(cfg);
    const wprm::field& F = pl.gf();
    const long long q = pl.q(), n = pl.n();

    verify_state rank_check, shadow_check, minL_check, dist_check, rewrite_check, witness_check;
    long long exhaustive_skipped = 0;

    for (long long d = 1; d <= cfg.d; ++d) {
        const bool regular = wprm::in_regularity_set(pl, d);

        // (1) matrix rank = |red(d)| = closed-form dimension
        const wprm::linear_code code = wprm::build_code(pl, d);
        const long long k = wprm::dimension(pl, d);
        const long long rk = wprm::rank(code, F);
        rank_check.expect(rk == k && k == code.rows(),
                          "rank mismatch at d=" + std::to_string(d) + ": rank=" + std::to_string(rk) +
                              " formula=" + std::to_string(k));

        // (2) closed-form L = brute-force shadow size in a regular degree
        const long long dt = wprm::smallest_regular_degree_above(pl, d);
        const auto red = wprm::compute_reduction(pl, d);
        for (const auto& pt : red.all()) {
            const long long closed = wprm::L(pl, d, pt);
            const long long brute = wprm::shadow_size(pl, dt, pt, d);
            shadow_check.expect(closed == brute, "L mismatch at d=" + std::to_string(d) + " point=(" +
                                                     std::to_string(pt.a1) + "," + std::to_string(pt.a2) +
                                                     "): formula=" + std::to_string(closed) +
                                                     " shadow=" + std::to_string(brute));
        }

        // (3) closed-form min of L = brute-force min over red(d)
        if (!regular) {
            long long brute_min = -1;
            for (const auto& pt : red.all()) {
                const long long v = wprm::L(pl, d, pt);
                if (brute_min < 0 || v < brute_min) brute_min = v;
            }
            const wprm::l_value lv = wprm::min_L_over_reduction(pl, d);
            minL_check.expect(lv.value == brute_min && wprm::L(pl, d, lv.point) == lv.value,
                              "min L mismatch at d=" + std::to_string(d) + ": closed=" +
                                  std::to_string(lv.value) + " brute=" + std::to_string(brute_min));
        }

        // (4) exhaustive minimum distance vs the formula, plus lower-bound
        // soundness against the footprint minimum
        const wprm::distance_result dm = wprm::min_distance(pl, d, cfg.cap);
        bool skip = false;
        if (cfg.skip_exhaustive_above && k > *cfg.skip_exhaustive_above) skip = true;
        if (!skip) {
            try {
                const wprm::distance_result ex = wprm::exhaustive_min_distance(code, pl, cfg.cap);
                if (dm.exact())
                    dist_check.expect(ex.value == dm.value,
                                      "dmin mismatch at d=" + std::to_string(d) + ": exhaustive=" +
                                          std::to_string(ex.value) + " formula=" + std::to_string(dm.value));
                else
                    dist_check.expect(ex.value >= dm.value,
                                      "dmin bound violated at d=" + std::to_string(d));
                if (!regular)
                    dist_check.expect(ex.value >= wprm::min_L_over_reduction(pl, d).value,
                                      "footprint bound violated at d=" + std::to_string(d));
            } catch (const wprm::error& e) {
                if (e.code() != wprm::errc::too_large) throw;
                skip = true;
            }
        }
        if (skip) ++exhaustive_skipped;

        // (5) normal-form evaluation invariance over the degree-d monomials
        const auto pts = wprm::enumerate_points(pl);
        for (const auto& lp : wprm::polygon_points(pl, d)) {
            const wprm::monomial m = wprm::monomial_of(lp, d, pl);
            const wprm::monomial nf = wprm::normal_form(m, pl);
            bool same = true;
            for (const auto& P : pts)
                same = same && wprm::evaluate_monomial(m, P, F) == wprm::evaluate_monomial(nf, P, F);
            rewrite_check.expect(same, "normal form changes evaluation at d=" + std::to_string(d) +
                                           " monomial " + m.to_string());
        }

        // (6) extremal witness weight equals the claimed minimum distance
        if (dm.exact() && dm.witness) {
            const long long w = wprm::codeword_weight(*dm.witness, pl);
            witness_check.expect(w == dm.value, "witness weight mismatch at d=" + std::to_string(d) +
                                                    ": weight=" + std::to_string(w) + " claimed=" +
                                                    std::to_string(dm.value));
        }
    }

    auto report = [](const char* name, const verify_state& st) {
        std::cout << name << ": " << (st.failed ? "FAIL" : "pass") << " (" << st.checked << " checks)";
        if (st.failed) std::cout << " -- " << st.first_failure;
        std::cout << "\n";
        return !st.failed;
    };
    bool ok = true;
    ok &= report("rank-vs-dimension", rank_check);
    ok &= report("footprint-L-vs-shadow", shadow_check);
    ok &= report("min-L-closed-vs-brute", minL_check);
    ok &= report("distance-formula-vs-exhaustive", dist_check);
    ok &= report("normal-form-invariance", rewrite_check);
    ok &= report("witness-weights", witness_check);
    if (exhaustive_skipped > 0)
        std::cout << "note: exhaustive search skipped for " << exhaustive_skipped
                  << " degree(s) (search space over cap or above --skip-exhaustive-above)\n";
    std::cout << "plane q=" << q << " a=" << pl.a() << " b=" << pl.b() << " n=" << n
              << " dmax=" << cfg.d << ": " << (ok ? "ALL PASS" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted projective Reed-Muller codes over P(1,a,b): parameters, "
                 "generator matrices, and verification"};
    app.require_subcommand(1);

    run_config cfg;
    if (const char* env = std::getenv("WPRM_CAP")) cfg.cap = std::atoll(env);

    std::string out_path;

    auto add_common = [&](CLI::App* sub, bool with_d) {
        sub->add_option("q", cfg.q, "field size (prime power <= 64)")->required();
        sub->add_option("a", cfg.a, "weight of x1")->required();
        sub->add_option("b", cfg.b, "weight of x2")->required();
        if (with_d) sub->add_option("d", cfg.d, "degree")->required()->check(CLI::Range(1LL, dmax_guard));
        sub->add_option("--format", cfg.format, "output format: text|csv|json");
        sub->add_option("--cap", cfg.cap, "exhaustive search cap on q^k (default 16777216)");
        sub->add_option("--seed", cfg.seed, "seed for randomized checks (reserved)");
    };

    auto* params = app.add_subcommand("params", "print n, k, dmin for one degree");
    add_common(params, true);
    auto* table = app.add_subcommand("table", "emit a d,n,k,dmin,status table for d = 1..dmax");
    add_common(table, true);
    table->add_option("--output", out_path, "write to file instead of stdout");
    auto* verify = app.add_subcommand("verify", "run all invariant checks for d = 1..dmax");
    add_common(verify, true);
    long long skip_above = -1;
    verify->add_option("--skip-exhaustive-above", skip_above,
                       "skip exhaustive distance search when the dimension k exceeds this");
    auto* matrix = app.add_subcommand("matrix", "write the generator matrix");
    add_common(matrix, true);
    matrix->add_option("--output", out_path, "write to file instead of stdout");
    auto* reduction = app.add_subcommand("reduction", "dump red(d) as JSON");
    add_common(reduction, true);
    auto* distance = app.add_subcommand("distance", "formula vs oracle distance detail");
    add_common(distance, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (skip_above >= 0) cfg.skip_exhaustive_above = skip_above;
    if (cfg.format != "text" && cfg.format != "csv" && cfg.format != "json") {
        std::cerr << "error: unknown format '" << cfg.format << "'\n";
        return 2;
    }
    if (table->parsed() && cfg.format == "text") cfg.format = "csv";

    try {
        if (params->parsed()) return cmd_params(cfg);
        if (table->parsed()) return cmd_table(cfg, out_path);
        if (verify->parsed()) return cmd_verify(cfg);
        if (matrix->parsed()) return cmd_matrix(cfg, out_path);
        if (reduction->parsed()) return cmd_reduction(cfg);
        if (distance->parsed()) return cmd_distance(cfg);
    } catch (const wprm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
