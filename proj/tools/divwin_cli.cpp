// Command-line front end: one subcommand per experiment family.
// Exit codes: 0 success, 1 failed check, 2 argument error.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divwin/arith.hpp"
#include "divwin/bounds.hpp"
#include "divwin/sieve.hpp"
#include "divwin/split.hpp"
#include "divwin/verify.hpp"
#include "divwin/window.hpp"
#include "divwin/witness.hpp"

using json = nlohmann::ordered_json;
using namespace divwin;

namespace {

std::string g_output_path;

void emit(const std::string& text) {
    if (g_output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g_output_path);
    if (!f) throw std::invalid_argument("cannot open output path " + g_output_path);
    f << text;
}

mpz_class parse_mpz(const std::string& s) {
    mpz_class z;
    if (z.set_str(s, 10) != 0 || z < 1)
        throw std::invalid_argument("expected a positive decimal integer, got " + s);
    return z;
}

// integers or fractions "p/q"
mpq_class parse_mpq(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("expected an integer or fraction p/q, got " + s);
    q.canonicalize();
    if (q <= 0) throw std::invalid_argument("expected a positive rational, got " + s);
    return q;
}

std::string dump_factors(const FactoredInteger& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.factors().size(); ++i) {
        if (i) os << " * ";
        os << f.factors()[i].prime;
        if (f.factors()[i].exponent > 1) os << "^" << f.factors()[i].exponent;
    }
    return f.factors().empty() ? "1" : os.str();
}

json json_factors(const FactoredInteger& f) {
    json a = json::array();
    for (const auto& pp : f.factors())
        a.push_back({{"prime", pp.prime.get_str()}, {"exponent", pp.exponent}});
    return a;
}

int cmd_count(const std::string& n_str, double theta, double eta,
              const std::string& X, const std::string& Y,
              const std::string& format) {
    FactoredInteger n = factorize(parse_mpz(n_str));
    std::uint64_t c;
    if (!X.empty()) {
        mpq_class Xq = parse_mpq(X), Yq(0);
        if (!Y.empty()) {
            Yq = mpq_class(Y);
            Yq.canonicalize();
            if (Yq < 0) throw std::invalid_argument("Y must be nonnegative");
        }
        c = count_window(n, AbsoluteWindow{Xq, Yq});
    } else {
        c = count_window(n, ExponentWindow{theta, eta});
    }
    if (format == "json") {
        json j{{"n", n.value().get_str()}, {"count", c}};
        emit(j.dump(2) + "\n");
    } else {
        emit("count=" + std::to_string(c) + "\n");
    }
    return 0;
}

int cmd_scan(std::uint64_t min_n, std::uint64_t max_n, double theta,
             double epsilon, unsigned jobs, const std::string& format,
             const std::string& theta_str, const std::string& eps_str) {
    ScanResult res = conjecture_scan(min_n, max_n, theta, epsilon, jobs);
    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : res.maxima)
            rows.push_back({{"n", r.n}, {"count", r.count}});
        json errs = json::array();
        for (const auto& [n, msg] : res.errors)
            errs.push_back({{"n", n}, {"error", msg}});
        json j{{"theta", theta},
               {"epsilon", epsilon},
               {"maxima", rows},
               {"errors", errs}};
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,count,theta,epsilon\n";
        for (const auto& r : res.maxima)
            os << r.n << "," << r.count << "," << theta_str << "," << eps_str
               << "\n";
    } else {
        for (const auto& r : res.maxima)
            os << "n=" << r.n << " count=" << r.count << "\n";
    }
    for (const auto& [n, msg] : res.errors)
        std::cerr << "scan: n=" << n << ": " << msg << "\n";
    emit(os.str());
    return 0;
}

int cmd_xi(double theta, double eta, const std::string& format, bool as_alpha) {
    PiecewiseExponent p =
        as_alpha ? alpha_closed_form(theta, eta) : xi(theta, eta);
    std::ostringstream os;
    if (format == "csv") {
        os << "theta,eta,xi,case\n"
           << theta << "," << eta << "," << p.value << "," << to_string(p.case_label)
           << "\n";
    } else if (format == "json") {
        json j{{"theta", theta},
               {"eta", eta},
               {"value", p.value},
               {"case", to_string(p.case_label)}};
        os << j.dump(2) << "\n";
    } else {
        os << "value=" << p.value << " case=" << to_string(p.case_label) << "\n";
    }
    emit(os.str());
    return 0;
}

int cmd_alpha(double theta, double eta, int grid, const std::string& format) {
    PiecewiseExponent closed = alpha_closed_form(theta, eta);
    double oracle = alpha_oracle(theta, eta, grid);
    double diff = std::abs(closed.value - oracle);
    std::ostringstream os;
    if (format == "json") {
        json j{{"theta", theta},
               {"eta", eta},
               {"closed_form", closed.value},
               {"case", to_string(closed.case_label)},
               {"oracle", oracle},
               {"abs_diff", diff}};
        os << j.dump(2) << "\n";
    } else {
        os << "closed_form=" << closed.value << " case="
           << to_string(closed.case_label) << " oracle=" << oracle
           << " abs_diff=" << diff << "\n";
    }
    emit(os.str());
    return diff <= 1e-4 ? 0 : 1;
}

int cmd_alpha_delta(double theta, double eta, double delta,
                    const std::string& format) {
    DeltaExponent de = alpha_delta(theta, eta, delta);
    double x = xi(theta, eta).value;
    bool sandwich = de.value >= x - delta - 1e-12 && de.value <= x + 1e-12;
    std::ostringstream os;
    if (format == "csv") {
        os << "theta,eta,delta,alpha_delta,candidate\n"
           << theta << "," << eta << "," << delta << "," << de.value << ","
           << to_string(de.candidate) << "\n";
    } else if (format == "json") {
        json j{{"theta", theta},     {"eta", eta},
               {"delta", delta},     {"value", de.value},
               {"candidate", to_string(de.candidate)},
               {"epsilon_var", de.epsilon_var},
               {"xi", x},            {"sandwich_ok", sandwich}};
        os << j.dump(2) << "\n";
    } else {
        os << "value=" << de.value << " candidate=" << to_string(de.candidate)
           << " xi=" << x << " sandwich=" << (sandwich ? "ok" : "VIOLATED")
           << "\n";
    }
    emit(os.str());
    return sandwich ? 0 : 1;
}

int cmd_prop1(double theta, double epsilon) {
    std::ostringstream os;
    os << "bound=" << prop1_bound(theta, epsilon)
       << " (proof-derived cap max(4/(theta(1-theta)), 3 theta(1-theta)/eps) + 1)\n";
    emit(os.str());
    return 0;
}

const char* regime_name(SplitRegime r) {
    switch (r) {
        case SplitRegime::Split: return "split";
        case SplitRegime::TrivialDelta: return "trivial-delta";
        default: return "prop1-regime";
    }
}

int cmd_split(const std::string& n_str, double theta, double eta) {
    FactoredInteger n = factorize(parse_mpz(n_str));
    SplitResult sp = theorem1_split(n, theta, eta);
    json j{{"n", n.value().get_str()},
           {"theta", theta},
           {"eta", eta},
           {"regime", regime_name(sp.regime)},
           {"delta", sp.delta}};
    bool ok = true;
    if (sp.regime == SplitRegime::Split) {
        j["alpha_used"] = sp.alpha_used;
        j["candidate"] = to_string(sp.candidate);
        j["s"] = sp.s;
        j["permutation"] = sp.permutation;
        j["a"] = {{"value", sp.a.value().get_str()},
                  {"factors", json_factors(sp.a)}};
        j["b"] = {{"value", sp.b.value().get_str()},
                  {"factors", json_factors(sp.b)}};
        j["tau_b"] = profile(sp.b).tau.get_str();
        bool tb = tau_b_check(sp, n);
        bool did = divisor_identity_check(n, sp, theta, eta);
        j["tau_b_check"] = tb;
        j["divisor_identity"] = did;
        ok = tb && did;
    }
    emit(j.dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_lemma1(const std::vector<std::string>& ds, long t) {
    std::vector<mpz_class> d;
    for (const auto& s : ds) d.push_back(parse_mpz(s));
    bool ok = lemma1_check(d, t);
    emit(std::string(ok ? "true" : "false") + "\n");
    return ok ? 0 : 1;
}

int cmd_lemma2(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("--x and --y must have the same length");
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t i = 0; i < x.size(); ++i) pairs.emplace_back(x[i], y[i]);
    std::vector<std::size_t> perm = lemma2_order(pairs);
    std::ostringstream os;
    os << "order=";
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i];
    os << "\n";
    emit(os.str());
    return 0;
}

int cmd_lemma4(unsigned long p, unsigned v, long u) {
    mpz_class rec = count_unsolvable(p, v, u);
    std::uint64_t bf = count_unsolvable_bruteforce(p, v, u);
    bool ok = rec == bf;
    std::ostringstream os;
    os << "recurrence " << rec << ", brute force " << bf << ", "
       << (ok ? "MATCH" : "MISMATCH") << "\n";
    emit(os.str());
    return ok ? 0 : 1;
}

int cmd_sieve_bound(const std::string& n_str, const std::string& a_str,
                    const std::string& b_str, std::uint64_t i, std::uint64_t Q) {
    FactoredInteger n = factorize(parse_mpz(n_str));
    SieveWindowReport rep =
        sieve_window_check(n, parse_mpz(a_str), parse_mpz(b_str), i, Q);
    json mods = json::array();
    for (const auto& m : rep.moduli)
        mods.push_back({{"p", m.p},
                        {"v", m.v},
                        {"modulus", m.modulus},
                        {"excluded", m.excluded.get_str()}});
    json j{{"n", n.value().get_str()},
           {"count", rep.count},
           {"cap_elementary", rep.cap_elementary},
           {"cap_sieve", rep.sieve_vacuous ? "inf" : rep.cap_sieve.get_str()},
           {"sieve_vacuous", rep.sieve_vacuous},
           {"Q", rep.Q},
           {"H", rep.H.get_str()},
           {"moduli", mods},
           {"classes_avoided", rep.classes_avoided}};
    emit(j.dump(2) + "\n");
    bool ok = rep.count <= rep.cap_elementary && rep.classes_avoided &&
              (rep.sieve_vacuous || mpq_class(rep.count) <= rep.cap_sieve);
    return ok ? 0 : 1;
}

json witness_json(const WitnessReport& rep) {
    json primes = json::array();
    for (const auto& p : rep.primes) primes.push_back(p.get_str());
    StirlingDiagnostic sd = stirling_diagnostic(rep.s, rep.r, rep.theta, rep.epsilon);
    json j{{"theta", rep.theta},
           {"epsilon", rep.epsilon},
           {"M", rep.M.get_str()},
           {"L", rep.L},
           {"s", rep.s},
           {"r", rep.r},
           {"frac_edge", rep.frac_edge},
           {"r_theta_ineq_ok", rep.r_theta_ineq_ok},
           {"mirrored", rep.mirrored},
           {"primes", primes},
           {"N0", rep.N0.value().get_str()},
           {"m", rep.m.get_str()},
           {"N", rep.N.value().get_str()},
           {"packed_count", rep.packed_count},
           {"binom_target", rep.binom_target.get_str()},
           {"stirling_closed_form", sd.closed_form},
           {"success", rep.success}};
    if (rep.mirrored) j["complement_count"] = rep.complement_count;
    return j;
}

int cmd_witness(double theta, double epsilon, const std::string& M_str,
                const std::string& prop4_m) {
    if (!prop4_m.empty()) {
        Prop4Witness w = prop4_witness(theta, epsilon, parse_mpz(prop4_m));
        json j{{"theta", theta},
               {"epsilon", epsilon},
               {"m", w.divisor.get_str()},
               {"v", w.v.get_str()},
               {"n0", w.n0.get_str()}};
        emit(j.dump(2) + "\n");
        return 0;
    }
    if (M_str.empty())
        throw std::invalid_argument("witness: --M is required unless --prop4-m is given");
    mpz_class M = parse_mpz(M_str);
    WitnessReport rep = theta <= 0.5 ? build_witness(theta, epsilon, M)
                                     : build_witness_large_theta(theta, epsilon, M);
    emit(witness_json(rep).dump(2) + "\n");
    return rep.success ? 0 : 1;
}

int cmd_verify_all(unsigned jobs, std::vector<int> criteria, long budget_s) {
    if (criteria.empty())
        for (int i = 1; i <= 9; ++i) criteria.push_back(i);
    auto start = std::chrono::steady_clock::now();
    std::vector<CriterionResult> results;
    bool budget_exceeded = false;
    for (int id : criteria) {
        auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (elapsed > budget_s) {
            budget_exceeded = true;
            break;
        }
        results.push_back(run_criterion(id, jobs));
    }
    std::string report = format_report(results);
    if (budget_exceeded)
        report += "time budget exceeded; remaining criteria skipped\n";
    emit(report);
    bool ok = !budget_exceeded;
    for (const auto& r : results) ok = ok && r.passed;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divwin: divisors of integers in short intervals — "
                 "exact window counts, explicit exponents, sieve bounds, and "
                 "constructive witnesses"};
    app.require_subcommand(1);

    long prec_bits = 0;
    app.add_option("--prec-bits", prec_bits,
                   "default working precision in bits (env DIVWIN_PREC_BITS)");
    app.add_option("--output", g_output_path, "write output to this file");

    // count
    auto* count = app.add_subcommand(
        "count", "exact D_n(X, Y) = #{d | n : X <= d <= X+Y}");
    std::string c_n, c_X, c_Y, c_format = "text";
    double c_theta = 0, c_eta = 0;
    count->add_option("--n", c_n, "the integer n")->required();
    count->add_option("--theta", c_theta, "X = n^theta");
    count->add_option("--eta", c_eta, "Y = n^eta");
    count->add_option("--X", c_X, "absolute X (integer or fraction p/q)");
    count->add_option("--Y", c_Y, "absolute Y (integer or fraction p/q, may be 0)");
    count->add_option("--format", c_format, "text | json");

    // scan
    auto* scan = app.add_subcommand(
        "scan", "running maxima of D_n(n^theta, n^{theta-eps}) over a range; "
                "CSV columns: n,count,theta,epsilon");
    std::uint64_t s_min = 1, s_max = 0;
    std::string s_theta = "0.5", s_eps = "0.1", s_format = "csv";
    unsigned s_jobs = 1;
    scan->add_option("--min-n", s_min, "range start (default 1)");
    scan->add_option("--max-n", s_max, "range end")->required();
    scan->add_option("--theta", s_theta, "theta")->required();
    scan->add_option("--epsilon", s_eps, "epsilon")->required();
    scan->add_option("--jobs", s_jobs, "worker threads (output is identical)");
    scan->add_option("--format", s_format, "csv | json | text");

    // xi / alpha / alpha-delta / prop1
    auto* xi_cmd = app.add_subcommand("xi", "the piecewise exponent xi(theta,eta); "
                                            "CSV columns: theta,eta,xi,case");
    double x_theta = 0, x_eta = 0;
    std::string x_format = "text";
    xi_cmd->add_option("--theta", x_theta)->required();
    xi_cmd->add_option("--eta", x_eta)->required();
    xi_cmd->add_option("--format", x_format, "text | csv | json");

    auto* alpha_cmd = app.add_subcommand(
        "alpha", "alpha(theta,eta): closed form vs grid/bisection oracle");
    double a_theta = 0, a_eta = 0;
    int a_grid = 1000;
    std::string a_format = "text";
    alpha_cmd->add_option("--theta", a_theta)->required();
    alpha_cmd->add_option("--eta", a_eta)->required();
    alpha_cmd->add_option("--grid", a_grid, "t-grid size (>= 1000)");
    alpha_cmd->add_option("--format", a_format, "text | json");

    auto* ad_cmd = app.add_subcommand(
        "alpha-delta", "alpha(theta,eta,delta) with its candidate; CSV columns: "
                       "theta,eta,delta,alpha_delta,candidate");
    double d_theta = 0, d_eta = 0, d_delta = 0;
    std::string d_format = "text";
    ad_cmd->add_option("--theta", d_theta)->required();
    ad_cmd->add_option("--eta", d_eta)->required();
    ad_cmd->add_option("--delta", d_delta)->required();
    ad_cmd->add_option("--format", d_format, "text | csv | json");

    auto* p1_cmd = app.add_subcommand(
        "prop1", "explicit cap on D_n(n^theta, n^{theta^2-eps}), all n");
    double p_theta = 0, p_eps = 0;
    p1_cmd->add_option("--theta", p_theta)->required();
    p1_cmd->add_option("--epsilon", p_eps)->required();

    // split
    auto* split_cmd = app.add_subcommand(
        "split", "constructive coprime split n = a*b with its checks (JSON)");
    std::string sp_n;
    double sp_theta = 0, sp_eta = 0;
    split_cmd->add_option("--n", sp_n)->required();
    split_cmd->add_option("--theta", sp_theta)->required();
    split_cmd->add_option("--eta", sp_eta)->required();

    // lemma1 / lemma2 / lemma4
    auto* l1_cmd = app.add_subcommand(
        "lemma1", "lcm^{t(t+1)/2} * prod gcd >= prod d_i^t, exact");
    std::vector<std::string> l1_d;
    long l1_t = 1;
    l1_cmd->add_option("--d", l1_d, "the integers d_i")->required()->expected(-1);
    l1_cmd->add_option("--t", l1_t, "integer exponent t")->required();

    auto* l2_cmd = app.add_subcommand(
        "lemma2", "prefix-dominating permutation of (x_i, y_i) pairs");
    std::vector<double> l2_x, l2_y;
    l2_cmd->add_option("--x", l2_x)->required()->expected(-1);
    l2_cmd->add_option("--y", l2_y)->required()->expected(-1);

    auto* l4_cmd = app.add_subcommand(
        "lemma4", "S_v recurrence vs brute-force count of unsolvable classes");
    unsigned long l4_p = 3;
    unsigned l4_v = 0;
    long l4_u = 1;
    l4_cmd->add_option("--p", l4_p, "odd prime")->required();
    l4_cmd->add_option("--v", l4_v, "exponent v")->required();
    l4_cmd->add_option("--u", l4_u, "unit u coprime to p")->required();

    // sieve-bound
    auto* sv_cmd = app.add_subcommand(
        "sieve-bound", "divisor count near x0 = sqrt(an/b) vs the large-sieve "
                       "bound (JSON)");
    std::string sv_n, sv_a = "1", sv_b = "1";
    std::uint64_t sv_i = 1, sv_Q = 10;
    sv_cmd->add_option("--n", sv_n)->required();
    sv_cmd->add_option("--a", sv_a);
    sv_cmd->add_option("--b", sv_b);
    sv_cmd->add_option("--i", sv_i);
    sv_cmd->add_option("--Q", sv_Q);

    // witness
    auto* w_cmd = app.add_subcommand(
        "witness", "packing construction (or single-divisor witness with "
                   "--prop4-m) as JSON");
    double w_theta = 0, w_eps = 0;
    std::string w_M, w_m;
    w_cmd->add_option("--theta", w_theta)->required();
    w_cmd->add_option("--epsilon", w_eps)->required();
    w_cmd->add_option("--M", w_M, "prime-window anchor M");
    w_cmd->add_option("--prop4-m", w_m, "build the single-divisor witness for m");

    // verify-all
    auto* v_cmd = app.add_subcommand(
        "verify-all", "run the full verification suite (one line per criterion)");
    unsigned v_jobs = 1;
    std::vector<int> v_criteria;
    long v_budget = 600;
    v_cmd->add_option("--jobs", v_jobs, "worker threads");
    v_cmd->add_option("--criteria", v_criteria, "subset of 1..9 (default all)")
        ->expected(-1);
    v_cmd->add_option("--budget-seconds", v_budget, "time budget (default 600)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (prec_bits > 0)
        setenv("DIVWIN_PREC_BITS", std::to_string(prec_bits).c_str(), 1);

    try {
        if (*count) return cmd_count(c_n, c_theta, c_eta, c_X, c_Y, c_format);
        if (*scan)
            return cmd_scan(s_min, s_max, std::stod(s_theta), std::stod(s_eps),
                            s_jobs, s_format, s_theta, s_eps);
        if (*xi_cmd) return cmd_xi(x_theta, x_eta, x_format, false);
        if (*alpha_cmd) return cmd_alpha(a_theta, a_eta, a_grid, a_format);
        if (*ad_cmd) return cmd_alpha_delta(d_theta, d_eta, d_delta, d_format);
        if (*p1_cmd) return cmd_prop1(p_theta, p_eps);
        if (*split_cmd) return cmd_split(sp_n, sp_theta, sp_eta);
        if (*l1_cmd) return cmd_lemma1(l1_d, l1_t);
        if (*l2_cmd) return cmd_lemma2(l2_x, l2_y);
        if (*l4_cmd) return cmd_lemma4(l4_p, l4_v, l4_u);
        if (*sv_cmd) return cmd_sieve_bound(sv_n, sv_a, sv_b, sv_i, sv_Q);
        if (*w_cmd) return cmd_witness(w_theta, w_eps, w_M, w_m);
        if (*v_cmd) return cmd_verify_all(v_jobs, v_criteria, v_budget);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
