// Command line front end: series/table printers for the recursion families,
// the two staircase bijections, popularity series, oracle checks and the
// exact-count observations. All output is deterministic byte-for-byte:
// polynomials render in canonical term order and thread fan-out only changes
// the evaluation schedule, never the result.

#include <patternlab/patternlab.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace patternlab;

struct cli_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int family_cap(const std::string& id) {
    if (id == "fh") return 14;
    if (id == "s3") return 9;
    if (id == "s4") return 7;
    if (id.size() == 4 && id[0] == 'p') return 12;
    if (id.rfind("incr", 0) == 0) return 10;
    if (id.rfind("desc", 0) == 0) return 10;
    if (id == "dtable") return 10;
    throw cli_error("unknown family '" + id + "'");
}

int tower_m(const std::string& id) {
    try {
        size_t used = 0;
        int m = std::stoi(id.substr(4), &used);
        if (used != id.size() - 4 || m < 2 || m > 9)
            throw cli_error("tower family '" + id + "' needs a height between 2 and 9");
        return m;
    } catch (const std::invalid_argument&) {
        throw cli_error("tower family '" + id + "' needs a height between 2 and 9");
    }
}

/// Enforce the per-family soft cap (overridable with --force, with a term
/// count warning) and the PATTERNLAB_NMAX_HARD environment cap (absolute).
void enforce_caps(const std::string& what, int n, int cap, bool force) {
    if (const char* hard_text = std::getenv("PATTERNLAB_NMAX_HARD")) {
        int hard = 0;
        try {
            size_t used = 0;
            hard = std::stoi(hard_text, &used);
            if (used != std::string(hard_text).size()) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            throw cli_error(std::string("PATTERNLAB_NMAX_HARD is not an integer: '") + hard_text + "'");
        }
        if (n > hard)
            throw cli_error(what + " " + std::to_string(n) + " exceeds PATTERNLAB_NMAX_HARD=" + std::to_string(hard));
    }
    if (n > cap) {
        std::string scale = what + " " + std::to_string(n) + " exceeds the default cap " + std::to_string(cap) +
                            "; the size-" + std::to_string(n) + " entry has up to " + catalan_number(n).str() + " terms";
        if (!force) throw cli_error(scale + " (pass --force to proceed)");
        std::cerr << "warning: " << scale << "\n";
    }
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw cli_error("cannot open output file '" + out_path + "'");
    f << payload;
}

/// Families whose series is a plain table; s4 and dtable get wrapped so the
/// same renderers apply. For dtable, printed selects the disputed recursion
/// and is reflected in the table id.
family_table build_series_table(const std::string& id, int nmax, int threads, bool printed = false) {
    if (printed && id != "dtable") throw cli_error("--printed only applies to family dtable here");
    if (id == "fh") return fh_table(nmax, threads);
    if (id == "s3") return s3_table(nmax, threads);
    if (id.size() == 4 && id[0] == 'p') return p_table(nmax, permutation::parse(id.substr(1)), threads);
    if (id.rfind("incr", 0) == 0) return incr_tower_table(nmax, tower_m(id), threads);
    if (id.rfind("desc", 0) == 0) return desc_tower_table(nmax, tower_m(id), threads);
    if (id == "s4") {
        s4_family f = s4_table(nmax);
        family_table t;
        t.id = "s4";
        t.vars = s4_family::assembled_vars();
        for (int n = 0; n <= nmax; ++n) t.entries.push_back(f.assembled(n));
        return t;
    }
    if (id == "dtable") {
        d_family f = printed ? d_table_printed(nmax) : d_table(nmax);
        family_table t;
        t.id = printed ? "dtable_printed" : "dtable";
        t.vars = {"s", "q", "x", "y"};
        for (int n = 0; n <= nmax; ++n) t.entries.push_back(f.sum_with_lrmin(n));
        return t;
    }
    throw cli_error("unknown family '" + id + "'");
}

int run_series(const std::string& id, int nmax, const std::string& format, const std::string& out,
               int threads, bool force, bool printed) {
    enforce_caps("--nmax", nmax, family_cap(id), force);
    family_table t = build_series_table(id, nmax, threads, printed);
    if (format == "text") {
        emit(render_series_text(t), out);
    } else if (format == "json") {
        emit(family_to_json(t).dump(2) + "\n", out);
    } else {
        throw cli_error("series supports --format text|json, got '" + format + "'");
    }
    return 0;
}

int run_table(const std::string& id, int n, std::optional<int> i, std::optional<int> k,
              const std::string& format, const std::string& out, int threads, bool force, bool printed) {
    enforce_caps("--n", n, family_cap(id), force);
    if (i && id != "s4") throw cli_error("--i only applies to family s4");
    if (k && id != "dtable") throw cli_error("--k only applies to family dtable");
    if (printed && id != "dtable") throw cli_error("--printed only applies to family dtable here");
    std::vector<std::string> vars;
    multipoly poly;
    if (id == "s4" && i) {
        s4_family f = s4_table(n);
        if (*i < 0 || *i > binom2(n))
            throw cli_error("--i must lie in [0, " + std::to_string(binom2(n)) + "] for n=" + std::to_string(n));
        vars = f.vars;
        poly = f.entry(n, *i);
    } else if (id == "dtable" && k) {
        d_family f = printed ? d_table_printed(n) : d_table(n);
        if (*k < 0 || *k > n) throw cli_error("--k must lie in [0, " + std::to_string(n) + "]");
        vars = f.vars;
        poly = f.entry(n, *k);
    } else {
        family_table t = build_series_table(id, n, threads, printed);
        vars = t.vars;
        poly = t.entry(n);
    }
    if (format == "text") {
        emit(to_text(poly, vars) + "\n", out);
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["family"] = id;
        j["n"] = n;
        if (i) j["i"] = *i;
        if (k) j["k"] = *k;
        if (printed) j["printed"] = true;
        j["vars"] = vars;
        j["poly"] = to_json(poly);
        emit(j.dump(2) + "\n", out);
    } else {
        throw cli_error("table supports --format text|json, got '" + format + "'");
    }
    return 0;
}

int run_bijection(const std::string& phi_arg, const std::string& phi_inv_arg, const std::string& psi_arg,
                  const std::string& psi_inv_arg, const std::string& format, const std::string& out) {
    const int given = !phi_arg.empty() + !phi_inv_arg.empty() + !psi_arg.empty() + !psi_inv_arg.empty();
    if (given != 1) throw cli_error("bijection needs exactly one of --phi, --phi-inv, --psi, --psi-inv");
    std::string direction, input;
    permutation sigma;
    dyck_path path;
    if (!phi_arg.empty()) {
        direction = "phi";
        input = phi_arg;
        sigma = permutation::parse(phi_arg);
        path = phi(sigma);
    } else if (!psi_arg.empty()) {
        direction = "psi";
        input = psi_arg;
        sigma = permutation::parse(psi_arg);
        path = psi(sigma);
    } else if (!phi_inv_arg.empty()) {
        direction = "phi_inv";
        input = phi_inv_arg;
        path = dyck_path::parse(phi_inv_arg);
        sigma = phi_inv(path);
    } else {
        direction = "psi_inv";
        input = psi_inv_arg;
        path = dyck_path::parse(psi_inv_arg);
        sigma = psi_inv(path);
    }
    dyck_stats st = path_stats(path);
    if (format == "text") {
        const bool forward = direction == "phi" || direction == "psi";
        std::string line = forward ? path.str() + " ret=" + std::to_string(st.ret) + " area=" + std::to_string(st.area) +
                                         " coarea=" + std::to_string(st.coarea)
                                   : sigma.str();
        emit(line + "\n", out);
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["direction"] = direction;
        j["input"] = input;
        j["perm"] = sigma.str();
        j["path"] = path.str();
        j["ret"] = st.ret;
        j["area"] = st.area;
        j["coarea"] = st.coarea;
        auto& peaks = j["diag_peaks"] = nlohmann::ordered_json::object();
        for (const auto& [d, c] : st.diag_peaks) peaks[std::to_string(d)] = c;
        emit(j.dump(2) + "\n", out);
    } else {
        throw cli_error("bijection supports --format text|json, got '" + format + "'");
    }
    return 0;
}

int run_popularity(const std::string& pattern_text, const std::string& cls, int nmax, bool printed,
                   const std::string& format, const std::string& out, bool force) {
    enforce_caps("--nmax", nmax, 10, force);
    if (cls != "132" && cls != "123") throw cli_error("--class must be 132 or 123, got '" + cls + "'");
    permutation pattern = permutation::parse(pattern_text);
    const int m = pattern.size();
    popularity_series p;
    std::string method;
    const bool incr = pattern == permutation::identity(m);
    const bool hook = cls == "123" && m >= 3 && [&] {
        std::vector<int> v{1};
        for (int x = m; x >= 2; --x) v.push_back(x);
        return pattern == permutation::from_one_line(v);
    }();
    if (printed && !(cls == "123" && (pattern_text == "12" || hook)))
        throw cli_error("--printed only applies to class 123 with pattern 12 or a hook 1 m (m-1) ... 2");
    if (cls == "132" && incr && m >= 2) {
        p = f_incr(nmax, m);
        method = "closed form";
    } else if (cls == "123" && pattern_text == "12") {
        p = printed ? g12_printed(nmax) : g12_oracle(nmax);
        method = printed ? "printed closed form" : "enumeration";
    } else if (hook) {
        p = printed ? g_desc(nmax, m, g12_printed(nmax).f) : g_desc(nmax, m);
        method = printed ? "chain from printed seed" : "chain from enumerated seed";
    } else {
        p.pattern = pattern.str();
        p.avoid_class = cls;
        p.f = oracle_popularity(nmax, pattern, {permutation::parse(cls)});
        method = "enumeration";
    }
    if (format == "text") {
        std::string text = "pattern " + p.pattern + " over class " + p.avoid_class + " (" + method +
                           (p.disputed ? ", disputed" : "") + ")\n";
        for (int n = 0; n <= p.f.order(); ++n) text += "t^" + std::to_string(n) + ": " + p.f[n].str() + "\n";
        emit(text, out);
    } else if (format == "csv") {
        emit(to_csv(p), out);
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["pattern"] = p.pattern;
        j["class"] = p.avoid_class;
        j["method"] = method;
        j["disputed"] = p.disputed;
        auto& c = j["coeffs"] = nlohmann::ordered_json::array();
        for (int n = 0; n <= p.f.order(); ++n) c.push_back(p.f[n].str());
        emit(j.dump(2) + "\n", out);
    } else {
        throw cli_error("popularity supports --format text|csv|json, got '" + format + "'");
    }
    return 0;
}

int emit_check_report(const check_report& rep, const std::string& format, const std::string& out) {
    if (format == "text") {
        std::string text;
        for (const auto& line : rep.lines) text += line + "\n";
        text += rep.verdict().dump() + "\n";
        emit(text, out);
    } else if (format == "json") {
        nlohmann::ordered_json j = rep.verdict();
        j["lines"] = rep.lines;
        emit(j.dump(2) + "\n", out);
    } else {
        throw cli_error("check supports --format text|json, got '" + format + "'");
    }
    return rep.equal ? 0 : 1;
}

int run_check(const std::string& family, bool coeff_equality, bool refinement, int nmax, int jmax,
              const std::string& format, const std::string& out, int threads, bool force) {
    const int given = !family.empty() + coeff_equality + refinement;
    if (given != 1) throw cli_error("check needs exactly one of --family, --coeff-equality, --refinement");
    if (!family.empty()) {
        enforce_caps("--nmax", nmax, family_cap(family), force);
        return emit_check_report(check_family(family, nmax, threads), format, out);
    }
    if (coeff_equality) {
        enforce_caps("--nmax", nmax, 10, force);
        if (jmax < 2 || jmax > 6) throw cli_error("--jmax must lie in [2, 6]");
        coeff_equality_report r = coeff_equality_check(nmax, jmax);
        check_report rep;
        rep.family = "coeff_equality";
        rep.n_max = nmax;
        rep.equal = r.ok();
        rep.lines.push_back(std::to_string(r.comparisons) + " comparisons for hook lengths 2.." + std::to_string(jmax));
        for (const auto& mm : r.mismatches) {
            std::string msg = "j=" + std::to_string(mm.j) + " n=" + std::to_string(mm.n) + " i=" + std::to_string(mm.i) +
                              ": increasing-side " + mm.incr_count.str() + ", hook-side " + mm.desc_count.str();
            rep.lines.push_back(msg);
            if (rep.first_mismatch.empty()) rep.first_mismatch = msg;
        }
        if (r.ok()) rep.lines.push_back("no mismatches");
        return emit_check_report(rep, format, out);
    }
    enforce_caps("--nmax", nmax, 7, force);
    return emit_check_report(refinement_chain_check(nmax, threads), format, out);
}

int run_observe(int nmax, int fib_nmax, const std::string& format, const std::string& out, bool force) {
    enforce_caps("--nmax", nmax, 10, force);
    enforce_caps("--fib-nmax", fib_nmax, 9, force);
    observation_report rep = observation_suite(nmax, fib_nmax);
    if (format == "text") {
        std::string text;
        for (const auto& line : rep.lines) text += line + "\n";
        text += rep.ok ? "all observations hold\n" : "observation FAILURES above\n";
        emit(text, out);
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["ok"] = rep.ok;
        j["lines"] = rep.lines;
        emit(j.dump(2) + "\n", out);
    } else {
        throw cli_error("observe supports --format text|json, got '" + format + "'");
    }
    return rep.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pattern-statistic generating functions over 132- and 123-avoiding permutations"};
    app.require_subcommand(1);

    std::string format = "text", out, family, pattern, cls;
    std::string phi_arg, phi_inv_arg, psi_arg, psi_inv_arg;
    int nmax = 9, n = 0, jmax = 4, threads = 1, fib_nmax = 8; // nmax default only reachable via observe
    std::optional<int> grid_i, grid_k;
    bool force = false, coeff_equality = false, refinement = false, printed = false;

    auto add_common = [&](CLI::App* cmd, bool with_threads) {
        cmd->add_option("--format", format, "output format");
        cmd->add_option("--out", out, "write output to this file instead of stdout");
        if (with_threads) cmd->add_option("--threads", threads, "worker threads for the split sums")->check(CLI::Range(1, 64));
        cmd->add_flag("--force", force, "override the per-family size cap");
    };

    CLI::App* c_series = app.add_subcommand("series", "print a family's entries for all sizes up to --nmax");
    c_series->add_option("--family", family, "fh|s3|s4|p123|p213|p231|p312|p321|incr<m>|desc<m>|dtable")->required();
    c_series->add_option("--nmax", nmax, "largest size")->required();
    c_series->add_flag("--printed", printed, "dtable only: the printed recursion (disputed, drifts from n = 5 on)");
    add_common(c_series, true);

    CLI::App* c_table = app.add_subcommand("table", "print one family entry");
    c_table->add_option("--family", family, "family id as for series")->required();
    c_table->add_option("--n", n, "entry size")->required();
    c_table->add_option("--i", grid_i, "12-count slice (family s4 only)");
    c_table->add_option("--k", grid_k, "minimum-count slice (family dtable only)");
    c_table->add_flag("--printed", printed, "dtable only: the printed recursion (disputed, drifts from n = 5 on)");
    add_common(c_table, true);

    CLI::App* c_bij = app.add_subcommand("bijection", "staircase bijections between avoiders and lattice paths");
    c_bij->add_option("--phi", phi_arg, "132-avoider to map to a path");
    c_bij->add_option("--phi-inv", phi_inv_arg, "path to map to a 132-avoider");
    c_bij->add_option("--psi", psi_arg, "123-avoider to map to a path");
    c_bij->add_option("--psi-inv", psi_inv_arg, "path to map to a 123-avoider");
    add_common(c_bij, false);

    CLI::App* c_pop = app.add_subcommand("popularity", "total occurrence counts over an avoidance class");
    c_pop->add_option("--pattern", pattern, "counted pattern, e.g. 12, 123, 132, 1432")->required();
    c_pop->add_option("--class", cls, "avoided pattern: 132 or 123")->required();
    c_pop->add_option("--nmax", nmax, "largest size")->required();
    c_pop->add_flag("--printed", printed, "use the printed 12-over-123 closed form (disputed) as seed");
    add_common(c_pop, false);

    CLI::App* c_check = app.add_subcommand("check", "compare recursions against direct enumeration");
    c_check->add_option("--family", family, "family id as for series");
    c_check->add_flag("--coeff-equality", coeff_equality, "low-coefficient agreement of the two tower families");
    c_check->add_flag("--refinement", refinement, "finer tables specialize onto coarser ones");
    c_check->add_option("--nmax", nmax, "largest size")->required();
    c_check->add_option("--jmax", jmax, "largest hook length for --coeff-equality");
    add_common(c_check, true);

    CLI::App* c_obs = app.add_subcommand("observe", "exact-count observations on single-occurrence avoiders");
    c_obs->add_option("--nmax", nmax, "largest size for the linear counts");
    c_obs->add_option("--fib-nmax", fib_nmax, "largest size for the Fibonacci counts");
    add_common(c_obs, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_series) return run_series(family, nmax, format, out, threads, force, printed);
        if (*c_table) return run_table(family, n, grid_i, grid_k, format, out, threads, force, printed);
        if (*c_bij) return run_bijection(phi_arg, phi_inv_arg, psi_arg, psi_inv_arg, format, out);
        if (*c_pop) return run_popularity(pattern, cls, nmax, printed, format, out, force);
        if (*c_check) return run_check(family, coeff_equality, refinement, nmax, jmax, format, out, threads, force);
        if (*c_obs) return run_observe(nmax, fib_nmax, format, out, force);
        throw cli_error("no subcommand given");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
