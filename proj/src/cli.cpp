#include "levigon/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "levigon/cycles.hpp"
#include "levigon/gf.hpp"
#include "levigon/levi.hpp"
#include "levigon/plane.hpp"
#include "levigon/poly.hpp"
#include "levigon/quasigon.hpp"

namespace levigon {

namespace {

using nlohmann::json;

struct CommonOpts {
    int p = 0;
    int e = 1;
    std::string plane_file;
    int k = 0;
    int kmax = 0;
    int n = 0;
    int threads = 0;
    long long budget = 1000000000;
    std::string out_path;
    std::string counts_path;
    bool cross_check = false;
    bool timings = false;
};

Plane resolve_plane(const CommonOpts& o) {
    const bool by_field = o.p != 0;
    const bool by_file = !o.plane_file.empty();
    if (by_field == by_file)
        throw CLI::ValidationError("plane source", "give exactly one of --p/--e or --plane");
    if (by_file) return load_plane(o.plane_file);
    return build_pg2(Field::make(o.p, o.e));
}

Plane resolve_plane_by_order(const CommonOpts& o) {
    if (!o.plane_file.empty()) return load_plane(o.plane_file);
    if (o.n != 0) {
        int p = 0, e = 0;
        if (!prime_power(static_cast<uint32_t>(o.n), p, e))
            throw std::invalid_argument("order " + std::to_string(o.n) +
                                        " is not a prime power; supply --plane instead");
        return build_pg2(Field::make(p, e));
    }
    return resolve_plane(o);
}

void emit(const std::string& payload, const CommonOpts& o, std::ostream& out) {
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write output file: " + o.out_path);
        f << payload << '\n';
    } else {
        out << payload << '\n';
    }
}

int run_walks(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    const Plane pl = resolve_plane_by_order(o);
    const LeviGraph lg = build_levi(pl);
    const int klo = o.kmax > 0 ? 1 : (o.k > 0 ? o.k : 1);
    const int khi = o.kmax > 0 ? o.kmax : (o.k > 0 ? o.k : 1);
    json checks = json::array();
    bool ok = true;
    for (int k = klo; k <= khi; ++k) {
        const BigInt f = closed_walks_formula(pl.n, k);
        const BigInt d = closed_walks_direct(lg.g, k);
        const bool match = f == d;
        ok = ok && match;
        checks.push_back({{"k", k}, {"formula", f.str()}, {"direct", d.str()}, {"match", match}});
        err << "walks 2k=" << 2 * k << ": formula=" << f.str() << " direct=" << d.str()
            << (match ? " ok" : " MISMATCH") << '\n';
    }
    json j;
    j["n"] = pl.n;
    j["checks"] = checks;
    j["ok"] = ok;
    emit(j.dump(), o, out);
    return ok ? 0 : 1;
}

int run_cycles(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    const Plane pl = resolve_plane(o);
    const BigInt budget(o.budget);
    bool ok = true;
    json j;
    if (o.kmax > 0) {
        CycleProfile prof = cycle_profile(pl, o.kmax, o.threads, budget);
        json arr = json::array();
        for (const auto& c : prof.counts) {
            json rec = json::parse(cycle_count_json(c, o.timings));
            err << "c_" << c.L << " = " << c.count.str() << "  (" << c.seconds << " s)\n";
            arr.push_back(std::move(rec));
        }
        j["n"] = pl.n;
        j["profile"] = arr;
        j["truncated"] = prof.truncated;
        if (prof.truncated) j["truncated_at_k"] = prof.truncated_at_k;
    } else {
        if (o.k < 3) throw CLI::ValidationError("--k", "cycles needs --k >= 3 or --kmax");
        const BigInt est = work_estimate(pl.n, o.k);
        if (est > budget) throw BudgetExceeded(est, budget);
        CycleCount c = count_gons(pl, o.k, o.threads);
        j = json::parse(cycle_count_json(c, o.timings));
        err << "c_" << c.L << "(order " << pl.n << ") = " << c.count.str() << "  (" << c.seconds << " s)\n";
        if (o.cross_check) {
            const LeviGraph lg = build_levi(pl);
            CycleCount g = count_cycles_graph(lg.g, 2 * o.k, o.threads);
            const bool match = g.count == c.count;
            ok = ok && match;
            j["cross_check"] = {{"algo", g.algo}, {"count", g.count.str()}, {"match", match}};
            err << "cross-check (" << g.algo << "): " << g.count.str() << (match ? " ok" : " MISMATCH") << '\n';
        }
    }
    emit(j.dump(), o, out);
    return ok ? 0 : 1;
}

int run_census(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    const Plane pl = resolve_plane(o);
    if (o.k < 3) throw CLI::ValidationError("--k", "census needs --k >= 3");
    Census c = census(pl, o.k, o.threads, BigInt(o.budget));
    err << "census order " << c.n << " k=" << c.k << ":";
    for (int jj = 1; jj <= c.k; ++jj) err << "  |Q_" << jj << "|=" << c.Q[jj].str();
    err << "  A=" << c.A.str() << "  B=" << c.B.str() << '\n';
    emit(census_json(c), o, out);
    return 0;
}

int run_bounds(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    const Plane pl = resolve_plane(o);
    if (o.k < 4) throw CLI::ValidationError("--k", "bounds needs --k >= 4");
    const BigInt budget(o.budget);
    Census c = census(pl, o.k, o.threads, budget);
    const BigInt c_prev = count_gons(pl, o.k - 1, o.threads).count;
    const BigInt c2k = c.Q[o.k] / (2 * o.k);
    BoundReport rep = check_bounds(c, c_prev);

    const bool applicable = pl.n >= o.k;
    {
        BoundItem t3;
        t3.name = "lower-bound-explicit-tail";
        t3.relation = "<";
        if (applicable) {
            const BigRat lo = theorem3_lower(pl.n, o.k);
            t3.lhs = rat_str(lo);
            t3.rhs = c2k.str();
            t3.status = lo < BigRat(c2k) ? BoundStatus::pass : BoundStatus::fail;
        } else {
            t3.lhs = "-";
            t3.rhs = c2k.str();
            t3.status = BoundStatus::not_applicable;
        }
        rep.items.push_back(std::move(t3));
        BoundItem t4;
        t4.name = "upper-bound-prev-cycles";
        t4.relation = "<=";
        if (applicable) {
            const BigRat hi = theorem4_upper(pl.n, o.k, c_prev);
            t4.lhs = c2k.str();
            t4.rhs = rat_str(hi);
            t4.status = BigRat(c2k) <= hi ? BoundStatus::pass : BoundStatus::fail;
        } else {
            t4.lhs = c2k.str();
            t4.rhs = "-";
            t4.status = BoundStatus::not_applicable;
        }
        rep.items.push_back(std::move(t4));
    }

    json j = json::parse(bound_report_json(rep));
    j["n"] = pl.n;
    j["k"] = o.k;
    j["c_2k"] = c2k.str();
    j["c_prev"] = c_prev.str();
    for (const auto& item : rep.items) {
        const char* st = item.status == BoundStatus::pass ? "pass"
                         : item.status == BoundStatus::fail ? "FAIL"
                                                            : "n/a";
        err << item.name << ": " << item.lhs << " " << item.relation << " " << item.rhs << "  [" << st << "]\n";
    }
    emit(j.dump(), o, out);
    return rep.all_pass() ? 0 : 1;
}

int run_fit(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.k < 3) throw CLI::ValidationError("--k", "fit needs --k >= 3");
    if (o.counts_path.empty()) throw CLI::ValidationError("--counts", "fit needs a counts CSV");
    SampleSet all = read_counts_csv(o.counts_path);
    const int degree = 2 * o.k;
    if (static_cast<int>(all.size()) < degree + 1)
        throw std::invalid_argument("fit of degree " + std::to_string(degree) + " needs at least " +
                                    std::to_string(degree + 1) + " samples");
    SampleSet fit_set(all.begin(), all.begin() + degree + 1);
    SampleSet holdout(all.begin() + degree + 1, all.end());

    RationalPolynomial poly = fit_exact(fit_set, degree);
    Table1Report trep = table1_check(poly, o.k);
    bool ok = trep.ok;

    json coeffs = json::array();
    for (int i = 0; i <= degree; ++i) coeffs.push_back(rat_str(poly.coeff(i)));
    json hold = json::array();
    for (const auto& s : holdout) {
        const BigRat pred = poly.eval(BigInt(s.n));
        const bool match = pred == BigRat(s.count);
        ok = ok && match;
        hold.push_back({{"n", s.n}, {"predicted", rat_str(pred)}, {"actual", s.count.str()}, {"match", match}});
        err << "holdout n=" << s.n << ": predicted " << rat_str(pred) << " actual " << s.count.str()
            << (match ? " ok" : " MISMATCH") << '\n';
    }
    json j;
    j["k"] = o.k;
    j["degree"] = degree;
    j["coefficients_low_to_high"] = coeffs;
    j["table1"] = {{"expected", trep.expected},
                   {"actual", trep.actual},
                   {"mismatch_positions", trep.mismatch_positions},
                   {"generic_only", trep.generic_only},
                   {"ok", trep.ok}};
    j["holdout"] = hold;
    j["ok"] = ok;
    err << "leading coefficients:";
    for (const auto& a : trep.actual) err << " " << a;
    err << (trep.ok ? "  (match)" : "  (MISMATCH)") << '\n';
    emit(j.dump(), o, out);
    return ok ? 0 : 1;
}

int run_cap(const CommonOpts& o, long long v, std::ostream& out, std::ostream&) {
    if (o.k < 3) throw CLI::ValidationError("--k", "cap needs --k >= 3");
    json j;
    j["v"] = v;
    j["k"] = o.k;
    j["cap"] = rat_str(theorem5_cap(v, o.k));
    emit(j.dump(), o, out);
    return 0;
}

int run_conjecture(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.counts_path.empty()) throw CLI::ValidationError("--counts", "conjecture needs a counts CSV");
    SampleSet samples = read_counts_csv(o.counts_path);
    ConjectureReport rep = conjecture_residuals(o.k, samples);
    for (const auto& r : rep.ratios)
        err << "n=" << r.n << ": residual/n^" << 2 * o.k - 4 << " = " << rat_str(r.ratio) << '\n';
    emit(conjecture_report_json(rep), o, out);
    return 0;
}

int run_plane_gen(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    const Plane pl = resolve_plane(o);
    err << "plane order " << pl.n << ", N=" << pl.N << '\n';
    if (!o.out_path.empty()) {
        save_plane(pl, o.out_path);
        json j;
        j["n"] = pl.n;
        j["N"] = pl.N;
        j["out"] = o.out_path;
        out << j.dump() << '\n';
    } else {
        out << plane_text(pl);
    }
    return 0;
}

int run_plane_check(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.plane_file.empty()) throw CLI::ValidationError("--plane", "check needs --plane <file>");
    std::ifstream in(o.plane_file);
    if (!in) throw std::invalid_argument("cannot open plane file: " + o.plane_file);
    IncidenceData d = parse_plane_text(in);
    ValidationReport rep = validate_plane(d);
    json issues = json::array();
    for (const auto& i : rep.issues) issues.push_back({{"axiom", i.axiom}, {"witness", i.witness}});
    json j;
    j["n"] = d.n;
    j["issues"] = issues;
    j["ok"] = rep.ok();
    err << (rep.ok() ? "all plane axioms hold" : rep.to_string()) << '\n';
    emit(j.dump(), o, out);
    return rep.ok() ? 0 : 1;
}

int run_plane_dual(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    const Plane pl = resolve_plane(o);
    const Plane d = dual_plane(pl);
    err << "dual of order-" << pl.n << " plane\n";
    if (!o.out_path.empty()) {
        save_plane(d, o.out_path);
        json j;
        j["n"] = d.n;
        j["N"] = d.N;
        j["out"] = o.out_path;
        out << j.dump() << '\n';
    } else {
        out << plane_text(d);
    }
    return 0;
}

void add_plane_source(CLI::App* cmd, CommonOpts& o, bool with_order = false) {
    cmd->add_option("--p", o.p, "field characteristic (generate PG(2,p^e))");
    cmd->add_option("--e", o.e, "field extension degree (default 1)");
    cmd->add_option("--plane", o.plane_file, "plane file to load");
    if (with_order) cmd->add_option("--n", o.n, "plane order (prime power)");
}

}  // namespace

int cli_dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact projective-plane cycle counting and verification"};
    app.require_subcommand(1);
    CommonOpts o;
    long long cap_v = 0;

    auto* plane_cmd = app.add_subcommand("plane", "generate, check, or dualize a plane");
    plane_cmd->require_subcommand(1);
    auto* gen = plane_cmd->add_subcommand("gen", "write PG(2,p^e) in the plane file format");
    add_plane_source(gen, o);
    gen->add_option("--out", o.out_path, "output path");
    auto* check = plane_cmd->add_subcommand("check", "validate the plane axioms of a file");
    check->add_option("--plane", o.plane_file, "plane file")->required();
    check->add_option("--out", o.out_path, "output path");
    auto* dual = plane_cmd->add_subcommand("dual", "write the dual plane");
    add_plane_source(dual, o);
    dual->add_option("--out", o.out_path, "output path");

    auto* walks = app.add_subcommand("walks", "closed-walk formula vs direct trace");
    add_plane_source(walks, o, true);
    walks->add_option("--k", o.k, "half walk length");
    walks->add_option("--kmax", o.kmax, "check k = 1..kmax");
    walks->add_option("--out", o.out_path, "output path");

    auto* cycles = app.add_subcommand("cycles", "exact 2k-cycle counts");
    add_plane_source(cycles, o);
    cycles->add_option("--k", o.k, "gon size k (counts 2k-cycles)");
    cycles->add_option("--kmax", o.kmax, "profile k = 3..kmax");
    cycles->add_option("--threads", o.threads, "worker threads (0 = all)");
    cycles->add_option("--budget", o.budget, "work budget in enumeration steps");
    cycles->add_flag("--cross-check", o.cross_check, "also run the graph-generic counter");
    cycles->add_flag("--timings", o.timings, "include wall time in JSON");
    cycles->add_option("--out", o.out_path, "output path");

    auto* censusc = app.add_subcommand("census", "classify all ordered k-tuples");
    add_plane_source(censusc, o);
    censusc->add_option("--k", o.k, "tuple length")->required();
    censusc->add_option("--threads", o.threads, "worker threads (0 = all)");
    censusc->add_option("--budget", o.budget, "work budget in enumeration steps");
    censusc->add_option("--out", o.out_path, "output path");

    auto* bounds = app.add_subcommand("bounds", "evaluate the bound suite against a census");
    add_plane_source(bounds, o);
    bounds->add_option("--k", o.k, "tuple length")->required();
    bounds->add_option("--threads", o.threads, "worker threads (0 = all)");
    bounds->add_option("--budget", o.budget, "work budget in enumeration steps");
    bounds->add_option("--out", o.out_path, "output path");

    auto* fit = app.add_subcommand("fit", "interpolate counts and check the coefficient table");
    fit->add_option("--k", o.k, "gon size (degree 2k)")->required();
    fit->add_option("--counts", o.counts_path, "CSV of n,count rows")->required();
    fit->add_option("--out", o.out_path, "output path");

    auto* cap = app.add_subcommand("cap", "cycle-count cap for v-vertex girth-6 bipartite graphs");
    cap->add_option("--v", cap_v, "vertex count (even)")->required();
    cap->add_option("--k", o.k, "gon size")->required();
    cap->add_option("--out", o.out_path, "output path");

    auto* conj = app.add_subcommand("conjecture", "exact residuals against the conjectured asymptotic");
    conj->add_option("--k", o.k, "gon size (k >= 6)")->required();
    conj->add_option("--counts", o.counts_path, "CSV of n,count rows")->required();
    conj->add_option("--out", o.out_path, "output path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed()) return run_plane_gen(o, out, err);
        if (check->parsed()) return run_plane_check(o, out, err);
        if (dual->parsed()) return run_plane_dual(o, out, err);
        if (walks->parsed()) return run_walks(o, out, err);
        if (cycles->parsed()) return run_cycles(o, out, err);
        if (censusc->parsed()) return run_census(o, out, err);
        if (bounds->parsed()) return run_bounds(o, out, err);
        if (fit->parsed()) return run_fit(o, out, err);
        if (cap->parsed()) return run_cap(o, cap_v, out, err);
        if (conj->parsed()) return run_conjecture(o, out, err);
    } catch (const BudgetExceeded& e) {
        err << e.what() << '\n';
        return 3;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace levigon
