#include "interlace/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "interlace/bpoly.hpp"
#include "interlace/checks.hpp"
#include "interlace/cwdp.hpp"
#include "interlace/error.hpp"
#include "interlace/kexpr.hpp"
#include "interlace/matroid.hpp"

namespace interlace {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string poly = "B";
    std::string method = "both";
    std::string graph_file;
    std::string expr;
    std::string file;
    std::string text;
    std::string subst;
    std::string at;
    std::string vertices;
    std::string suite;
    std::string from = "B";
    std::string tutte_method = "both";
    std::string decompose;
    std::string activities;
    std::string matroid_poly = "T";
    int truncate_d = -1;
    int k = 0;
    int d = 0;
    int jobs = 0;
    bool force = false;
    bool ordered = false;
    bool independence = false;
    bool list_suites = false;
};

VertexSet parse_vertex_list(const std::string& csv) {
    VertexSet out;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.insert(tok);
    return out;
}

Graph load_graph(const Options& opt) {
    if (opt.graph_file.empty()) throw std::runtime_error("no graph given (use --graph FILE)");
    return parse_graph(slurp(opt.graph_file));
}

void guard_size(const Graph& g, const Options& opt) {
    if (g.size() > 16 && !opt.force)
        throw std::runtime_error("graph has " + std::to_string(g.size()) +
                                 " vertices; interlace polynomials grow like 3^n. "
                                 "Pass --force to compute anyway");
}

/// All requested method routes for one polynomial family, labelled.
std::vector<std::pair<std::string, MultiPoly>> compute_routes(const Graph& g,
                                                              const std::string& poly,
                                                              const std::string& method) {
    auto want = [&](const std::string& m) { return method == "both" || method == m; };
    std::vector<std::pair<std::string, MultiPoly>> out;

    if (poly == "B" || poly == "B1") {
        if (want("brute")) out.emplace_back("brute", brute_force_B(g));
        if (want("recursive")) out.emplace_back("recursive", recursive_B(g));
        if (poly == "B1")
            for (auto& [name, p] : out) p = specialize_B1(p);
    } else if (poly == "By0") {
        if (want("substitution")) out.emplace_back("substitution", b_y0(g, By0Method::Substitution));
        if (want("recursive")) out.emplace_back("recursive", b_y0(g, By0Method::RecursionProp16));
        if (want("recursive-alt"))
            out.emplace_back("recursive-alt", b_y0(g, By0Method::RecursionCor18));
    } else if (poly == "Bxy") {
        if (want("substitution")) out.emplace_back("substitution", b_xy(g, BxyMethod::Substitution));
        if (want("recursive")) out.emplace_back("recursive", b_xy(g, BxyMethod::Recursion));
    } else if (poly == "q") {
        if (want("substitution")) out.emplace_back("substitution", q_poly(g, QMethod::Substitution));
        if (want("recursive")) out.emplace_back("recursive", q_poly(g, QMethod::RecursionQ123));
        if (want("recursive-alt"))
            out.emplace_back("recursive-alt", q_poly(g, QMethod::RecursionQ3Prime));
    } else if (poly == "Q") {
        if (want("substitution"))
            out.emplace_back("substitution", big_q_poly(g, BigQMethod::Substitution));
        if (want("recursive")) out.emplace_back("recursive", big_q_poly(g, BigQMethod::Recursion));
    } else if (poly == "BI") {
        if (want("direct") || want("brute"))
            out.emplace_back("direct", b_independence(g, BIMethod::Direct));
        if (want("substitution"))
            out.emplace_back("substitution", b_independence(g, BIMethod::Substitution));
        if (want("recursive")) out.emplace_back("recursive", b_independence(g, BIMethod::RecursionI14));
        if (want("recursive-alt"))
            out.emplace_back("recursive-alt", b_independence(g, BIMethod::RecursionI56));
    } else if (poly == "I") {
        if (want("direct") || want("brute")) out.emplace_back("direct", independence_classical(g));
        if (want("substitution"))
            out.emplace_back("substitution",
                             substitute(b_xy(g, BxyMethod::Recursion), subst_eta()));
    } else {
        throw std::runtime_error("unknown polynomial '" + poly + "'");
    }
    if (out.empty())
        throw std::runtime_error("method '" + method + "' is not available for polynomial '" +
                                 poly + "'");
    return out;
}

int do_compute(const Options& opt, std::ostream& out) {
    Graph g = load_graph(opt);
    guard_size(g, opt);
    auto routes = compute_routes(g, opt.poly, opt.method);
    bool agree = true;
    for (const auto& [name, p] : routes)
        if (p != routes.front().second) agree = false;
    MultiPoly result = routes.front().second;
    if (opt.truncate_d >= 0) result = truncate(result, opt.truncate_d);
    if (!agree) {
        for (const auto& [name, p] : routes) out << name << ": " << canonical_text(p) << "\n";
        out << "methods disagree\n";
        return 1;
    }
    out << canonical_text(result) << "\n";
    if (routes.size() > 1) out << "methods agree\n";
    return 0;
}

Substitution named_substitution(const Options& opt) {
    const std::string& name = opt.subst;
    if (name == "B1" || name == "v1") return subst_v1();
    if (name == "y0") return subst_sigma0();
    if (name == "xy") return subst_sigma_eq();
    if (name == "q") return subst_q();
    if (name == "Q") return subst_big_q();
    if (name == "rho") return subst_rho();
    if (name == "rho-xy") return subst_rho_xy();
    if (name == "eta") return subst_eta();
    if (name == "eta-prime" || name == "BI") return subst_eta_prime();
    if (name == "ones" || name == "I") return subst_ones();
    if (name == "mu") return subst_mu(parse_vertex_list(opt.vertices));
    throw std::runtime_error("unknown substitution '" + name + "'");
}

MultiPoly load_poly(const Options& opt) {
    if (!opt.text.empty()) return parse_poly(opt.text);
    if (!opt.file.empty()) return parse_poly(slurp(opt.file));
    throw std::runtime_error("no polynomial given (use --text or --file)");
}

int do_specialize(const Options& opt, std::ostream& out) {
    MultiPoly p = load_poly(opt);
    if (!opt.subst.empty()) {
        if (opt.subst == "shift-minus")
            p = shift_minus(p);
        else if (opt.subst == "shift-plus")
            p = shift_plus(p);
        else if (opt.subst == "theta")
            p = theta_expand(p);
        else
            p = substitute(p, named_substitution(opt));
    }
    if (!opt.at.empty()) {
        Substitution nu;
        std::istringstream in(opt.at);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("malformed --at binding '" + item + "'");
            std::string name = item.substr(0, eq);
            BigInt value(item.substr(eq + 1));
            auto underscore = name.find('_');
            Indeterminate var =
                (underscore == std::string::npos)
                    ? Indeterminate::ordinary(name)
                    : Indeterminate::indexed(name.substr(0, underscore), name.substr(underscore + 1));
            nu.set(var, MultiPoly::constant(value));
        }
        p = substitute(p, nu);
    }
    if (opt.truncate_d >= 0) p = truncate(p, opt.truncate_d);
    out << canonical_text(p) << "\n";
    return 0;
}

int do_check(const Options& opt, std::ostream& out) {
    std::vector<std::string> names;
    if (opt.list_suites) {
        for (const auto& n : check_names()) out << n << "\n";
        return 0;
    }
    if (opt.suite == "all")
        names = check_names();
    else
        names.push_back(opt.suite);
    bool all_ok = true;
    for (const auto& name : names) {
        CheckResult r = run_check(name);
        out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.detail << ") ["
            << std::fixed << std::setprecision(2) << r.seconds << "s]\n";
        if (!r.passed) all_ok = false;
    }
    return all_ok ? 0 : 1;
}

KExprPtr load_expr(const Options& opt) {
    if (!opt.expr.empty()) return parse_kexpr(opt.expr);
    if (!opt.file.empty()) return parse_kexpr(slurp(opt.file));
    throw std::runtime_error("no expression given (use --expr or --file)");
}

int do_cwx_eval(const Options& opt, std::ostream& out) {
    KExprPtr e = load_expr(opt);
    int k = opt.k > 0 ? opt.k : used_width(*e);
    LabelledGraph lg = eval_kexpr(*e, k, opt.ordered);
    out << "width-used: " << used_width(*e) << "\n";
    out << format_graph(lg.graph);
    out << "labels:";
    for (const auto& v : lg.graph.vertices()) out << ' ' << v << '=' << lg.labels.at(v);
    out << "\n";
    if (lg.order) {
        out << "order:";
        for (const auto& v : *lg.order) out << ' ' << v;
        out << "\n";
    }
    return 0;
}

int do_cwdp(const Options& opt, std::ostream& out) {
    KExprPtr e = load_expr(opt);
    int k = opt.k > 0 ? opt.k : used_width(*e);
    MultiPoly p = dp_bi_truncated(*e, k, opt.d);
    if (opt.independence) p = substitute(p, subst_ones());
    out << canonical_text(p) << "\n";
    return 0;
}

int do_matroid(const Options& opt, std::ostream& out) {
    if (opt.file.empty()) throw std::runtime_error("no matroid given (use --file)");
    Matroid m = parse_matroid(slurp(opt.file), slurp);
    if (!opt.activities.empty()) {
        ElementSet b;
        std::istringstream in(opt.activities);
        std::string tok;
        while (in >> tok) b.insert(tok);
        auto act = m.activities(b);
        auto render = [&](const ElementSet& s) {
            std::string t = "{";
            bool first = true;
            for (const auto& e : s) {
                if (!first) t += ' ';
                t += e;
                first = false;
            }
            return t + "}";
        };
        out << "IA: " << render(act.internal) << "\n";
        out << "EA: " << render(act.external) << "\n";
        return 0;
    }
    if (opt.decompose != "\x01") {
        ElementSet a;
        std::istringstream in(opt.decompose);
        std::string tok;
        while (in >> tok) a.insert(tok);
        auto dec = m.activity_interval_decompose(a);
        auto render = [&](const ElementSet& s) {
            std::string t = "{";
            bool first = true;
            for (const auto& e : s) {
                if (!first) t += ' ';
                t += e;
                first = false;
            }
            return t + "}";
        };
        out << "basis: " << render(dec.basis) << "\n";
        out << "C: " << render(dec.c) << "\n";
        out << "D: " << render(dec.d) << "\n";
        return 0;
    }

    const std::string& which = opt.matroid_poly;
    std::vector<std::pair<std::string, MultiPoly>> routes;
    if (which == "R") {
        routes.emplace_back("subsets", rank_polynomial(m));
    } else if (which == "T") {
        if (opt.tutte_method == "both" || opt.tutte_method == "rank_shift")
            routes.emplace_back("rank_shift", tutte_polynomial(m, TutteMethod::RankShift));
        if (opt.tutte_method == "both" || opt.tutte_method == "activities")
            routes.emplace_back("activities", tutte_polynomial(m, TutteMethod::Activities));
        if (routes.empty())
            throw std::runtime_error("unknown Tutte method '" + opt.tutte_method + "'");
    } else if (which == "Ttilde") {
        routes.emplace_back("activities", multivariate_tutte(m));
    } else if (which == "Rtilde") {
        routes.emplace_back("activities", multivariate_rank_tilde(m));
    } else if (which == "Rhat") {
        routes.emplace_back("greedy", rhat_polynomial(m));
    } else {
        throw std::runtime_error("unknown matroid polynomial '" + which + "'");
    }
    bool agree = true;
    for (const auto& [name, p] : routes)
        if (p != routes.front().second) agree = false;
    if (!agree) {
        for (const auto& [name, p] : routes) out << name << ": " << canonical_text(p) << "\n";
        out << "methods disagree\n";
        return 1;
    }
    out << canonical_text(routes.front().second) << "\n";
    if (routes.size() > 1) out << "methods agree\n";
    return 0;
}

int do_reconstruct(const Options& opt, std::ostream& out) {
    MultiPoly p = load_poly(opt);
    Graph g = (opt.from == "Bxy") ? reconstruct_loopfree(p) : reconstruct_graph(p);
    out << format_graph(g);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    opt.decompose = "\x01";  // sentinel: flag absent

    CLI::App app{"multivariate interlace polynomial toolkit"};
    app.require_subcommand(1);

    auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", opt.jobs, "worker threads for parallel kernels");
    };

    CLI::App* compute = app.add_subcommand("compute", "compute a polynomial of a graph");
    compute->add_option("--poly", opt.poly, "B, B1, By0, Bxy, BI, q, Q or I")->capture_default_str();
    compute->add_option("--method", opt.method,
                        "brute, recursive, recursive-alt, substitution, direct or both")
        ->capture_default_str();
    compute->add_option("--graph", opt.graph_file, "graph file")->required();
    compute->add_option("--truncate", opt.truncate_d, "keep quasi-degree <= d");
    compute->add_flag("--force", opt.force, "allow more than 16 vertices");
    add_jobs(compute);

    CLI::App* trunc = app.add_subcommand("truncate", "compute a d-truncated polynomial");
    trunc->add_option("--poly", opt.poly)->capture_default_str();
    trunc->add_option("--method", opt.method)->capture_default_str();
    trunc->add_option("--graph", opt.graph_file)->required();
    trunc->add_option("--d", opt.truncate_d, "truncation quasi-degree")->required();
    trunc->add_flag("--force", opt.force);
    add_jobs(trunc);

    CLI::App* spec = app.add_subcommand("specialize", "apply a substitution to a polynomial");
    spec->add_option("--text", opt.text, "polynomial text");
    spec->add_option("--file", opt.file, "polynomial file");
    spec->add_option("--subst", opt.subst,
                     "B1, y0, xy, q, Q, rho, rho-xy, eta, eta-prime, ones, mu, theta, "
                     "shift-minus, shift-plus");
    spec->add_option("--vertices", opt.vertices, "comma list for mu");
    spec->add_option("--at", opt.at, "numeric bindings, e.g. u=2,v=1,x_a=0");
    spec->add_option("--truncate", opt.truncate_d);

    CLI::App* check = app.add_subcommand("check", "run identity suites");
    check->add_option("--suite", opt.suite, "suite name or 'all'");
    check->add_flag("--list", opt.list_suites, "list suite names");

    CLI::App* cwx = app.add_subcommand("cwx-eval", "evaluate a k-expression to a graph");
    cwx->add_option("--expr", opt.expr, "inline k-expression");
    cwx->add_option("--file", opt.file, ".cwx file");
    cwx->add_option("--k", opt.k, "declared width (default: max label used)");
    cwx->add_flag("--order", opt.ordered, "report the vertex order");

    CLI::App* cwdp = app.add_subcommand(
        "cwdp", "d-truncated multivariate independence polynomial via the clique-width DP");
    cwdp->add_option("--expr", opt.expr);
    cwdp->add_option("--file", opt.file);
    cwdp->add_option("--k", opt.k, "declared width (default: max label used)");
    cwdp->add_option("--d", opt.d, "truncation quasi-degree")->required();
    cwdp->add_flag("--independence", opt.independence,
                   "substitute x_a := y_a := 1 in the result");

    CLI::App* matroid = app.add_subcommand("matroid", "activity-based matroid polynomials");
    matroid->add_option("--file", opt.file, "matroid file")->required();
    matroid->add_option("--poly", opt.matroid_poly, "R, T, Ttilde, Rtilde or Rhat")
        ->capture_default_str();
    matroid->add_option("--method", opt.tutte_method, "rank_shift, activities or both (T only)")
        ->capture_default_str();
    matroid->add_option("--decompose", opt.decompose,
                        "space-separated subset; print its activity-interval decomposition");
    matroid->add_option("--activities", opt.activities,
                        "space-separated basis; print IA and EA");

    CLI::App* rec = app.add_subcommand("reconstruct", "rebuild a graph from rho(B) or rho(Bxy)");
    rec->add_option("--text", opt.text);
    rec->add_option("--file", opt.file);
    rec->add_option("--from", opt.from, "B or Bxy")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

#ifdef _OPENMP
    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
#endif

    try {
        if (compute->parsed()) return do_compute(opt, out);
        if (trunc->parsed()) {
            if (opt.truncate_d < 0) throw std::runtime_error("--d must be nonnegative");
            return do_compute(opt, out);
        }
        if (spec->parsed()) return do_specialize(opt, out);
        if (check->parsed()) {
            if (!opt.list_suites && opt.suite.empty())
                throw std::runtime_error("check requires --suite NAME or --suite all (or --list)");
            return do_check(opt, out);
        }
        if (cwx->parsed()) return do_cwx_eval(opt, out);
        if (cwdp->parsed()) return do_cwdp(opt, out);
        if (matroid->parsed()) return do_matroid(opt, out);
        if (rec->parsed()) return do_reconstruct(opt, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace interlace
