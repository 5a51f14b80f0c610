#include "qcl/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcl/closure.hpp"
#include "qcl/io.hpp"
#include "qcl/numeric.hpp"

namespace qcl {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SystemFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_system(ss.str());
    } catch (const ParseError& e) {
        throw InputError(path + ":" + e.what());
    }
}

RegularChain single_chain(const SystemFile& sys) {
    if (sys.chains.size() != 1)
        throw InputError("expected exactly one chain, found " + std::to_string(sys.chains.size()));
    return to_chain(sys, 0);
}

void require_valid(const RegularChain& R, bool dim_one) {
    auto d = dim_one ? validate_chain(R) : validate_component(R);
    if (d.valid()) return;
    std::string msg = "invalid chain";
    for (auto& i : d.issues) msg += "\n  " + i;
    throw InputError(msg);
}

struct Args {
    std::string file;
    std::string at = "all";
    std::string mode = "degree";
    long ceiling = 0;
    bool json = false;
    bool crosscheck = false;
    double tol = 1e-4;
    long tau = 0;
    bool radical = false;
};

LimitOptions limit_options(const Args& a) {
    LimitOptions o;
    try {
        o.mode = parse_accuracy_mode(a.mode);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    o.ceiling = a.ceiling;
    return o;
}

int cmd_limits(const Args& a, std::ostream& out, std::ostream& err) {
    RegularChain R = single_chain(load(a.file));
    require_valid(R, true);
    LimitOptions opt = limit_options(a);
    std::vector<LimitPoint> pts;
    NumericResult num;
    if (a.at == "all") {
        pts = limit_points(R, opt);
        if (a.crosscheck) num = numeric_limits(R);
    } else {
        Rational alpha;
        try {
            alpha = parse_rational(a.at);
        } catch (const std::exception&) {
            throw InputError("--at expects a rational number or 'all', got '" + a.at + "'");
        }
        pts = limit_points_at(R, Tower(), Poly(alpha), opt);
        if (a.crosscheck) num = numeric_branch_limits(R, cplx(static_cast<long double>(alpha.get_d())));
    }
    if (!a.crosscheck) {
        out << render_results(pts, a.json ? Format::Json : Format::Text);
        return 0;
    }
    auto rep = cross_check(pts, num.points, a.tol);
    if (!rep.full()) err << "crosscheck mismatch: " << rep.str() << "\n";
    if (num.unconverged) err << "crosscheck: " << num.unconverged << " numeric branches did not converge\n";
    if (a.json) {
        auto j = nlohmann::ordered_json::parse(render_results(pts, Format::Json));
        j["crosscheck"] = {{"full", rep.full()},
                           {"matched", rep.matched.size()},
                           {"unmatched_symbolic", rep.unmatched_symbolic.size()},
                           {"unmatched_numeric", rep.unmatched_numeric.size()}};
        out << j.dump(2) << "\n";
    } else {
        out << render_results(pts, Format::Text) << "crosscheck: " << (rep.full() ? "full match, " : "mismatch, ")
            << rep.str() << "\n";
    }
    return 0;
}

int cmd_puiseux(const Args& a, std::ostream& out) {
    SystemFile sys = load(a.file);
    if (sys.order.size() != 2) throw InputError("puiseux expects two variables X Y");
    if (sys.chains.size() != 1 || sys.chains[0].size() != 1) throw InputError("puiseux expects one polynomial");
    if (a.tau < 1) throw InputError("--tau must be a positive integer");
    const Poly& f = sys.chains[0][0];
    if (f.degree(1) < 1) throw InputError("polynomial has no Y");
    auto pars = newton_puiseux(Tower(), SeriesPoly::from_poly(f, 0, 1), a.tau);
    out << render_parametrizations(pars, a.json ? Format::Json : Format::Text);
    return 0;
}

int cmd_closure(const Args& a, std::ostream& out) {
    RegularChain R = single_chain(load(a.file));
    require_valid(R, false);
    auto c = closure(R, limit_options(a));
    if (a.json) {
        auto j = nlohmann::ordered_json::parse(render_results(c.limit_set, Format::Json));
        std::vector<std::string> polys;
        for (auto& p : R.polys) polys.push_back(p.str(R.order));
        nlohmann::ordered_json o;
        o["chain"] = polys;
        o["limit_points"] = j["points"];
        out << o.dump(2) << "\n";
        return 0;
    }
    out << "chain " << R.str() << "\n" << render_results(c.limit_set, Format::Text);
    return 0;
}

int cmd_remove(const Args& a, std::ostream& out, std::ostream& err) {
    SystemFile sys = load(a.file);
    std::vector<RegularChain> chains;
    for (std::size_t k = 0; k < sys.chains.size(); ++k) {
        chains.push_back(to_chain(sys, k));
        try {
            require_valid(chains.back(), false);
        } catch (const InputError& e) {
            throw InputError("chain " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    RedundancyOptions opt;
    opt.radical = a.radical;
    opt.limits = limit_options(a);
    auto res = remove_redundant(chains, opt);
    for (auto& n : res.notes) err << "note: " << n << "\n";
    SystemFile kept{sys.order, {}};
    for (auto& c : res.kept) kept.chains.push_back(c.polys);
    if (a.json) {
        nlohmann::ordered_json j;
        j["kept"] = nlohmann::ordered_json::array();
        for (auto& c : res.kept) {
            std::vector<std::string> ps;
            for (auto& p : c.polys) ps.push_back(p.str(sys.order));
            j["kept"].push_back(ps);
        }
        std::vector<std::size_t> removed;
        for (auto i : res.removed) removed.push_back(i + 1);
        j["removed"] = removed;
        out << j.dump(2) << "\n";
        return 0;
    }
    // every kept chain under its own separator so the output parses back
    std::string s = render_system(kept);
    if (kept.chains.size() == 1) s.insert(s.find('\n') + 1, "chain\n");
    out << s;
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Limit points of quasi-components of one-dimensional regular chains"};
    app.name("qcl");
    app.require_subcommand(1);
    Args a;

    auto* lim = app.add_subcommand("limits", "limit points of W(R)");
    lim->add_option("file", a.file, "system file")->required();
    lim->add_option("--at", a.at, "rational X1 value, or all");
    lim->add_option("--accuracy-mode", a.mode, "degree, iterative or generic");
    lim->add_option("--accuracy-ceiling", a.ceiling, "cap on every accuracy");
    lim->add_flag("--crosscheck", a.crosscheck, "compare with a numeric branch solve");
    lim->add_option("--crosscheck-tol", a.tol, "matching tolerance");
    lim->add_flag("--json", a.json);

    auto* pui = app.add_subcommand("puiseux", "Puiseux parametrizations of a bivariate polynomial");
    pui->add_option("file", a.file)->required();
    pui->add_option("--tau", a.tau, "accuracy")->required();
    pui->add_flag("--json", a.json);

    auto* clo = app.add_subcommand("closure", "chain with its limit points");
    clo->add_option("file", a.file)->required();
    clo->add_option("--accuracy-mode", a.mode);
    clo->add_option("--accuracy-ceiling", a.ceiling);
    clo->add_flag("--json", a.json);

    auto* red = app.add_subcommand("remove-redundant", "drop chains covered by others");
    red->add_option("file", a.file)->required();
    red->add_flag("--radical", a.radical, "saturated ideals are radical");
    red->add_option("--accuracy-mode", a.mode);
    red->add_option("--accuracy-ceiling", a.ceiling);
    red->add_flag("--json", a.json);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    try {
        if (lim->parsed()) return cmd_limits(a, out, err);
        if (pui->parsed()) return cmd_puiseux(a, out);
        if (clo->parsed()) return cmd_closure(a, out);
        return cmd_remove(a, out, err);
    } catch (const AccuracyCeilingExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qcl
