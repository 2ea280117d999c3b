#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hijac/factor.hpp"
#include "hijac/groebner.hpp"
#include "hijac/jacobian.hpp"
#include "hijac/motivic.hpp"
#include "hijac/nash.hpp"
#include "hijac/parse.hpp"
#include "hijac/resolve.hpp"
#include "hijac/rg_io.hpp"

namespace hijac::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string f, g, u, sigma, weights, graph, output;
    int d = 0;
    int n = 1;
    long m = 1;
    int upto = 0;
    int m_max = 6;
    int degree_bound = -1;
    std::string version = "zero";
    bool as_json = false;
};

Polynomial parse_input(const std::string& text, int d) {
    if (d < 1) throw CLI::ValidationError("-d", "variable count must be at least 1");
    return parse_poly(text, d);
}

Substitution parse_sigma(const std::string& text, int d) {
    std::vector<Polynomial> images;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ';')) images.push_back(parse_input(piece, d));
    if (static_cast<int>(images.size()) != d)
        throw CLI::ValidationError("--sigma", "need exactly d images separated by ';'");
    return Substitution(std::move(images));
}

JacVersion parse_version(const std::string& v) {
    if (v == "zero") return JacVersion::ZeroDiagonal;
    if (v == "f-diag") return JacVersion::FDiagonal;
    if (v == "jacobi-taylor") return JacVersion::JacobiTaylor;
    throw CLI::ValidationError("--version", "one of zero|f-diag|jacobi-taylor");
}

ResolutionGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_rg(buf.str());
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream os(output);
    if (!os) throw std::runtime_error("cannot write " + output);
    os << text;
}

json report_json(const Report& rep) {
    json j;
    j["title"] = rep.title;
    j["truncated"] = rep.truncated_mode;
    json facts = json::object();
    for (const auto& [k, v] : rep.facts) facts[k] = v;
    j["facts"] = facts;
    json items = json::array();
    for (const auto& it : rep.items)
        items.push_back({{"name", it.name}, {"status", to_string(it.status)}, {"detail", it.detail}});
    j["items"] = items;
    j["overall"] = to_string(rep.overall());
    return j;
}

int report_exit(const Report& rep) {
    return rep.overall() == CheckStatus::PASS ? kPass : kCheckFailed;
}

void print_report(const Report& rep, bool as_json, std::ostream& out) {
    if (as_json)
        out << report_json(rep).dump(2) << "\n";
    else
        out << rep.text();
}

int cmd_jac(const Options& o, std::ostream& out) {
    Polynomial f = parse_input(o.f, o.d);
    JacobianMatrix M = jac_matrix(f, o.n, parse_version(o.version));
    if (o.as_json) {
        json j;
        j["f"] = f.str();
        j["n"] = o.n;
        j["version"] = o.version;
        j["rows"] = M.row_count();
        j["cols"] = M.col_count();
        json rows = json::array();
        for (int i = 0; i < M.row_count(); ++i) {
            json row = json::array();
            for (int c = 0; c < M.col_count(); ++c) row.push_back(M.entry(i, c).str());
            rows.push_back(row);
        }
        j["entries"] = rows;
        json ridx = json::array(), cidx = json::array();
        for (const auto& b : M.row_indices()) ridx.push_back(b.str());
        for (const auto& a : M.col_indices()) cidx.push_back(a.str());
        j["row_indices"] = ridx;
        j["col_indices"] = cidx;
        out << j.dump(2) << "\n";
        return kPass;
    }
    for (int i = 0; i < M.row_count(); ++i) {
        out << "[";
        for (int c = 0; c < M.col_count(); ++c) {
            if (c) out << ", ";
            out << M.entry(i, c).str();
        }
        out << "]\n";
    }
    return kPass;
}

int cmd_ideal(const Options& o, std::ostream& out) {
    Polynomial f = parse_input(o.f, o.d);
    IdealGens J = jacobian_ideal(f, o.n);
    if (o.as_json) {
        json j;
        j["f"] = f.str();
        j["n"] = o.n;
        json gens = json::array();
        for (const auto& g : J.gens()) gens.push_back(g.str());
        j["generators"] = gens;
        out << j.dump(2) << "\n";
        return kPass;
    }
    for (const auto& g : J.gens()) out << g.str() << "\n";
    return kPass;
}

int cmd_nash_dim(const Options& o, std::ostream& out) {
    Polynomial f = parse_input(o.f, o.d);
    NashAlgebra a = nash_algebra(f, o.n);
    std::vector<std::string> basis;
    for (const auto& m : a.monomial_basis) basis.push_back(Polynomial::monomial(m, 1).str());
    if (o.as_json) {
        json j;
        j["f"] = f.str();
        j["n"] = o.n;
        j["finite"] = a.finite;
        if (a.finite) j["dimension"] = a.dimension;
        j["monomial_basis"] = basis;
        out << j.dump(2) << "\n";
        return kPass;
    }
    out << "dimension: " << (a.finite ? std::to_string(a.dimension) : std::string("INFINITE"))
        << "\n";
    if (a.finite) {
        out << "basis:";
        for (const auto& b : basis) out << " " << b;
        out << "\n";
    }
    return kPass;
}

int cmd_check(const std::string& which, const Options& o, std::ostream& out) {
    Polynomial f = parse_input(o.f, o.d);
    Report rep;
    if (which == "unit") {
        rep = check_unit_invariance(f, parse_input(o.u, o.d), o.n);
    } else if (which == "det-congruence") {
        rep = check_det_congruence(f, parse_input(o.u, o.d), o.n);
    } else if (which == "autoeq") {
        rep = check_automorphism_equivariance(f, parse_sigma(o.sigma, o.d), o.n);
    } else if (which == "inclusion") {
        rep = check_inclusion_J1_power(f, o.n);
    } else if (which == "weighted") {
        std::vector<int> w;
        std::istringstream is(o.weights);
        std::string piece;
        while (std::getline(is, piece, ',')) w.push_back(std::stoi(piece));
        rep = check_weighted_homogeneous_invariance(f, w, parse_input(o.u, o.d), o.n);
    } else if (which == "contact") {
        ContactWitness wit{parse_sigma(o.sigma, o.d), parse_input(o.u, o.d), o.degree_bound};
        rep = check_contact_invariance(f, parse_input(o.g, o.d), wit, o.n);
    } else {
        throw CLI::ValidationError("check", "unknown check " + which);
    }
    print_report(rep, o.as_json, out);
    return report_exit(rep);
}

int cmd_resolve(const Options& o, std::ostream& out) {
    if (o.d != 2) throw CLI::ValidationError("-d", "resolution is implemented for d = 2");
    Polynomial f = parse_input(o.f, 2);
    ResolutionGraph G = resolve_curve(f);
    emit(write_rg(G), o.output, out);
    return kPass;
}

int cmd_separate(const Options& o, std::ostream& out) {
    ResolutionGraph G = load_graph(o.graph);
    ResolutionGraph H = m_separate(G, o.m);
    emit(write_rg(H), o.output, out);
    return kPass;
}

json groval_json(const GroVal& v) {
    json terms = json::array();
    for (const auto& [key, c] : v.terms()) {
        json t;
        t["class"] = key.first.is_unit() ? "1" : key.first.name;
        t["L_exponent"] = key.second;
        t["coefficient"] = c.get_str();
        terms.push_back(t);
    }
    json j;
    j["value"] = v.str();
    j["terms"] = terms;
    return j;
}

int cmd_zeta(const Options& o, std::ostream& out) {
    ResolutionGraph G = load_graph(o.graph);
    int d = o.d > 0 ? o.d : G.ambient_dim;
    RationalSeries Z = zeta(G, d);
    if (o.as_json) {
        json j;
        j["graph"] = G.graph_id;
        j["d"] = d;
        j["series"] = Z.str();
        if (o.upto > 0) {
            json table = json::array();
            auto coeffs = expand(Z, o.upto, d);
            for (int m = 1; m <= o.upto; ++m) {
                json row;
                row["m"] = m;
                row["class"] = groval_json(coeffs[static_cast<std::size_t>(m - 1)]);
                table.push_back(row);
            }
            j["contact_loci"] = table;
        }
        out << j.dump(2) << "\n";
        return kPass;
    }
    out << "Z(T) = " << Z.str() << "\n";
    if (o.upto > 0) {
        auto coeffs = expand(Z, o.upto, d);
        for (int m = 1; m <= o.upto; ++m)
            out << "[X_" << m << "] = " << coeffs[static_cast<std::size_t>(m - 1)].str() << "\n";
    }
    return kPass;
}

int cmd_nearby(const Options& o, std::ostream& out) {
    ResolutionGraph G = load_graph(o.graph);
    int d = o.d > 0 ? o.d : G.ambient_dim;
    GroVal S = nearby_cycle(G, d);
    if (o.as_json) {
        json j;
        j["graph"] = G.graph_id;
        j["d"] = d;
        j["nearby_cycle"] = groval_json(S);
        out << j.dump(2) << "\n";
        return kPass;
    }
    out << "S = " << S.str() << "\n";
    return kPass;
}

int cmd_expand(const Options& o, std::ostream& out) {
    ResolutionGraph G = load_graph(o.graph);
    int d = o.d > 0 ? o.d : G.ambient_dim;
    auto coeffs = expand(zeta(G, d), o.upto, d);
    if (o.as_json) {
        json j = json::array();
        for (int m = 1; m <= o.upto; ++m) {
            json row;
            row["m"] = m;
            row["class"] = groval_json(coeffs[static_cast<std::size_t>(m - 1)]);
            j.push_back(row);
        }
        out << j.dump(2) << "\n";
        return kPass;
    }
    for (int m = 1; m <= o.upto; ++m)
        out << "[X_" << m << "] = " << coeffs[static_cast<std::size_t>(m - 1)].str() << "\n";
    return kPass;
}

int cmd_compare(const Options& o, std::ostream& out) {
    if (o.d != 2) throw CLI::ValidationError("-d", "the compare pipeline is implemented for d = 2");
    Polynomial f = parse_input(o.f, 2);
    Polynomial g = parse_input(o.g, 2);
    Report rep;
    rep.title = "contact-locus comparison pipeline";

    Polynomial diff = g - f;
    OrderedIdeal J2 = OrderedIdeal::groebner(jacobian_ideal(f, 2), MonomialOrder{OrderKind::GradedLex});
    bool member = J2.contains(diff);
    rep.add("g - f lies in J_2(f)", member, member ? "" : diff.str());

    ResolutionGraph Gf = resolve_curve(f);
    ResolutionGraph Gg = resolve_curve(g);
    Report cov = compare_coverings(Gf, Gg);
    for (const auto& it : cov.items) rep.items.push_back(it);

    if (cov.overall() == CheckStatus::PASS) {
        for (long m = 1; m <= o.m_max; ++m) {
            GroVal a = contact_locus_class(Gf, m, 2);
            GroVal b = contact_locus_class(Gg, m, 2).relabeled(Gg.graph_id, Gf.graph_id);
            rep.add("[X_" + std::to_string(m) + "(f)] = [X_" + std::to_string(m) + "(g)]",
                    gro_equal(a, b));
        }
        RationalSeries Zf = zeta(Gf, 2);
        RationalSeries Zg_raw = zeta(Gg, 2);
        RationalSeries Zg;
        for (const auto& [factors, coeff] : Zg_raw.terms())
            Zg.add_term(coeff.relabeled(Gg.graph_id, Gf.graph_id), factors);
        rep.add("zeta series coincide", Zf == Zg);
    }
    print_report(rep, o.as_json, out);
    return report_exit(rep);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact higher-Jacobian and motivic zeta toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_poly_opts = [&](CLI::App* c, bool need_n = true) {
        c->add_option("-f,--f", o.f, "polynomial in x1..xd")->required();
        c->add_option("-d,--dim", o.d, "number of variables")->required();
        if (need_n) c->add_option("-n,--order", o.n, "Jacobian order")->check(CLI::PositiveNumber);
        c->add_flag("--json", o.as_json, "structured output");
    };

    CLI::App* jac = app.add_subcommand("jac", "print the higher Jacobian matrix");
    add_poly_opts(jac);
    jac->add_option("--version", o.version, "zero|f-diag|jacobi-taylor");

    CLI::App* ideal = app.add_subcommand("ideal", "print the canonical Jacobian ideal generators");
    add_poly_opts(ideal);

    CLI::App* nash = app.add_subcommand("nash-dim", "dimension and basis of the local algebra");
    add_poly_opts(nash);

    CLI::App* check = app.add_subcommand("check", "run a verification report");
    check->require_subcommand(1);
    for (const char* name : {"contact", "unit", "det-congruence", "autoeq", "inclusion", "weighted"}) {
        CLI::App* c = check->add_subcommand(name, name);
        add_poly_opts(c);
        c->add_option("--g", o.g, "second polynomial");
        c->add_option("--u", o.u, "unit polynomial");
        c->add_option("--sigma", o.sigma, "substitution images, ';'-separated");
        c->add_option("--weights", o.weights, "comma-separated positive weights");
        c->add_option("--degree-bound", o.degree_bound, "truncation degree for the witness");
    }

    CLI::App* resolve = app.add_subcommand("resolve", "embedded resolution of a plane-curve germ");
    add_poly_opts(resolve, false);
    resolve->add_option("-o,--output", o.output, "output .rg file (stdout if omitted)");

    CLI::App* separate = app.add_subcommand("separate", "blow up crossings until m-separating");
    separate->add_option("--graph", o.graph, ".rg file")->required();
    separate->add_option("--m", o.m, "separation level")->required()->check(CLI::PositiveNumber);
    separate->add_option("-o,--output", o.output, "output .rg file (stdout if omitted)");

    CLI::App* zeta_cmd = app.add_subcommand("zeta", "motivic zeta function of a graph");
    zeta_cmd->add_option("--graph", o.graph, ".rg file")->required();
    zeta_cmd->add_option("-d,--dim", o.d, "ambient dimension override");
    zeta_cmd->add_option("--expand", o.upto, "also print contact-locus classes up to this m");
    zeta_cmd->add_flag("--json", o.as_json, "structured output");

    CLI::App* nearby = app.add_subcommand("nearby", "motivic nearby cycle of a graph");
    nearby->add_option("--graph", o.graph, ".rg file")->required();
    nearby->add_option("-d,--dim", o.d, "ambient dimension override");
    nearby->add_flag("--json", o.as_json, "structured output");

    CLI::App* expand_cmd = app.add_subcommand("expand", "contact-locus classes from the series");
    expand_cmd->add_option("--graph", o.graph, ".rg file")->required();
    expand_cmd->add_option("--upto", o.upto, "highest m")->required()->check(CLI::PositiveNumber);
    expand_cmd->add_option("-d,--dim", o.d, "ambient dimension override");
    expand_cmd->add_flag("--json", o.as_json, "structured output");

    CLI::App* compare = app.add_subcommand("compare", "shared-resolution comparison of f and g");
    compare->add_option("-f,--f", o.f, "first polynomial")->required();
    compare->add_option("--g", o.g, "second polynomial")->required();
    compare->add_option("-d,--dim", o.d, "number of variables")->required();
    compare->add_option("--m-max", o.m_max, "compare contact loci up to this m");
    compare->add_flag("--json", o.as_json, "structured output");

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (jac->parsed()) return cmd_jac(o, out);
        if (ideal->parsed()) return cmd_ideal(o, out);
        if (nash->parsed()) return cmd_nash_dim(o, out);
        if (check->parsed()) {
            for (CLI::App* sub : check->get_subcommands())
                return cmd_check(sub->get_name(), o, out);
        }
        if (resolve->parsed()) return cmd_resolve(o, out);
        if (separate->parsed()) return cmd_separate(o, out);
        if (zeta_cmd->parsed()) return cmd_zeta(o, out);
        if (nearby->parsed()) return cmd_nearby(o, out);
        if (expand_cmd->parsed()) return cmd_expand(o, out);
        if (compare->parsed()) return cmd_compare(o, out);
        err << "no subcommand\n";
        return kUsageError;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const RgParseError& e) {
        err << "graph parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ResolveError& e) {
        err << "aborted: " << e.what() << "\n";
        return kAborted;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "aborted: " << e.what() << "\n";
        return kAborted;
    }
}

}  // namespace hijac::cli
