// webs3 — exact computer algebra for planar 3-webs around a point.
//
// Expressions are polynomials in x, y (bivariate contexts) or t (univariate
// ones) with rational coefficients; an argument of the form @path reads the
// expression from a file.  Exit codes: 0 success, 1 internal error, 2 syntax
// error, 3 precondition violation, 4 verification failure.

#include "webs/circular.hpp"
#include "webs/curvature.hpp"
#include "webs/expr.hpp"
#include "webs/normalform.hpp"
#include "webs/symmetry.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace webs;

namespace {

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// '@path' arguments name a file holding the expression text.
std::string read_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw FileError("cannot read expression file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json series_json(const Series2& s) {
    json coeffs = json::object();
    for (const auto& [m, c] : s.terms())
        coeffs[std::to_string(m.r) + "," + std::to_string(m.s)] = to_string(c);
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

json series_json(const Series1& s) {
    json coeffs = json::object();
    for (const auto& [d, c] : s.terms()) coeffs[std::to_string(d)] = to_string(c);
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

json map_json(const PlaneMap& m) {
    return json{{"first", series_json(m.first())}, {"second", series_json(m.second())}};
}

std::string perm_text(const FoliationPermutation& p) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (i) out += ", ";
        out += to_string(static_cast<Foliation>(i)) + "->" +
               to_string(p.images[static_cast<std::size_t>(i)]);
    }
    return out;
}

json perm_json(const FoliationPermutation& p) {
    json j = json::object();
    for (int i = 0; i < 3; ++i)
        j[to_string(static_cast<Foliation>(i))] =
            to_string(p.images[static_cast<std::size_t>(i)]);
    return j;
}

std::string simple_tag(const SimpleClass& sc) {
    switch (sc.tag) {
        case SimpleTag::FlatToOrder: return "FlatToOrder";
        case SimpleTag::OnlyId: return "OnlyId";
        case SimpleTag::IdAndInvolution: return "IdAndInvolution";
    }
    return "?";
}

json simple_json(const SimpleClass& sc) {
    return json{{"tag", simple_tag(sc)}, {"order", sc.order}};
}

std::string simple_text(const SimpleClass& sc) {
    return simple_tag(sc) + " (order " + std::to_string(sc.order) + ")";
}

json report_json(const VerificationReport& r) {
    json j{{"order", r.order},       {"eq2", r.eq2},
           {"eq3", r.eq3},           {"eq4", r.eq4},
           {"eq5", r.eq5},           {"eq6", r.eq6},
           {"g_independent_of_y", r.g_independent_of_y},
           {"phi_power", r.phi_power},
           {"phi_power_is_identity", r.phi_power_is_identity}};
    j["permutation"] = r.permutation ? perm_json(*r.permutation) : json(nullptr);
    j["flatness"] = simple_json(r.flatness);
    if (r.thm3_identities) j["thm3_identities"] = *r.thm3_identities;
    if (r.thm3_five_points) j["thm3_five_points"] = *r.thm3_five_points;
    return j;
}

void print_witnesses(const NormalForm& nf, bool with_original, json* out_json) {
    const auto ws = symmetry_witnesses(nf);
    if (out_json) {
        json arr = json::array();
        for (const auto& w : ws) {
            json entry{{"kind", to_string(w.kind)},
                       {"normal_map", map_json(w.map)},
                       {"permutation", perm_json(w.permutation)}};
            if (with_original)
                entry["original_map"] = map_json(conjugate_witness(nf, w.map));
            arr.push_back(std::move(entry));
        }
        (*out_json)["witnesses"] = arr;
        return;
    }
    if (ws.empty()) {
        std::cout << "witnesses: none\n";
        return;
    }
    for (const auto& w : ws) {
        std::cout << "witness " << to_string(w.kind) << ": ("
                  << format_series(w.map.first()) << ", "
                  << format_series(w.map.second())
                  << ")  permutation: " << perm_text(w.permutation) << "\n";
        if (with_original) {
            const PlaneMap om = conjugate_witness(nf, w.map);
            std::cout << "  in original coordinates: (" << format_series(om.first())
                      << ", " << format_series(om.second()) << ")\n";
        }
    }
}

void print_circular(const CircularResult& r, bool js) {
    if (js) {
        json j{{"A", series_json(r.A)}, {"B", series_json(r.B)},
               {"U", series_json(r.U)}, {"F", series_json(r.F)},
               {"G", series_json(r.G)}, {"f", series_json(r.f)},
               {"report", report_json(r.report)}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "A = " << format_series(r.A) << "\n";
    std::cout << "B = " << format_series(r.B) << "\n";
    std::cout << "U = " << format_series(r.U) << "\n";
    std::cout << "F = " << format_series(r.F) << "\n";
    std::cout << "G = " << format_series(r.G) << "\n";
    std::cout << "f = " << format_series(r.f) << "\n";
    const VerificationReport& rep = r.report;
    std::cout << "report (order " << rep.order << "):\n";
    std::cout << "  equations (2)-(6) certified: "
              << (rep.eq2 && rep.eq3 && rep.eq4 && rep.eq5 && rep.eq6 ? "yes" : "NO")
              << "\n";
    std::cout << "  G independent of y: " << (rep.g_independent_of_y ? "yes" : "NO")
              << "\n";
    std::cout << "  phi^" << rep.phi_power
              << " = identity: " << (rep.phi_power_is_identity ? "yes" : "NO") << "\n";
    std::cout << "  foliation permutation: "
              << (rep.permutation ? perm_text(*rep.permutation) : "absent") << "\n";
    std::cout << "  flatness: " << simple_text(rep.flatness) << "\n";
    if (rep.thm3_identities)
        std::cout << "  normal-form identities: " << (*rep.thm3_identities ? "yes" : "NO")
                  << "\n";
    if (rep.thm3_five_points)
        std::cout << "  five points on the line x+y=t: "
                  << (*rep.thm3_five_points ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for planar 3-webs around a point"};
    app.require_subcommand(1);

    std::string f_expr, g_expr, V_expr, mu_expr, P_expr, model_str;
    std::vector<std::string> phi_exprs;
    int order = 10, max_order = 64;
    bool json_out = false, witnesses = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", order, "validity order")->capture_default_str();
        sub->add_option("--max-order", max_order, "refuse orders above this cap")
            ->capture_default_str();
        sub->add_flag("--json", json_out, "emit JSON instead of text");
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", model_str, "linear model of the cyclic action")
            ->required()
            ->check(CLI::IsMember({"order3", "order6"}));
    };

    auto* norm = app.add_subcommand("normalize", "reduce a web to normal form");
    norm->add_option("--f", f_expr, "web function (expression or @file)")->required();
    norm->add_flag("--witnesses", witnesses, "also report symmetry witnesses");
    add_common(norm);

    auto* cls = app.add_subcommand("classify", "classify the symmetries of a residue g");
    cls->add_option("--g", g_expr, "normal-form residue (expression or @file)")->required();
    add_common(cls);

    auto* circ = app.add_subcommand("circular", "webs with circular symmetry");
    circ->require_subcommand(1);
    auto* solve = circ->add_subcommand("solve", "solve the conjugacy equations");
    solve->add_option("--V", V_expr, "V = y + higher (expression or @file)")->required();
    solve->add_option("--mu", mu_expr, "mu (univariate in t, expression or @file)")
        ->required();
    add_model(solve);
    add_common(solve);
    auto* lem = circ->add_subcommand("lemma1", "synthesize from an invariant perturbation");
    lem->add_option("--P", P_expr, "invariant perturbation (expression or @file)")
        ->required();
    add_model(lem);
    add_common(lem);
    auto* thm3 = circ->add_subcommand("example-thm3", "the distinguished non-flat example");
    add_common(thm3);

    auto* curv = app.add_subcommand("curvature", "Blaschke curvature of a web");
    curv->add_option("--f", f_expr, "web function (expression or @file)")->required();
    add_common(curv);

    auto* ver = app.add_subcommand("verify", "verify a claimed symmetry of a web");
    ver->add_option("--f", f_expr, "web function (expression or @file)")->required();
    ver->add_option("--phi", phi_exprs,
                    "candidate map as two comma-separated component expressions")
        ->required()
        ->delimiter(',');
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep --help at 0; any command-line usage error is a parse error (2).
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (order < 0) throw Error("--order must be >= 0");
        if (order > max_order)
            throw Error("--order " + std::to_string(order) + " exceeds the --max-order cap of " +
                        std::to_string(max_order));
        const int N = order;

        if (*norm) {
            const Series2 fser = eval2(parse_expr(read_arg(f_expr)), N);
            const NormalForm nf = normalize(Web(fser));
            if (json_out) {
                json j{{"X", series_json(nf.X)},
                       {"Y", series_json(nf.Y)},
                       {"Z", series_json(nf.Z)},
                       {"g", series_json(nf.g)}};
                if (witnesses) print_witnesses(nf, true, &j);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "X = " << format_series(nf.X) << "\n";
                std::cout << "Y = " << format_series(nf.Y) << "\n";
                std::cout << "Z = " << format_series(nf.Z) << "\n";
                std::cout << "g = " << format_series(nf.g) << "  (order " << nf.g.order()
                          << ")\n";
                if (witnesses) print_witnesses(nf, true, nullptr);
            }
        } else if (*cls) {
            const Series2 g = eval2(parse_expr(read_arg(g_expr)), N);
            const SimpleClass sc = classify_simple(g);
            const MirrorClass mc = classify_mirror(g);
            const NormalForm nf = trivial_normal_form(g);
            if (json_out) {
                json j{{"simple", simple_json(sc)},
                       {"mirror", json{{"swap", mc.swap}, {"antiswap", mc.antiswap}}}};
                print_witnesses(nf, false, &j);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "simple class: " << simple_text(sc) << "\n";
                std::cout << "mirror: swap=" << (mc.swap ? "yes" : "no")
                          << " antiswap=" << (mc.antiswap ? "yes" : "no") << "\n";
                print_witnesses(nf, false, nullptr);
            }
        } else if (*solve) {
            const LinearModel model =
                model_str == "order3" ? LinearModel::Order3 : LinearModel::Order6;
            const Series2 V = eval2(parse_expr(read_arg(V_expr)), N);
            const Series1 mu = eval1(parse_expr(read_arg(mu_expr)), N);
            print_circular(solve_circular(V, mu, model, N), json_out);
        } else if (*lem) {
            const LinearModel model =
                model_str == "order3" ? LinearModel::Order3 : LinearModel::Order6;
            const Series2 P = eval2(parse_expr(read_arg(P_expr)), N);
            print_circular(lemma1_synthesize(P, model, N), json_out);
        } else if (*thm3) {
            print_circular(theorem3_example(N), json_out);
        } else if (*curv) {
            const Series2 fser = eval2(parse_expr(read_arg(f_expr)), N);
            const Series2 K = blaschke_curvature(Web(fser));
            if (json_out) {
                std::cout << json{{"K", series_json(K)}}.dump(2) << "\n";
            } else {
                std::cout << "K = " << format_series(K) << "  (order " << K.order()
                          << ")\n";
            }
        } else if (*ver) {
            if (phi_exprs.size() != 2)
                throw ParseError(0, "two comma-separated --phi component expressions");
            const Series2 fser = eval2(parse_expr(read_arg(f_expr)), N);
            const Series2 mx = eval2(parse_expr(read_arg(phi_exprs[0])), N);
            const Series2 my = eval2(parse_expr(read_arg(phi_exprs[1])), N);
            const auto p = foliation_permutation(PlaneMap(mx, my), Web(fser));
            if (json_out) {
                json j{{"symmetry", bool(p)}, {"order", N}};
                if (p) j["permutation"] = perm_json(*p);
                std::cout << j.dump(2) << "\n";
            } else if (p) {
                std::cout << "symmetry verified to order " << N << ": " << perm_text(*p)
                          << "\n";
            } else {
                std::cout << "not a symmetry to order " << N << "\n";
            }
            if (!p) return 4;
        }
        return 0;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalCheckFailed& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
