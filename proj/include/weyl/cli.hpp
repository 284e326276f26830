#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weyl/centralizer.hpp"
#include "weyl/derivation.hpp"
#include "weyl/graded.hpp"
#include "weyl/io.hpp"
#include "weyl/leading.hpp"
#include "weyl/oracle.hpp"

namespace weyl::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    negative_result = 1,  // a check returned false or a solver found nothing
    usage_error = 2,
    internal_inconsistency = 3,
};

namespace detail {

using nlohmann::json;

inline std::string weight_string(Weight w) { return "(" + std::to_string(w.a) + ", " + std::to_string(w.b) + ")"; }

inline json weight_json(Weight w) { return json::array({w.a, w.b}); }

inline std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

/// Reads a polynomial in one generator ('X' or 'Y') as a univariate polynomial.
inline Polynomial univariate(const std::string& text, char var) {
    const WeylElement e = parse(text);
    std::vector<Rational> c(static_cast<std::size_t>(std::max(e.max_x_exponent(), e.max_y_exponent())) + 1);
    for (const auto& [m, coeff] : e.terms()) {
        const int other = var == 'X' ? m.j : m.i;
        if (other != 0) {
            throw MalformedInput("'" + text + "' is not a polynomial in " + std::string(1, var) + " alone");
        }
        c[static_cast<std::size_t>(var == 'X' ? m.i : m.j)] = coeff;
    }
    return Polynomial(std::move(c));
}

}  // namespace detail

/// "addY:p(Y);addX:q(X);fourier". addY adds p(Y) to X, addX adds q(X) to Y.
inline AutomorphismScript parse_script(const std::string& text) {
    AutomorphismScript script;
    std::stringstream in(text);
    std::string step;
    while (std::getline(in, step, ';')) {
        step = detail::trim(step);
        if (step.empty()) continue;
        if (step == "fourier") {
            script.push_back({AutomorphismKind::fourier, {}});
            continue;
        }
        const auto colon = step.find(':');
        const std::string head = detail::trim(step.substr(0, colon));
        if (colon == std::string::npos || (head != "addY" && head != "addX")) {
            throw MalformedInput("unknown script step '" + step + "'");
        }
        const std::string body = step.substr(colon + 1);
        if (head == "addY") {
            script.push_back({AutomorphismKind::add_poly_of_Y_to_X, detail::univariate(body, 'Y')});
        } else {
            script.push_back({AutomorphismKind::add_poly_of_X_to_Y, detail::univariate(body, 'X')});
        }
    }
    return script;
}

inline nlohmann::json basis_json(const CentralizerBasis& b) {
    using nlohmann::json;
    json r = json::array();
    for (const auto& [l, e] : b.R) {
        r.push_back({{"l", l}, {"degree", to_fraction_string(b.degrees.at(l))}, {"element", to_json(e)},
                     {"text", to_string(e)}});
    }
    json s = json::array();
    for (std::size_t k = 0; k < b.S_index.size(); ++k) {
        s.push_back(b.S_index[k] ? json(*b.S_index[k]) : json(nullptr));
    }
    return {{"P", to_json(b.P)},
            {"bound_D", b.bound_D},
            {"side", b.side == Side::plus ? "plus" : "bar"},
            {"direction", detail::weight_json(b.direction)},
            {"L", b.L},
            {"d", b.d},
            {"n0", b.n0},
            {"R", r},
            {"S", s},
            {"truncated", b.truncated}};
}

inline void print_basis(std::ostream& out, const CentralizerBasis& b) {
    out << "P: " << to_string(b.P) << "\n";
    out << "bound_D: " << b.bound_D << "\n";
    out << "side: " << (b.side == Side::plus ? "plus" : "bar") << "\n";
    out << "direction: " << detail::weight_string(b.direction) << "\n";
    out << "L:";
    for (int l : b.L) out << " " << l;
    out << "\n";
    out << "d: " << b.d << "\n";
    out << "n0: " << b.n0 << "\n";
    for (const auto& [l, e] : b.R) {
        out << "R_" << l << " [deg " << to_display_string(b.degrees.at(l)) << "]: " << to_string(e) << "\n";
    }
    for (std::size_t k = 0; k < b.S_index.size(); ++k) {
        out << "S_" << k << ": ";
        if (b.S_index[k]) {
            out << "R_" << *b.S_index[k] << "\n";
        } else {
            out << "unreached\n";
        }
    }
    out << "truncated: " << (b.truncated ? "true" : "false") << "\n";
}

/// Runs one CLI invocation. args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using nlohmann::json;
    CLI::App app{"Exact arithmetic and centralizers in the first Weyl algebra", "weyl"};
    app.require_subcommand(1);

    std::string a_text, b_text, p_text, q_text, r_text, script_text;
    int n = 0, j = 0, bound = 0;
    bool as_json = false, mul_check = false;
    std::function<int()> action;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Emit JSON"); };

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of EXPR");
    normalize->add_option("EXPR", a_text)->required();
    add_json(normalize);
    normalize->callback([&] {
        action = [&] {
            const WeylElement a = parse(a_text);
            if (as_json) {
                out << to_json(a).dump() << "\n";
            } else {
                out << to_string(a) << "\n";
            }
            return ok;
        };
    });

    auto binary = [&](const char* name, const char* help, auto op) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("A", a_text)->required();
        sub->add_option("B", b_text)->required();
        add_json(sub);
        sub->callback([&, op] {
            action = [&, op] {
                const WeylElement c = op(parse(a_text), parse(b_text));
                out << (as_json ? to_json(c).dump() : to_string(c)) << "\n";
                return ok;
            };
        });
    };
    binary("mul", "Product A*B", [](const WeylElement& x, const WeylElement& y) { return x * y; });
    binary("comm", "Commutator [A, B]", [](const WeylElement& x, const WeylElement& y) { return commutator(x, y); });

    auto* pow_cmd = app.add_subcommand("pow", "A^N");
    pow_cmd->add_option("A", a_text)->required();
    pow_cmd->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
    add_json(pow_cmd);
    pow_cmd->callback([&] {
        action = [&] {
            const WeylElement c = pow(parse(a_text), n);
            out << (as_json ? to_json(c).dump() : to_string(c)) << "\n";
            return ok;
        };
    });

    auto* leading = app.add_subcommand("leading", "Leading-form data of A");
    leading->add_option("A", a_text)->required();
    add_json(leading);
    leading->callback([&] {
        action = [&] {
            const LeadingData d = leading_data(parse(a_text));
            if (as_json) {
                out << json{{"v", d.v},
                            {"vbar", d.vbar},
                            {"w", detail::weight_json(d.w)},
                            {"wbar", detail::weight_json(d.wbar)},
                            {"ell", to_json(d.ell)},
                            {"ellbar", to_json(d.ellbar)},
                            {"ell_t", to_json(d.ell_t)},
                            {"ell_c", to_fraction_string(d.ell_c)},
                            {"monic", d.monic}}
                           .dump()
                    << "\n";
            } else {
                out << "v: " << d.v << "\n"
                    << "vbar: " << d.vbar << "\n"
                    << "w: " << detail::weight_string(d.w) << "\n"
                    << "wbar: " << detail::weight_string(d.wbar) << "\n"
                    << "ell: " << to_string(d.ell) << "\n"
                    << "ellbar: " << to_string(d.ellbar) << "\n"
                    << "ell_t: " << to_string(d.ell_t) << "\n"
                    << "ell_c: " << to_display_string(d.ell_c) << "\n"
                    << "monic: " << (d.monic ? "true" : "false") << "\n";
            }
            return ok;
        };
    });

    auto* grade = app.add_subcommand("grade", "Homogeneous components of A");
    grade->add_option("A", a_text)->required();
    add_json(grade);
    grade->callback([&] {
        action = [&] {
            json arr = json::array();
            for (const auto& [deg, comp] : homogeneous_components(parse(a_text))) {
                const GradedForm g = to_xy_form(comp);
                if (as_json) {
                    std::vector<std::string> coeffs;
                    for (const auto& c : g.f.coefficients()) coeffs.push_back(to_fraction_string(c));
                    arr.push_back({{"j", deg}, {"element", to_json(comp)}, {"f", coeffs}, {"form", to_string(g)}});
                } else {
                    out << "W_" << deg << ": " << to_string(comp) << " = " << to_string(g) << "\n";
                }
            }
            if (as_json) out << arr.dump() << "\n";
            return ok;
        };
    });

    auto* homog = app.add_subcommand("homog-centralizer", "Z(P) in W_J for homogeneous P");
    homog->add_option("P", p_text)->required();
    homog->add_option("--j", j, "Homogeneous degree J")->required();
    add_json(homog);
    homog->callback([&] {
        action = [&] {
            const auto res = homog_centralizer_component(parse(p_text), j);
            const char* kind = res.kind == HomogComponentResult::Kind::empty  ? "empty"
                               : res.kind == HomogComponentResult::Kind::line ? "line"
                                                                              : "all_of_k_XY";
            if (as_json) {
                json o{{"kind", kind}};
                if (res.generator) {
                    o["generator"] = {{"form", to_string(*res.generator)},
                                      {"element", to_json(from_xy_form(*res.generator))}};
                }
                out << o.dump() << "\n";
            } else if (res.generator) {
                out << kind << ": " << to_string(*res.generator) << " = " << to_string(from_xy_form(*res.generator))
                    << "\n";
            } else {
                out << kind << "\n";
            }
            return res.kind == HomogComponentResult::Kind::empty ? negative_result : ok;
        };
    });

    auto* central = app.add_subcommand("centralizer", "Basis of Z(P) up to a total-degree bound");
    central->add_option("P", p_text)->required();
    central->add_option("--max-total-degree", bound, "Total-degree bound D")->required();
    add_json(central);
    central->callback([&] {
        action = [&] {
            const auto b = centralizer_basis(parse(p_text), bound);
            if (as_json) {
                out << basis_json(b).dump() << "\n";
            } else {
                print_basis(out, b);
            }
            return ok;
        };
    });

    auto* decomp = app.add_subcommand("decompose", "Write R as sum T_r(S_0) S_r in Z(P)");
    decomp->add_option("R", r_text)->required();
    decomp->add_option("--basis-of", p_text, "P whose centralizer is used")->required();
    decomp->add_option("--max-total-degree", bound, "Total-degree bound D")->required();
    add_json(decomp);
    decomp->callback([&] {
        action = [&] {
            const auto b = centralizer_basis(parse(p_text), bound);
            const auto t = decompose(parse(r_text), b);
            if (as_json) {
                json arr = json::array();
                for (const auto& poly : t) {
                    std::vector<std::string> coeffs;
                    for (const auto& c : poly.coefficients()) coeffs.push_back(to_fraction_string(c));
                    arr.push_back(coeffs);
                }
                out << json{{"T", arr}}.dump() << "\n";
            } else {
                for (std::size_t k = 0; k < t.size(); ++k) out << "T_" << k << "(Z) = " << t[k].to_string() << "\n";
            }
            return ok;
        };
    });

    auto* dix = app.add_subcommand("check-dixmier", "Verify Z(P) = k[P] for [Q, P] = 1");
    dix->add_option("P", p_text)->required();
    dix->add_option("Q", q_text)->required();
    dix->add_option("--max-total-degree", bound, "Total-degree bound D")->required();
    add_json(dix);
    dix->callback([&] {
        action = [&] {
            const WeylElement p = parse(p_text), q = parse(q_text);
            if (!is_dixmier_pair(p, q)) {
                if (as_json) {
                    out << json{{"dixmier_pair", false}}.dump() << "\n";
                } else {
                    out << "dixmier_pair: false\n";
                }
                return negative_result;
            }
            const DixmierPair pair = make_dixmier_pair(p, q);
            const auto verdict = main_theorem_check(pair, bound);
            const auto rep = derivation_report(pair, verdict.basis);
            if (as_json) {
                json drops = json::object();
                for (const auto& [r, d] : rep.drops) {
                    drops[std::to_string(r)] = {{"g", to_fraction_string(d.g)}, {"w", to_fraction_string(d.w)}};
                }
                out << json{{"dixmier_pair", true},
                            {"main_theorem", verdict.holds},
                            {"centralizer_dim", verdict.centralizer_dim},
                            {"powers_dim", verdict.powers_dim},
                            {"J", rep.J},
                            {"drops", drops},
                            {"constant_drop", rep.constant_drop ? json(to_fraction_string(*rep.constant_drop))
                                                                : json(nullptr)},
                            {"kernel_dim", rep.kernel_dim},
                            {"truncation_degenerate", rep.truncation_degenerate}}
                           .dump()
                    << "\n";
            } else {
                out << "dixmier_pair: true\n";
                out << "main_theorem: " << (verdict.holds ? "true" : "false") << "\n";
                out << "centralizer_dim: " << verdict.centralizer_dim << "\n";
                out << "powers_dim: " << verdict.powers_dim << "\n";
                out << "J:";
                for (int r : rep.J) out << " " << r;
                out << "\n";
                for (const auto& [r, d] : rep.drops) {
                    out << "S_" << r << ": deg " << to_display_string(d.g) << ", deg ad_Q " << to_display_string(d.w)
                        << "\n";
                }
                out << "drop: " << (rep.constant_drop ? to_display_string(*rep.constant_drop) : "none") << "\n";
                out << "kernel_dim: " << rep.kernel_dim << "\n";
            }
            return verdict.holds && rep.kernel_dim == 1 ? ok : negative_result;
        };
    });

    auto* gen = app.add_subcommand("gen-pair", "Image of (X, Y) under an automorphism script");
    gen->add_option("--script", script_text, "e.g. \"addY:Y^2;addX:X^2;fourier\"")->required();
    add_json(gen);
    gen->callback([&] {
        action = [&] {
            const auto pair = gen_dixmier_pair(parse_script(script_text));
            if (as_json) {
                out << json{{"P", to_json(pair.P)}, {"Q", to_json(pair.Q)}}.dump() << "\n";
            } else {
                out << "P: " << to_string(pair.P) << "\n" << "Q: " << to_string(pair.Q) << "\n";
            }
            return ok;
        };
    });

    auto* orc = app.add_subcommand("oracle-check", "Compare A and B as differential operators");
    orc->add_option("A", a_text)->required();
    orc->add_option("B", b_text)->required();
    orc->add_flag("--mul", mul_check, "Check the product A*B against composition instead");
    orc->callback([&] {
        action = [&] {
            const WeylElement a = parse(a_text), b = parse(b_text);
            const bool res = mul_check ? oracle::oracle_mul_check(a, b) : oracle::oracle_equal(a, b);
            out << (res ? "true" : "false") << "\n";
            return res ? ok : negative_result;
        };
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        return action();
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return internal_inconsistency;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

}  // namespace weyl::cli
