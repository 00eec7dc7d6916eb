#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arcval/catalog.hpp"
#include "arcval/golden.hpp"
#include "arcval/json_io.hpp"
#include "arcval/oracle.hpp"

namespace arcval::cli {

inline std::vector<Integer> parse_int_list(const std::string& text) {
    std::vector<Integer> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        Rational r = parse_rational(item);
        if (denominator(r) != 1) throw InputError("expected an integer list, got '" + text + "'");
        out.push_back(numerator(r));
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw InputError("empty rational list");
    return out;
}

inline std::vector<LaurentPolynomial> parse_poly_list(const Json& j, const std::string& what) {
    io::check_fields(j, {"rank", "polys"}, what);
    Integer rank = io::to_integer(io::require_field(j, "rank", what), what + ".rank");
    std::vector<LaurentPolynomial> out;
    for (const auto& p : io::require_field(j, "polys", what)) {
        LaurentPolynomial f = io::parse_poly(p);
        if (f.rank() != static_cast<std::size_t>(rank))
            throw InputError(what + ": polynomial rank mismatch");
        out.push_back(std::move(f));
    }
    return out;
}

inline Json value_json(const std::optional<Integer>& v) {
    return v ? io::integer_json(*v) : Json("inf");
}

struct Invocation {
    Json result;
    int exit_code = 0;
    bool is_table = false;
    std::string table;
};

namespace detail {

struct Options {
    std::string cone_file, poly_file, den_file, tower_file, arc_file, gens_file;
    std::string conditions_file, probes_file, vals_file;
    std::string a_text, weights_text, vals_text, grid_text = "-2,-1,0,1,2", mode_text = "exact";
    long long kq = 0, m = 0, bound = 0;
    std::uint64_t seed = 0;
    long long samples = 50, trunc = -1, cap = 10000;
    long long depth = 4, weight_max = 4, q_max = 2;
    bool with_oracle = false, prune = false;
};

inline OracleBudget budget_of(const Options& opt) {
    OracleBudget b;
    b.depth = static_cast<std::size_t>(opt.depth);
    b.weight_max = Integer(opt.weight_max);
    b.q_max = Integer(opt.q_max);
    b.grid = parse_rational_list(opt.grid_text);
    return b;
}

inline LatticeVector point_of(const Options& opt) {
    return LatticeVector{parse_int_list(opt.a_text)};
}

inline int default_truncation(const Integer& expected) {
    Integer t = 2 * abs(expected) + 8;
    return static_cast<int>(t);
}

} // namespace detail

/// Parses and runs one command line (without the program name). The report
/// envelope and the exit code are produced here; main() only prints.
inline Invocation run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact divisorial and toric valuations"};
    app.require_subcommand(1);
    detail::Options opt;
    Invocation inv;

    // ---- cone ----------------------------------------------------------
    CLI::App* cone = app.add_subcommand("cone", "lattice cone computations");
    cone->require_subcommand(1);
    {
        CLI::App* c = cone->add_subcommand("dual", "primitive rays of the dual cone");
        c->add_option("--cone", opt.cone_file, "cone JSON file")->required();
        c->callback([&] {
            Cone k = io::parse_cone(io::load_file(opt.cone_file));
            Cone d = dual_cone(k);
            inv.result = io::cone_json(d);
        });
    }
    {
        CLI::App* c = cone->add_subcommand("hilbert", "Hilbert basis of the dual semigroup");
        c->add_option("--cone", opt.cone_file)->required();
        c->add_option("--cap", opt.cap, "maximum basis size");
        c->callback([&] {
            Cone k = io::parse_cone(io::load_file(opt.cone_file));
            inv.result = io::basis_json(hilbert_basis(k, static_cast<std::size_t>(opt.cap)));
        });
    }
    {
        CLI::App* c = cone->add_subcommand("relint", "relative interior membership");
        c->add_option("--cone", opt.cone_file)->required();
        c->add_option("--a", opt.a_text, "lattice point, comma separated")->required();
        c->callback([&] {
            Cone k = io::parse_cone(io::load_file(opt.cone_file));
            bool inside = k.relint_contains(detail::point_of(opt));
            inv.result["relint"] = inside;
            inv.exit_code = inside ? 0 : 1;
        });
    }
    {
        CLI::App* c = cone->add_subcommand("content", "content of a lattice point");
        c->add_option("--a", opt.a_text)->required();
        c->callback([&] {
            inv.result["content"] = io::integer_json(content(detail::point_of(opt)));
        });
    }

    // ---- val -----------------------------------------------------------
    CLI::App* val = app.add_subcommand("val", "toric valuation evaluation");
    val->require_subcommand(1);
    {
        CLI::App* c = val->add_subcommand("eval", "value of val_a on a Laurent polynomial");
        c->add_option("--cone", opt.cone_file)->required();
        c->add_option("--a", opt.a_text)->required();
        c->add_option("--poly", opt.poly_file)->required();
        c->add_option("--den", opt.den_file, "optional denominator: value of poly/den");
        c->callback([&] {
            Cone k = io::parse_cone(io::load_file(opt.cone_file));
            ToricValuation v(k, detail::point_of(opt));
            auto num = val_eval(v, io::parse_poly(io::load_file(opt.poly_file)));
            if (opt.den_file.empty()) {
                inv.result["value"] = value_json(num);
            } else {
                auto den = val_eval(v, io::parse_poly(io::load_file(opt.den_file)));
                if (!den) throw InputError("val eval: zero denominator polynomial");
                inv.result["value"] = num ? value_json(Integer(*num - *den)) : Json("inf");
            }
        });
    }

    // ---- mather --------------------------------------------------------
    {
        CLI::App* c = app.add_subcommand("mather", "Mather discrepancy and codimension");
        c->add_option("--cone", opt.cone_file)->required();
        c->add_option("--a", opt.a_text)->required();
        c->add_flag("--oracle", opt.with_oracle, "cross-check against the brute-force search");
        c->add_option("--bound", opt.bound, "oracle enumeration bound (default: the optimum)");
        c->callback([&] {
            Cone k = io::parse_cone(io::load_file(opt.cone_file));
            LatticeVector a = detail::point_of(opt);
            MatherReport rep = mather_discrepancy(k, a, static_cast<std::size_t>(opt.cap));
            inv.result = io::mather_json(rep);
            if (opt.with_oracle) {
                Integer bound = (opt.bound > 0) ? Integer(opt.bound) : rep.codim;
                MatherReport oracle = mather_bruteforce_oracle(k, a, bound);
                inv.result["oracle"] = io::mather_json(oracle);
                bool agree = oracle.codim == rep.codim && oracle.q == rep.q &&
                             oracle.k_mather == rep.k_mather;
                inv.result["oracle_agrees"] = agree;
                if (!agree) inv.exit_code = 1;
            }
        });
    }

    // ---- criterion -------------------------------------------------------
    CLI::App* criterion = app.add_subcommand("criterion", "monomial valuation criteria");
    criterion->require_subcommand(1);
    {
        CLI::App* c = criterion->add_subcommand("smooth", "criterion on affine n-space");
        c->add_option("--vals", opt.vals_text, "values v(x_i), comma separated")->required();
        c->add_option("--kq", opt.kq, "k_v + q")->required();
        c->add_option("--weights", opt.weights_text, "candidate weights a_i")->required();
        c->callback([&] {
            CriterionReport rep = criterion_smooth(parse_int_list(opt.vals_text), opt.kq,
                                                   parse_int_list(opt.weights_text));
            inv.result = io::criterion_json(rep);
            inv.exit_code = rep.concluded ? 0 : 1;
        });
    }
    {
        CLI::App* c = criterion->add_subcommand("toric", "criterion on an affine toric variety");
        c->add_option("--cone", opt.cone_file)->required();
        c->add_option("--a", opt.a_text)->required();
        c->add_option("--vals", opt.vals_file, "JSON: {\"vals\":[{\"u\":[..],\"v\":n},..]}")
            ->required();
        c->add_option("--kq", opt.kq)->required();
        c->callback([&] {
            Cone k = io::parse_cone(io::load_file(opt.cone_file));
            LatticeVector a = detail::point_of(opt);
            Json vj = io::load_file(opt.vals_file);
            io::check_fields(vj, {"vals"}, "vals");
            std::vector<std::pair<DualVector, Integer>> vals;
            for (const auto& item : io::require_field(vj, "vals", "vals")) {
                io::check_fields(item, {"u", "v"}, "vals entry");
                vals.emplace_back(
                    DualVector{io::to_integer_vector(io::require_field(item, "u", "vals"), "u")},
                    io::to_integer(io::require_field(item, "v", "vals"), "v"));
            }
            CriterionReport rep =
                criterion_toric(k, hilbert_basis(k, static_cast<std::size_t>(opt.cap)), vals,
                                opt.kq, a);
            inv.result = io::criterion_json(rep);
            inv.exit_code = rep.concluded ? 0 : 1;
        });
    }

    // ---- tower -----------------------------------------------------------
    CLI::App* tower = app.add_subcommand("tower", "blow-up towers over affine space");
    tower->require_subcommand(1);
    {
        CLI::App* c = tower->add_subcommand("eval", "value of q*val_E on a polynomial");
        c->add_option("--tower", opt.tower_file)->required();
        c->add_option("--poly", opt.poly_file)->required();
        c->add_option("--den", opt.den_file);
        c->callback([&] {
            DivisorialValuation v = io::parse_tower(io::load_file(opt.tower_file));
            auto num = val_E(v, io::parse_poly(io::load_file(opt.poly_file)));
            if (opt.den_file.empty()) {
                inv.result["value"] = value_json(num);
            } else {
                auto den = val_E(v, io::parse_poly(io::load_file(opt.den_file)));
                if (!den) throw InputError("tower eval: zero denominator polynomial");
                inv.result["value"] = num ? value_json(Integer(*num - *den)) : Json("inf");
            }
        });
    }
    {
        CLI::App* c = tower->add_subcommand("canonical", "relative canonical order of the tower");
        c->add_option("--tower", opt.tower_file)->required();
        c->callback([&] {
            DivisorialValuation v = io::parse_tower(io::load_file(opt.tower_file));
            inv.result["order"] = io::integer_json(relative_canonical_order(v.tower));
        });
    }
    {
        CLI::App* c = tower->add_subcommand("conditions", "generating conditions of the valuation");
        c->add_option("--tower", opt.tower_file)->required();
        c->add_flag("--prune", opt.prune, "greedily drop conditions the oracle confirms redundant");
        c->add_option("--depth", opt.depth, "oracle depth for pruning");
        c->add_option("--weights", opt.weight_max, "oracle monomial weight bound");
        c->add_option("--qmax", opt.q_max, "oracle multiplicity bound");
        c->add_option("--grid", opt.grid_text, "oracle center grid");
        c->callback([&] {
            DivisorialValuation v = io::parse_tower(io::load_file(opt.tower_file));
            GeneratingConditions conds = extract_generating_conditions(v);
            inv.result["raw"] = io::conditions_json(conds, v.tower.rank());
            if (opt.prune) {
                CandidateFamily family(v.tower.rank(), detail::budget_of(opt));
                GeneratingConditions pruned = prune_conditions(conds, v, family);
                inv.result["pruned"] = io::conditions_json(pruned, v.tower.rank());
            }
        });
    }
    {
        CLI::App* c = tower->add_subcommand("oracle", "determination check for a condition set");
        c->add_option("--conditions", opt.conditions_file)->required();
        c->add_option("--tower", opt.tower_file)->required();
        c->add_option("--probes", opt.probes_file, "JSON: {\"rank\":n,\"polys\":[..]}");
        c->add_option("--depth", opt.depth)->required();
        c->add_option("--weights", opt.weight_max);
        c->add_option("--qmax", opt.q_max);
        c->add_option("--grid", opt.grid_text);
        c->callback([&] {
            DivisorialValuation v = io::parse_tower(io::load_file(opt.tower_file));
            GeneratingConditions conds =
                io::parse_conditions(io::load_file(opt.conditions_file), v.tower.rank());
            std::vector<LaurentPolynomial> probes;
            if (!opt.probes_file.empty()) {
                probes = parse_poly_list(io::load_file(opt.probes_file), "probes");
            } else {
                for (std::size_t i = 0; i < v.tower.rank(); ++i)
                    probes.push_back(LaurentPolynomial::variable(v.tower.rank(), i));
                for (const auto& cond : conds) probes.push_back(cond.poly);
            }
            CandidateFamily family(v.tower.rank(), detail::budget_of(opt));
            OracleReport rep = determination_oracle(conds, v, probes, family);
            inv.result = io::oracle_json(rep);
            inv.exit_code = rep.ok() ? 0 : 1;
        });
    }

    // ---- arc -------------------------------------------------------------
    CLI::App* arc = app.add_subcommand("arc", "truncated arcs and contact loci");
    arc->require_subcommand(1);
    {
        CLI::App* c = arc->add_subcommand("sample", "sample an arc in the divisorial set of val_a");
        c->add_option("--cone", opt.cone_file)->required();
        c->add_option("--a", opt.a_text)->required();
        c->add_option("--seed", opt.seed)->required();
        c->add_option("--trunc", opt.trunc, "truncation order (default 2*scale+8)");
        c->callback([&] {
            Cone k = io::parse_cone(io::load_file(opt.cone_file));
            LatticeVector a = detail::point_of(opt);
            int T = static_cast<int>(opt.trunc);
            if (opt.trunc < 0) {
                Integer scale = 0;
                for (const auto& u : hilbert_basis(k).elements) {
                    Integer p = abs(pairing(u, a));
                    if (p > scale) scale = p;
                }
                T = detail::default_truncation(scale);
            }
            inv.result = io::arc_json(sample_arc_in_W(k, a, T, opt.seed));
        });
    }
    {
        CLI::App* c = arc->add_subcommand("ord", "t-order of a polynomial along an arc");
        c->add_option("--arc", opt.arc_file)->required();
        c->add_option("--poly", opt.poly_file)->required();
        c->callback([&] {
            TruncatedArc a = io::parse_arc(io::load_file(opt.arc_file));
            auto b = ord_arc(a, io::parse_poly(io::load_file(opt.poly_file)));
            if (!b) {
                inv.result["order"] = "inf";
            } else {
                inv.result["order"] = b->is_known() ? io::integer_json(b->value)
                                                    : Json(">=" + b->value.str());
                inv.result["known"] = b->is_known();
            }
        });
    }
    {
        CLI::App* c = arc->add_subcommand("contact", "contact locus membership");
        c->add_option("--arc", opt.arc_file)->required();
        c->add_option("--gens", opt.gens_file, "ideal generators: {\"rank\":n,\"polys\":[..]}")
            ->required();
        c->add_option("--m", opt.m)->required();
        c->add_option("--mode", opt.mode_text, "exact | at-least");
        c->callback([&] {
            TruncatedArc a = io::parse_arc(io::load_file(opt.arc_file));
            auto gens = parse_poly_list(io::load_file(opt.gens_file), "gens");
            ContactMode mode;
            if (opt.mode_text == "exact") mode = ContactMode::exact;
            else if (opt.mode_text == "at-least") mode = ContactMode::at_least;
            else throw InputError("contact: mode must be 'exact' or 'at-least'");
            Tri t = contact_membership(a, gens, opt.m, mode);
            inv.result["member"] =
                t == Tri::yes ? Json(true) : (t == Tri::no ? Json(false) : Json("unknown"));
            inv.exit_code = (t == Tri::yes) ? 0 : 1;
        });
    }
    {
        CLI::App* c = arc->add_subcommand("empirical-val", "minimum order over sampled arcs");
        c->add_option("--cone", opt.cone_file)->required();
        c->add_option("--a", opt.a_text)->required();
        c->add_option("--poly", opt.poly_file)->required();
        c->add_option("--seed", opt.seed)->required();
        c->add_option("--samples", opt.samples);
        c->add_option("--trunc", opt.trunc);
        c->callback([&] {
            Cone k = io::parse_cone(io::load_file(opt.cone_file));
            LatticeVector a = detail::point_of(opt);
            LaurentPolynomial f = io::parse_poly(io::load_file(opt.poly_file));
            int T = static_cast<int>(opt.trunc);
            if (opt.trunc < 0) {
                auto expected = val_eval(ToricValuation(k, a), f);
                if (!expected) throw InputError("empirical-val: zero polynomial");
                T = detail::default_truncation(*expected);
            }
            Integer got = empirical_val(k, a, f, static_cast<std::size_t>(opt.samples), T,
                                        opt.seed);
            inv.result["value"] = io::integer_json(got);
        });
    }
    {
        CLI::App* c = arc->add_subcommand("jet-codim", "codimension of a monomial jet cylinder");
        c->add_option("--weights", opt.weights_text)->required();
        c->add_option("--m", opt.m)->required();
        c->callback([&] {
            Integer codim = jet_codim_monomial(parse_int_list(opt.weights_text), opt.m);
            inv.result["codim"] = io::integer_json(codim);
        });
    }

    // ---- golden table ------------------------------------------------------
    {
        CLI::App* c = app.add_subcommand("paper-examples",
                                         "reproduce every published example value");
        c->callback([&] {
            auto rows = run_golden_suite();
            std::ostringstream out;
            std::size_t failures = 0;
            for (const auto& row : rows) {
                out << (row.pass ? "PASS" : "FAIL") << "  " << row.id << ": expected "
                    << row.expected << ", got " << row.actual << "\n";
                if (!row.pass) ++failures;
            }
            out << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures))
                << " (" << rows.size() << " checks)\n";
            inv.is_table = true;
            inv.table = out.str();
            inv.exit_code = failures == 0 ? 0 : 1;
        });
    }

    // CLI11 wants mutable argv-style input
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw InputError(std::string("command line: ") + e.what());
    }
    return inv;
}

/// Full driver: runs the command, wraps the result in the report envelope,
/// prints it, and returns the process exit code.
inline int run_main(const std::vector<std::string>& args, std::ostream& out) {
    std::string echo = "arcval";
    for (const auto& a : args) echo += " " + a;
    Json report;
    int code = 0;
    try {
        Invocation inv = run_command(args);
        if (inv.is_table) {
            out << inv.table;
            return inv.exit_code;
        }
        report["command"] = echo;
        report["result"] = inv.result;
        report["provenance"] = "";
        report["exit_code"] = inv.exit_code;
        code = inv.exit_code;
    } catch (const Error& e) {
        report["command"] = echo;
        report["result"] = Json{{"error", e.what()}};
        report["provenance"] = "";
        report["exit_code"] = e.exit_code();
        code = e.exit_code();
    } catch (const std::exception& e) {
        report["command"] = echo;
        report["result"] = Json{{"error", std::string("internal: ") + e.what()}};
        report["provenance"] = "";
        report["exit_code"] = 4;
        code = 4;
    }
    out << io::dump_canonical(report);
    return code;
}

} // namespace arcval::cli
