#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ca/cohomology.hpp"
#include "ca/io.hpp"
#include "ca/parse.hpp"
#include "ca/rees.hpp"
#include "ca/resolution.hpp"
#include "ca/verify.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ca::Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Globals {
    std::string field, order, cache_dir, window;
    std::uint64_t seed = 42;
};

// File headers carry field and order; the global flags override them, with
// the generators reprinted and reparsed into the new context.
ca::IdealPresentation load_ideal(const std::string& path, const Globals& g) {
    ca::IdealPresentation I = ca::parse_ideal(slurp(path));
    if (g.field.empty() && g.order.empty()) return I;
    ca::IdealPresentation J;
    J.nvars = I.nvars;
    J.names = I.names;
    J.field = g.field.empty() ? I.field : ca::parse_field_spec(g.field);
    J.order = g.order.empty() ? I.order : ca::parse_order_spec(g.order);
    for (auto& p : I.gens)
        J.gens.push_back(ca::parse_polynomial(p.str(I.names), I.names, J.field, J.order));
    return J;
}

std::pair<int, int> parse_window(const std::string& s, int def_lo, int def_hi) {
    if (s.empty()) return {def_lo, def_hi};
    auto c = s.find(':', 1);
    if (c == std::string::npos) throw ca::Error("window must be written lo:hi");
    try {
        return {std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
    } catch (const std::exception&) {
        throw ca::Error("window must be written lo:hi with integer bounds");
    }
}

json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json opt_json(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

json profile_json(const ca::CohomologyProfile& P) {
    json rows = json::array();
    for (auto& [i, row] : P.rows) {
        json dims = json::array();
        for (auto& [a, d] : row.support) dims.push_back(json::array({a, d}));
        std::string tail = row.tail == ca::TailState::None              ? "none"
                           : row.tail == ca::TailState::AllBelowNonzero ? "all-below-nonzero"
                                                                        : "unknown-below";
        rows.push_back(json{{"i", i}, {"top", opt_json(row.top)}, {"dims", dims}, {"tail", tail}});
    }
    auto inv = ca::profile_invariants(P);
    json out{{"n", P.n},
             {"window", json::array({P.lo, P.hi})},
             {"rows", rows},
             {"a_star", opt_json(inv.a_star_total)},
             {"reg", opt_json(inv.reg)}};
    if (P.asserted) out["asserted"] = true;
    return out;
}

json report_json(const ca::TheoremReport& r) {
    std::string verdict = r.verdict == ca::Verdict::Holds   ? "holds"
                          : r.verdict == ca::Verdict::Fails ? "fails"
                                                            : "not-applicable";
    json out{{"id", r.id},       {"inputs", r.inputs},      {"verdict", verdict},
             {"left", opt_json(r.left)}, {"right", opt_json(r.right)}};
    if (!r.witness.empty()) out["witness"] = r.witness;
    if (!r.reason.empty()) out["reason"] = r.reason;
    if (!r.note.empty()) out["note"] = r.note;
    if (r.asserted_inputs) out["asserted_inputs"] = true;
    if (r.probabilistic) out["randomized"] = true;
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for blowup algebras of graded quotient rings"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--field", g.field, "field spec: q or fp:P (overrides file header)");
    app.add_option("--order", g.order, "order spec: revlex, lex, elim:K, weighted:w1,w2,... (overrides file header)");
    app.add_option("--seed", g.seed, "seed for randomized subcommands");
    app.add_option("--cache-dir", g.cache_dir, "directory for cached bases and resolutions");
    app.add_option("--window", g.window, "degree window lo:hi for cohomology output");

    int rc = 0;

    auto* cmd_gb = app.add_subcommand("groebner", "reduced basis of an ideal file");
    std::string gb_file;
    cmd_gb->add_option("file", gb_file, "ideal file")->required();
    cmd_gb->callback([&] {
        ca::IdealPresentation I = load_ideal(gb_file, g);
        ca::ResultCache cache(g.cache_dir);
        ca::GroebnerBasis gb = ca::cached_groebner(cache, I);
        json basis = json::array();
        for (auto& p : gb.elements) basis.push_back(p.str(I.names));
        emit(json{{"field", ca::field_spec(I.field)},
                  {"order", ca::order_spec(I.order)},
                  {"vars", I.names},
                  {"basis", basis},
                  {"size", basis.size()}});
    });

    auto* cmd_rees = app.add_subcommand("rees", "presentation ideal of a blowup algebra");
    std::string rees_file, rees_mode = "maximal";
    std::vector<std::string> rees_center;
    cmd_rees->add_option("file", rees_file, "ideal file for J")->required();
    cmd_rees->add_option("--mode", rees_mode, "maximal (blow up the irrelevant ideal) or ideal (blow up a given center)")
        ->check(CLI::IsMember({"maximal", "ideal"}));
    cmd_rees->add_option("--center", rees_center, "generator of the center, repeatable (ideal mode)");
    cmd_rees->callback([&] {
        ca::IdealPresentation J = load_ideal(rees_file, g);
        ca::ResultCache cache(g.cache_dir);
        if (rees_mode == "maximal") {
            ca::GroebnerBasis gb = ca::cached_groebner(cache, J);
            ca::ReesPresentation P = ca::rees_generators(gb.elements, J.nvars);
            json gens = json::array();
            for (auto& p : P.generators.gens) gens.push_back(p.str(P.generators.names));
            ca::ReesTheoremReport thm = ca::verify_groebner_theorem(gb.elements, J.nvars);
            ca::GroebnerBasis lifted;
            lifted.order = P.generators.order;
            lifted.elements = P.generators.gens;
            ca::ReducednessReport red = ca::reducedness_check(lifted);
            json redj{{"reduced", red.reduced}};
            if (red.witness)
                redj["witness"] = json::array({red.witness->first.str(P.generators.names),
                                               red.witness->second.str(P.generators.names)});
            emit(json{{"mode", "maximal"},
                      {"n", P.n},
                      {"s", P.s},
                      {"vars", P.generators.names},
                      {"generators", gens},
                      {"size", gens.size()},
                      {"basis_lifts", json{{"base_is_groebner", thm.base_is_groebner},
                                           {"lifted_is_groebner", thm.lifted_is_groebner},
                                           {"hilbert_identity", thm.hilbert_identity},
                                           {"hilbert_bound", thm.hilbert_bound}}},
                      {"reducedness", redj}});
        } else {
            if (rees_center.empty()) throw ca::Error("ideal mode needs at least one --center form");
            std::vector<ca::Polynomial> forms;
            for (auto& s : rees_center)
                forms.push_back(ca::parse_polynomial(s, J.names, J.field, J.order));
            std::ostringstream params;
            for (auto& f : forms) params << f.str(J.names) << '\n';
            std::string key = ca::cache_key(J, "rees-ideal", params.str());
            ca::IdealPresentation P;
            bool loaded = false;
            if (auto hit = cache.load(key)) {
                try {
                    P = ca::parse_ideal(*hit);
                    loaded = true;
                } catch (const ca::Error&) {
                }
            }
            if (!loaded) {
                P = ca::rees_ideal_elimination(J, forms).generators;
                cache.store(key, ca::print_ideal(P));
            }
            json gens = json::array();
            for (auto& p : P.gens) gens.push_back(p.str(P.names));
            emit(json{{"mode", "ideal"},
                      {"n", J.nvars},
                      {"s", forms.size()},
                      {"vars", P.names},
                      {"generators", gens},
                      {"size", gens.size()}});
        }
    });

    auto* cmd_betti = app.add_subcommand("betti", "graded Betti numbers of the quotient by an ideal file");
    std::string betti_file;
    cmd_betti->add_option("file", betti_file, "ideal file")->required();
    cmd_betti->callback([&] {
        ca::IdealPresentation I = load_ideal(betti_file, g);
        ca::ResultCache cache(g.cache_dir);
        ca::Resolution R = ca::cached_resolution(cache, I);
        ca::BettiTable T = ca::BettiTable::from_resolution(R, I.nvars);
        ca::BettiInvariants inv = ca::betti_invariants(T);
        json table = json::array();
        for (auto& [ij, count] : T.entries)
            table.push_back(json::array({ij.first, ij.second, count}));
        json b = json::array(), bstar = json::array(), jreg = json::array();
        for (auto& v : inv.b) b.push_back(opt_json(v));
        for (auto& v : inv.b_star) bstar.push_back(opt_json(v));
        for (auto& v : inv.j_reg) jreg.push_back(opt_json(v));
        emit(json{{"n", I.nvars},
                  {"betti", table},
                  {"b", b},
                  {"b_star", bstar},
                  {"j_reg", jreg},
                  {"reg", inv.reg},
                  {"pd", inv.pd},
                  {"depth", inv.depth},
                  {"extremal", inv.extremal}});
    });

    auto* cmd_coh = app.add_subcommand("cohomology", "graded local cohomology of the quotient by an ideal file");
    std::string coh_file;
    cmd_coh->add_option("file", coh_file, "ideal file")->required();
    cmd_coh->callback([&] {
        ca::IdealPresentation I = load_ideal(coh_file, g);
        auto [lo, hi] = parse_window(g.window, -(I.nvars + 6), 4);
        emit(profile_json(ca::cohomology_profile(I, lo, hi)));
    });

    auto* cmd_hoch = app.add_subcommand("hochster", "face ring local cohomology from a facet file");
    std::string hoch_file;
    cmd_hoch->add_option("file", hoch_file, "facet file")->required();
    cmd_hoch->callback([&] {
        ca::ComplexFileData data = ca::parse_complex(slurp(hoch_file));
        ca::SimplicialComplex K = ca::SimplicialComplex::from_facets(data.vertices, data.facets);
        ca::Field f = g.field.empty() ? ca::Field::rationals() : ca::parse_field_spec(g.field);
        auto [lo, hi] = parse_window(g.window, -(data.vertices + 4), 2);
        emit(profile_json(ca::hochster_profile(K, f, lo, hi)));
    });

    auto* cmd_verify = app.add_subcommand("verify", "run a statement suite and report per-claim verdicts");
    std::string v_file, v_suite, v_ini_order = "revlex";
    std::vector<std::string> v_center;
    int v_trials = 10, v_shift = 1;
    cmd_verify->add_option("file", v_file, "ideal file")->required();
    cmd_verify->add_option("--suite", v_suite, "section3, maxideal, ini, gin, or rs")
        ->required()
        ->check(CLI::IsMember({"section3", "maxideal", "ini", "gin", "rs"}));
    cmd_verify->add_option("--center", v_center, "center form, repeatable (section3)");
    cmd_verify->add_option("--trials", v_trials, "coordinate changes to sample (gin)");
    cmd_verify->add_option("--ini-order", v_ini_order, "order whose initial ideal to compare against (ini)");
    cmd_verify->add_option("--shift", v_shift, "number of adjoined variables (rs)");
    cmd_verify->callback([&] {
        ca::IdealPresentation J = load_ideal(v_file, g);
        std::vector<ca::TheoremReport> reports;
        if (v_suite == "section3") {
            if (v_center.empty()) throw ca::Error("suite section3 needs at least one --center form");
            std::vector<ca::Polynomial> forms;
            for (auto& s : v_center)
                forms.push_back(ca::parse_polynomial(s, J.names, J.field, J.order));
            reports = ca::check_section3(J, forms);
        } else if (v_suite == "maxideal") {
            reports = ca::check_maximal_ideal_theorems(J);
        } else if (v_suite == "ini") {
            reports = ca::check_ini(J, ca::parse_order_spec(v_ini_order));
        } else if (v_suite == "gin") {
            reports = ca::check_gin(J, v_trials, g.seed);
        } else {
            reports.push_back(ca::check_rs_corollary(J, v_shift));
        }
        json out = json::array();
        int failures = 0;
        for (auto& r : reports) {
            out.push_back(report_json(r));
            if (r.verdict == ca::Verdict::Fails) ++failures;
        }
        emit(json{{"suite", v_suite}, {"reports", out}, {"failures", failures}});
        if (failures > 0) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
