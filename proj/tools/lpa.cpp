// Command line driver: mutation, periodicity and Laurentness checks for
// the lattice seeds, with plain-text or JSON reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpa/evolve.hpp"
#include "lpa/io.hpp"
#include "lpa/lattice.hpp"
#include "lpa/reduction.hpp"
#include "lpa/seed.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    bool json = false;
    std::size_t budget = 200000;
};

ordered_json report_base(const std::string& command) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
    if (opt.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

lpa::VarKey parse_var(const std::string& text) {
    lpa::LaurentPoly p = lpa::parse_expr(text);
    const auto& terms = p.terms();
    if (terms.size() == 1 && terms.begin()->second == 1 &&
        terms.begin()->first.exponents().size() == 1 &&
        terms.begin()->first.exponents().begin()->second == 1) {
        return terms.begin()->first.exponents().begin()->first;
    }
    throw lpa::ParseError(1, 1, "expected a plain variable like x[3,0,-1]");
}

// Accepts a seed file path or a built-in template name.
lpa::Seed load_seed_arg(const std::string& spec) {
    if (std::ifstream probe(spec); probe) return lpa::load_seed_file(spec);
    return lpa::instantiate(lpa::make_template(spec), lpa::Window{3, 2});
}

std::vector<lpa::Int> parse_initial(const std::string& spec, int order) {
    if (spec == "ones") return std::vector<lpa::Int>(static_cast<std::size_t>(order), 1);
    std::ifstream in(spec);
    if (!in) throw std::runtime_error("cannot open initial value file: " + spec);
    std::vector<lpa::Int> vals;
    std::string tok;
    while (in >> tok) {
        if (!tok.empty() && tok.back() == ',') tok.pop_back();
        if (tok.empty()) continue;
        vals.emplace_back(tok);
    }
    if (static_cast<int>(vals.size()) != order) {
        throw std::runtime_error("expected " + std::to_string(order) + " initial values, got " +
                                 std::to_string(vals.size()));
    }
    return vals;
}

std::size_t seed_terms(const lpa::Seed& s) {
    std::size_t n = 0;
    for (const auto& e : s.entries) n += e.exch.term_count();
    return n;
}

void check_budget(const Options& opt, std::size_t terms) {
    if (terms > opt.budget) throw lpa::BudgetExceeded(terms, opt.budget);
}

int cmd_mutate(const Options& opt, const std::string& seed_path, const std::string& at,
               const std::string& relabel, const std::string& out_path) {
    lpa::Seed s = load_seed_arg(seed_path);
    std::optional<lpa::VarKey> rl;
    if (!relabel.empty()) rl = parse_var(relabel);
    auto [mutated, trace] = lpa::mutate(s, parse_var(at), rl);
    check_budget(opt, seed_terms(mutated));

    std::string text = lpa::seed_to_text(mutated, "");
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
    ordered_json j = report_base("mutate");
    j["ok"] = true;
    j["at"] = lpa::print_var(trace.at);
    j["new_var"] = lpa::print_var(trace.new_var);
    j["new_var_value"] = lpa::print_expr(trace.new_var_value);
    ordered_json entries = ordered_json::array();
    for (const auto& e : mutated.entries) {
        entries.push_back({{"var", lpa::print_var(e.var)},
                           {"exchange", lpa::print_expr(e.exch)},
                           {"frozen", e.frozen}});
    }
    j["seed"] = entries;
    emit(opt, j,
         "new variable " + lpa::print_var(trace.new_var) + " = " +
             lpa::print_expr(trace.new_var_value) + "\n" + text);
    return kExitOk;
}

int cmd_verify_involution(const Options& opt, const std::string& seed_path, const std::string& at) {
    lpa::Seed s = load_seed_arg(seed_path);
    lpa::VarKey k = parse_var(at);
    auto [once, t1] = lpa::mutate(s, k);
    check_budget(opt, seed_terms(once));
    auto [twice, t2] = lpa::mutate(once, t1.new_var, k);
    bool ok = twice == s;
    ordered_json j = report_base("verify-involution");
    j["ok"] = ok;
    j["at"] = lpa::print_var(k);
    emit(opt, j,
         std::string(ok ? "PASS" : "FAIL") + ": mutation at " + lpa::print_var(k) +
             (ok ? " is an involution\n" : " does not return the original seed\n"));
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify_period(const Options& opt, const std::string& seed_path,
                      const std::string& template_name) {
    lpa::Seed s = template_name.empty()
                      ? load_seed_arg(seed_path)
                      : lpa::instantiate(lpa::make_template(template_name), lpa::Window{0, 0});
    lpa::Period1Result res = lpa::detect_period1(s);
    ordered_json j = report_base("verify-period");
    j["ok"] = res.periodic;
    if (!res.periodic) j["witness"] = res.witness;
    emit(opt, j,
         res.periodic ? std::string("PASS: period-1 seed\n")
                      : "FAIL: not period-1 (" + res.witness + ")\n");
    return res.periodic ? kExitOk : kExitCheckFailed;
}

int cmd_lattice_sweep(const Options& opt, const std::string& template_name, int radius, int margin,
                      int layers, bool check_covariance, int check_order) {
    lpa::SeedTemplate t = lpa::make_template(template_name);
    lpa::Window w{radius, margin};
    lpa::Seed cur = lpa::instantiate(t, w);
    check_budget(opt, seed_terms(cur));

    ordered_json j = report_base("lattice-sweep");
    ordered_json sweeps = ordered_json::array();
    std::string text;
    bool ok = true;
    for (int layer = 0; layer < layers; ++layer) {
        lpa::MutationSchedule sched = lpa::schedule_mu_tilde(t, w, layer);
        ordered_json sj;
        sj["layer"] = layer;
        sj["mutations"] = sched.order.size();
        text += "sweep " + std::to_string(layer) + ": " + std::to_string(sched.order.size()) +
                " mutations";
        if (check_order > 0) {
            bool oi = lpa::verify_order_independence(cur, sched, t, w, check_order, 1u);
            sj["order_independent"] = oi;
            text += oi ? ", order independent" : ", ORDER DEPENDENT";
            ok = ok && oi;
        }
        lpa::Seed before = cur;
        cur = lpa::run_schedule(cur, sched, t.rho).first;
        check_budget(opt, seed_terms(cur));
        if (check_covariance) {
            lpa::CovarianceResult cov = lpa::verify_shift_covariance(before, cur, t, w, layer + 1);
            sj["covariant"] = cov.ok;
            text += cov.ok ? ", shift covariant" : ", NOT shift covariant";
            if (!cov.ok) {
                ordered_json diffs = ordered_json::array();
                for (const auto& d : cov.diffs) {
                    diffs.push_back({{"var", lpa::print_var(d.var)},
                                     {"expected", lpa::print_expr(d.expected)},
                                     {"actual", lpa::print_expr(d.actual)}});
                }
                sj["diffs"] = diffs;
                ok = false;
            }
        }
        text += '\n';
        sweeps.push_back(sj);
    }
    j["ok"] = ok;
    j["sweeps"] = sweeps;
    emit(opt, j, text + (ok ? "PASS\n" : "FAIL\n"));
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_evolve(const Options& opt, const std::string& equation, int terms,
               const std::string& initial, int radius) {
    lpa::SeedTemplate t = lpa::make_template(equation);
    ordered_json j = report_base("evolve");
    std::string text;
    if (t.arity == 1) {
        lpa::Recurrence r = lpa::recurrence_of(t);
        std::vector<lpa::Int> vals = lpa::numeric_evolve(r, parse_initial(initial, r.order), terms);
        ordered_json seq = ordered_json::array();
        for (const auto& v : vals) {
            seq.push_back(v.get_str());
            text += v.get_str() + "\n";
        }
        j["terms"] = seq;
    } else {
        if (initial != "ones") {
            throw std::runtime_error("lattice equations support only --initial ones");
        }
        auto values = lpa::lattice_numeric_evolve(t, radius, 1, terms);
        ordered_json sites = ordered_json::array();
        for (const auto& [v, val] : values) {
            if (lpa::lambda_of(t, v) < t.rank) continue;
            sites.push_back({{"var", lpa::print_var(v)}, {"value", val.get_str()}});
            text += lpa::print_var(v) + " = " + val.get_str() + "\n";
        }
        j["sites"] = sites;
    }
    j["ok"] = true;
    emit(opt, j, text);
    return kExitOk;
}

int cmd_laurent_check(const Options& opt, const std::string& equation, int depth) {
    lpa::SeedTemplate t = lpa::make_template(equation);
    lpa::Recurrence r = lpa::recurrence_of(t);
    std::vector<lpa::LaurentPoly> vals = lpa::symbolic_evolve(r, depth, opt.budget);
    ordered_json j = report_base("laurent-check");
    j["ok"] = true;
    ordered_json terms = ordered_json::array();
    std::string text;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        terms.push_back({{"index", i}, {"term_count", vals[i].term_count()}});
        text += "x_" + std::to_string(i) + ": " + std::to_string(vals[i].term_count()) +
                " terms, Laurent\n";
    }
    j["terms"] = terms;
    emit(opt, j, text + "PASS: all terms are Laurent polynomials in the initial values\n");
    return kExitOk;
}

int cmd_verify_reduction(const Options& opt, const std::string& from, const std::string& map_name,
                         const std::string& to) {
    lpa::SeedTemplate tf = lpa::make_template(from);
    lpa::SeedTemplate tt = lpa::make_template(to);
    lpa::ReductionMap r = lpa::make_reduction(map_name);
    lpa::ReductionResult res = lpa::verify_reduction(r, tf, tt);
    ordered_json j = report_base("verify-reduction");
    j["ok"] = res.ok;
    std::string text;
    for (const auto& p : res.problems) text += p + "\n";
    ordered_json diffs = ordered_json::array();
    for (const auto& d : res.diffs) {
        diffs.push_back({{"layer", d.layer},
                         {"expected", lpa::print_expr(d.expected)},
                         {"actual", lpa::print_expr(d.actual)}});
        text += "layer " + std::to_string(d.layer) + " differs\n";
    }
    if (!res.problems.empty()) j["problems"] = res.problems;
    if (!diffs.empty()) j["diffs"] = diffs;
    emit(opt, j,
         text + (res.ok ? "PASS: " + map_name + " maps " + from + " onto " + to + "\n" : "FAIL\n"));
    return res.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mutation engine for Laurent phenomenon lattice seeds"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "machine readable JSON reports");
    app.add_option("--budget", opt.budget, "maximum number of polynomial terms kept");

    std::string seed_path, at, relabel, out_path, template_name, equation, initial = "ones";
    std::string from, map_name, to;
    int radius = 3, margin = 2, layers = 1, terms = 10, depth = 8, check_order = 0;
    bool check_covariance = false;

    auto* mutate = app.add_subcommand("mutate", "mutate a seed at one variable");
    mutate->add_option("--seed", seed_path, "seed file")->required();
    mutate->add_option("--at", at, "variable to mutate at")->required();
    mutate->add_option("--relabel", relabel, "name for the new variable");
    mutate->add_option("--out", out_path, "write the mutated seed here");

    auto* inv = app.add_subcommand("verify-involution", "mutate twice and compare");
    inv->add_option("--seed", seed_path, "seed file")->required();
    inv->add_option("--at", at, "variable to mutate at")->required();

    auto* per = app.add_subcommand("verify-period", "check the period-1 property");
    per->add_option("--seed", seed_path, "seed file");
    per->add_option("--template", template_name, "built-in seed template");

    auto* sweep = app.add_subcommand("lattice-sweep", "run layer sweeps on a window");
    sweep->add_option("--template", template_name, "seed template")->required();
    sweep->add_option("--radius", radius, "window radius");
    sweep->add_option("--margin", margin, "per-sweep boundary margin");
    sweep->add_option("--layers", layers, "number of sweeps");
    sweep->add_flag("--check-covariance", check_covariance, "verify the shift covariance");
    sweep->add_option("--check-order", check_order, "order independence trials");

    auto* evolve = app.add_subcommand("evolve", "evolve an equation numerically");
    evolve->add_option("--equation", equation, "seed template name")->required();
    evolve->add_option("--terms", terms, "terms (or lattice layers) to produce");
    evolve->add_option("--initial", initial, "'ones' or a file of integers");
    evolve->add_option("--radius", radius, "lattice window radius");

    auto* laur = app.add_subcommand("laurent-check", "symbolic evolution certificate");
    laur->add_option("--equation", equation, "arity-1 seed template name")->required();
    laur->add_option("--depth", depth, "number of terms past the initial values");

    auto* red = app.add_subcommand("verify-reduction", "check a seed reduction");
    red->add_option("--from", from, "source template")->required();
    red->add_option("--map", map_name, "reduction name")->required();
    red->add_option("--to", to, "target template")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (mutate->parsed()) return cmd_mutate(opt, seed_path, at, relabel, out_path);
        if (inv->parsed()) return cmd_verify_involution(opt, seed_path, at);
        if (per->parsed()) {
            if (seed_path.empty() == template_name.empty()) {
                std::cerr << "verify-period needs exactly one of --seed, --template\n";
                return kExitUsage;
            }
            return cmd_verify_period(opt, seed_path, template_name);
        }
        if (sweep->parsed()) {
            return cmd_lattice_sweep(opt, template_name, radius, margin, layers, check_covariance,
                                     check_order);
        }
        if (evolve->parsed()) return cmd_evolve(opt, equation, terms, initial, radius);
        if (laur->parsed()) return cmd_laurent_check(opt, equation, depth);
        if (red->parsed()) return cmd_verify_reduction(opt, from, map_name, to);
    } catch (const lpa::BudgetExceeded& e) {
        std::cerr << e.what() << '\n';
        return kExitBudget;
    } catch (const lpa::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const lpa::LaurentFalsified& e) {
        std::cerr << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
