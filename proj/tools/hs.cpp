#include "hs/env.hpp"
#include "hs/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace hs;

namespace {

constexpr const char* kVersion = "hs 0.1.0";

struct Context {
    int degree_cap = kDefaultDegreeCap;
    bool pretty = false;
};

int cap_from_env() {
    const char* v = std::getenv("HS_DEGREE_CAP");
    if (!v || !*v)
        return kDefaultDegreeCap;
    char* end = nullptr;
    long cap = std::strtol(v, &end, 10);
    if (*end || cap < 1 || cap > 1000)
        throw ParseError(std::string("HS_DEGREE_CAP must be an integer in [1, 1000], got '") + v + "'");
    return int(cap);
}

void emit(const Context& ctx, const Json& j) { std::cout << (ctx.pretty ? j.dump(2) : j.dump()) << "\n"; }

// Either an HS-derivation ({"phi":...}) or a substitution map ({"images":...}).
bool is_subst(const Json& j) { return j.is_object() && j.contains("images"); }

AlgebraPtr need_ring(const std::string& ring, const Context& ctx) {
    if (ring.empty())
        throw ParseError("--ring is required here");
    return ring_from_arg(ring, ctx.degree_cap);
}

AlgebraPtr optional_ring(const std::string& ring, const Context& ctx) {
    return ring.empty() ? nullptr : ring_from_arg(ring, ctx.degree_cap);
}

Json series_out(const ElemSeries& r) { return Json{{"series", series_to_json(r)}, {"text", format_series(r, "t")}}; }

Json series_out_s(const ElemSeries& r) { return Json{{"series", series_to_json(r)}, {"text", format_series(r, "s")}}; }

} // namespace

int main(int argc, char** argv) {
    Context ctx;
    CLI::App app{"Hasse-Schmidt derivations, substitution maps and divided powers", "hs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    std::string output = "json";
    app.add_option("--output", output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

    std::string ring, first, second, series, hs_arg, subst_arg, derivation, op, element, suite = "all", base = "Z",
                                                                                      format = "json";
    int to = 1, degree = -1, rank = 1, max_degree = 8, cases = 0;
    long node_budget = 100000;
    unsigned long seed = 7;

    auto* compose_cmd = app.add_subcommand("compose", "first o second for HS-derivations or substitution maps");
    compose_cmd->add_option("--first", first, "JSON object or file")->required();
    compose_cmd->add_option("--second", second, "JSON object or file")->required();
    compose_cmd->add_option("--ring", ring, "algebra for substitution maps");

    auto* invert_cmd = app.add_subcommand("invert", "inverse of a unit series or of an HS-derivation");
    auto* inv_series = invert_cmd->add_option("--series", series, "series JSON");
    auto* inv_hs = invert_cmd->add_option("--hs", hs_arg, "HS-derivation JSON");
    inv_series->excludes(inv_hs);
    invert_cmd->add_option("--ring", ring, "algebra for the series");

    auto* act_cmd = app.add_subcommand("act", "substitution action on an HS-derivation or a series");
    act_cmd->add_option("--subst", subst_arg, "substitution map JSON")->required();
    auto* act_hs = act_cmd->add_option("--hs", hs_arg, "HS-derivation JSON");
    auto* act_series = act_cmd->add_option("--series", series, "series JSON");
    act_hs->excludes(act_series);
    act_cmd->add_option("--ring", ring, "algebra");

    auto* phid_cmd = app.add_subcommand("phiD", "twisted substitution map phi^D");
    phid_cmd->add_option("--subst", subst_arg, "substitution map JSON")->required();
    phid_cmd->add_option("--hs", hs_arg, "HS-derivation JSON")->required();
    phid_cmd->add_option("--ring", ring, "algebra when the HS-derivation omits it");

    auto* int_cmd = app.add_subcommand("integrate", "extend a derivation to an HS-derivation of length m");
    int_cmd->add_option("--ring", ring, "ring shorthand, JSON or file")->required();
    int_cmd->add_option("--derivation", derivation, "values on the generators, e.g. {\"x\":\"1\"}")->required();
    int_cmd->add_option("--to", to, "length m")->check(CLI::Range(1, 64));
    int_cmd->add_option("--node-budget", node_budget, "search budget for finite fields")->check(CLI::PositiveNumber);

    auto* order_cmd = app.add_subcommand("order", "order of a differential operator or of the D_alpha");
    auto* ord_op = order_cmd->add_option("--op", op, "operator text such as x^2*d[2] + d[1]");
    auto* ord_hs = order_cmd->add_option("--hs", hs_arg, "HS-derivation JSON");
    ord_op->excludes(ord_hs);
    order_cmd->add_option("--ring", ring, "algebra");

    auto* sym_cmd = app.add_subcommand("symbol", "symbol of an operator or total symbol of an HS-derivation");
    auto* sym_op = sym_cmd->add_option("--op", op, "operator text");
    auto* sym_hs = sym_cmd->add_option("--hs", hs_arg, "HS-derivation JSON");
    sym_op->excludes(sym_hs);
    sym_cmd->add_option("--ring", ring, "algebra");
    sym_cmd->add_option("--degree", degree, "filtration degree (default: the order)");

    auto* gamma_cmd = app.add_subcommand("gamma-table", "multiplication table of divided powers");
    gamma_cmd->add_option("--rank", rank, "rank of the free module")->check(CLI::Range(1, 8));
    gamma_cmd->add_option("--base", base, "coefficient ring: Z, Q, F<p>, Z/<n>");
    gamma_cmd->add_option("--max-degree", max_degree, "largest product degree")->check(CLI::Range(1, 40));
    gamma_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* check_cmd = app.add_subcommand("check", "run a property suite");
    check_cmd->add_option("--suite", suite, "suite name or 'all'");
    check_cmd->add_option("--cases", cases, "instances (0: acceptance size)")->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--seed", seed, "random seed");
    check_cmd->add_option("--ring", ring, "replace the sample algebras");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an HS-derivation, operator or substitution map");
    auto* ev_hs = eval_cmd->add_option("--hs", hs_arg, "HS-derivation JSON");
    auto* ev_op = eval_cmd->add_option("--op", op, "operator text");
    auto* ev_subst = eval_cmd->add_option("--subst", subst_arg, "substitution map JSON");
    ev_hs->excludes(ev_op)->excludes(ev_subst);
    ev_op->excludes(ev_subst);
    eval_cmd->add_option("--element", element, "algebra element");
    eval_cmd->add_option("--series", series, "series JSON for --subst");
    eval_cmd->add_option("--ring", ring, "algebra");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ctx.degree_cap = cap_from_env();
        ctx.pretty = output == "pretty";

        if (*compose_cmd) {
            Json a = read_json_arg(first), b = read_json_arg(second);
            if (is_subst(a) != is_subst(b))
                throw ParseError("compose needs two HS-derivations or two substitution maps");
            if (is_subst(a)) {
                AlgebraPtr A = need_ring(ring, ctx);
                emit(ctx, Json{{"subst", subst_to_json(compose(subst_from_json(A, a), subst_from_json(A, b)))}});
            } else {
                AlgebraPtr A = optional_ring(ring, ctx);
                emit(ctx, Json{{"hs", hs_to_json(compose(hs_from_json(a, A, ctx.degree_cap), hs_from_json(b, A, ctx.degree_cap)))}});
            }
        } else if (*invert_cmd) {
            if (!series.empty()) {
                AlgebraPtr A = need_ring(ring, ctx);
                ElemSeries r = series_from_json(A, read_json_arg(series));
                const Elem& c0 = r[MultiIndex(std::size_t(r.shape()->arity()))];
                if (!c0.constant_value() || !A->base().is_unit(*c0.constant_value()))
                    throw DomainError("series is not a unit: constant coefficient " + c0.to_string());
                emit(ctx, series_out_s(invert(r, Elem::constant(A, 1))));
            } else if (!hs_arg.empty()) {
                emit(ctx, Json{{"hs", hs_to_json(invert(hs_from_json(read_json_arg(hs_arg), optional_ring(ring, ctx), ctx.degree_cap)))}});
            } else {
                throw ParseError("invert needs --series or --hs");
            }
        } else if (*act_cmd) {
            Json sj = read_json_arg(subst_arg);
            if (!hs_arg.empty()) {
                HSDerivation d = hs_from_json(read_json_arg(hs_arg), optional_ring(ring, ctx), ctx.degree_cap);
                emit(ctx, Json{{"hs", hs_to_json(subst_act(subst_from_json(d.algebra(), sj), d))}});
            } else if (!series.empty()) {
                AlgebraPtr A = need_ring(ring, ctx);
                SubstMap phi = subst_from_json(A, sj);
                emit(ctx, series_out(act_left(phi, series_from_json(A, read_json_arg(series)))));
            } else {
                throw ParseError("act needs --hs or --series");
            }
        } else if (*phid_cmd) {
            HSDerivation d = hs_from_json(read_json_arg(hs_arg), optional_ring(ring, ctx), ctx.degree_cap);
            emit(ctx, Json{{"subst", subst_to_json(phi_twist(subst_from_json(d.algebra(), read_json_arg(subst_arg)), d))}});
        } else if (*int_cmd) {
            AlgebraPtr A = need_ring(ring, ctx);
            Derivation delta = derivation_from_json(A, read_json_arg(derivation));
            IntegrateOptions opts;
            opts.node_budget = node_budget;
            opts.degree_cap = ctx.degree_cap;
            IntegralResult r = integrate(delta, to, opts);
            Json out = integral_to_json(r);
            out["derivation"] = derivation_to_json(delta);
            out["m"] = to;
            emit(ctx, out);
        } else if (*order_cmd) {
            if (!op.empty()) {
                DiffOp p = DiffOp::parse(need_ring(ring, ctx), op);
                emit(ctx, Json{{"operator", p.to_string()}, {"order", p.order()}});
            } else if (!hs_arg.empty()) {
                HSDerivation d = hs_from_json(read_json_arg(hs_arg), optional_ring(ring, ctx), ctx.degree_cap);
                OpSeries ops = operator_series(d);
                Json rows = Json::array();
                for (const auto& a : d.shape()->elements())
                    rows.push_back(Json{{"alpha", a.entries()}, {"order", ops[a].order()}, {"bound", t_degree(d, a)}});
                auto ell = d.ell();
                emit(ctx, Json{{"ell", ell ? Json(*ell) : Json("infinity")}, {"coefficients", rows}});
            } else {
                throw ParseError("order needs --op or --hs");
            }
        } else if (*sym_cmd) {
            if (!op.empty()) {
                DiffOp p = DiffOp::parse(need_ring(ring, ctx), op);
                int d = degree >= 0 ? degree : std::max(p.order(), 0);
                emit(ctx, Json{{"degree", d}, {"symbol", symbol(p, d).to_string()}});
            } else if (!hs_arg.empty()) {
                HSDerivation d = hs_from_json(read_json_arg(hs_arg), optional_ring(ring, ctx), ctx.degree_cap);
                GrSeries s = total_symbol(operator_series(d));
                Json rows = Json::array();
                for (const auto& a : d.shape()->elements())
                    rows.push_back(Json{{"alpha", a.entries()}, {"symbol", s[a].to_string()}});
                emit(ctx, Json{{"symbols", rows}});
            } else {
                throw ParseError("symbol needs --op or --hs");
            }
        } else if (*gamma_cmd) {
            BaseRing k = base_from_name(base);
            auto table = gamma_table(rank, max_degree);
            if (format == "csv") {
                std::cout << "left,right,result,coefficient\n";
                auto idx = [](const MultiIndex& m) {
                    std::string s;
                    for (std::size_t i = 0; i < m.size(); ++i)
                        s += (i ? " " : "") + std::to_string(m[i]);
                    return s;
                };
                for (const auto& g : table)
                    std::cout << idx(g.left) << "," << idx(g.right) << "," << idx(g.result) << ","
                              << to_string(k.normalize(Rat(g.coefficient))) << "\n";
            } else {
                Json rows = Json::array();
                for (const auto& g : table)
                    rows.push_back(Json{{"left", g.left.entries()}, {"right", g.right.entries()}, {"result", g.result.entries()},
                                        {"coefficient", to_string(k.normalize(Rat(g.coefficient)))}});
                emit(ctx, Json{{"base", k.name()}, {"rank", rank}, {"max_degree", max_degree}, {"products", rows}});
            }
        } else if (*check_cmd) {
            AlgebraPtr A = optional_ring(ring, ctx);
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            Json reports = Json::array();
            bool ok = true;
            for (const auto& n : names) {
                SuiteReport r = run_suite(n, cases, seed, A);
                ok = ok && r.ok();
                reports.push_back(suite_to_json(r));
            }
            emit(ctx, names.size() == 1 ? reports[0] : Json{{"ok", ok}, {"suites", reports}});
            return ok ? 0 : 1;
        } else if (*eval_cmd) {
            if (!hs_arg.empty()) {
                HSDerivation d = hs_from_json(read_json_arg(hs_arg), optional_ring(ring, ctx), ctx.degree_cap);
                emit(ctx, series_out_s(d.apply(Elem::parse(d.algebra(), element))));
            } else if (!op.empty()) {
                AlgebraPtr A = need_ring(ring, ctx);
                emit(ctx, Json{{"value", DiffOp::parse(A, op).apply(Elem::parse(A, element)).to_string()}});
            } else if (!subst_arg.empty()) {
                AlgebraPtr A = need_ring(ring, ctx);
                SubstMap phi = subst_from_json(A, read_json_arg(subst_arg));
                emit(ctx, series_out(phi.apply(series_from_json(A, read_json_arg(series)))));
            } else {
                throw ParseError("eval needs --hs, --op or --subst");
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
