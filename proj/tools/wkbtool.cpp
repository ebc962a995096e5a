// Batch front door: parse JSON inputs, dispatch to the library, emit one
// machine-readable report per invocation.
//
// Report envelope: {"verb":…, "result":…, "checks":[…], "elapsed_ms":…}.
// Exit codes: 0 success, 1 domain error or failed verdict, 2 malformed input.
// Reports are byte-deterministic apart from elapsed_ms (sorted object keys,
// no timestamps).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wkb/classical_cech.hpp"
#include "wkb/json_io.hpp"

using namespace wkb;

namespace {

struct Outcome {
    Json result;
    Json checks = Json::array();
    int exit_code = 0;
};

std::string error_message(const Error& e) {
    std::string w = e.what();
    return w.substr(e.name().size() + 2); // strip "Name: "
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open '" + path + "'");
    try {
        Json j;
        in >> j;
        return j;
    } catch (const std::exception& ex) {
        throw Error("ParseError", "invalid JSON in '" + path + "': " + ex.what());
    }
}

// group / crossed-module / nerve arguments: fixture name or JSON file path
FiniteGroup load_group(const std::string& arg) {
    if (file_exists(arg)) return group_from_json(read_json_file(arg));
    return group_fixture(arg);
}

CrossedModule load_cm(const std::string& arg) {
    if (file_exists(arg)) return crossed_module_from_json(read_json_file(arg));
    return cm_fixture(arg);
}

Nerve load_nerve(const std::string& arg) {
    if (file_exists(arg)) return nerve_from_json(read_json_file(arg));
    return nerve_fixture(arg);
}

// --depth truncates inputs before the operation runs
Symbol load_symbol(const std::string& path, const std::optional<int>& depth) {
    Symbol p = symbol_from_json(read_json_file(path));
    return depth ? p.truncated_depth(*depth) : p;
}

TauSeries load_series(const std::string& path, const std::optional<int>& depth) {
    TauSeries s = tau_series_from_json(read_json_file(path));
    return depth ? s.truncated_depth(*depth) : s;
}

HalfFormOperator truncate_hf(const HalfFormOperator& h, const std::optional<int>& depth) {
    if (!depth) return h;
    return HalfFormOperator(h.g, h.P.truncated_depth(*depth));
}

DescentDatum load_descent(const std::string& path, const std::optional<int>& depth) {
    DescentDatum d = descent_from_json(read_json_file(path));
    if (depth) {
        for (auto& q : d.q) q = q.truncated_depth(*depth);
        for (auto& p : d.p) p = truncate_hf(p, depth);
    }
    return d;
}

std::string tri_key(const std::array<int, 3>& t) {
    return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

Json check_row(const std::string& item, bool ok, const std::string& detail = "") {
    return Json{{"item", item}, {"ok", ok}, {"detail", detail}};
}

template <typename Classification>
Json classification_json(const Classification& r, const Nerve& nv) {
    Json reps = Json::array();
    for (int idx : r.reps) reps.push_back(to_json(r.cocycles[idx], nv));
    return Json{{"cocycles", r.cocycles.size()},
                {"classes", r.reps.size()},
                {"trivial_class", r.trivial_class},
                {"complete", r.complete},
                {"nodes", r.nodes},
                {"has_group", r.has_group},
                {"invariant_factors", r.invariant_factors},
                {"reps", reps}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic WKB operator calculus and crossed-module Cech cohomology"};
    app.require_subcommand(1);

    // shared option state; each verb binds the slots it uses
    std::string in1, in2, in3, out_path, group_arg, nerve_arg, fwd_path, bwd_path;
    int order_m = 0;
    int degree = 0;
    std::optional<int> depth;
    int depth_value = 0;
    double budget = static_cast<double>(kDefaultBudget);

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "also write the report to this path");
    };
    auto add_depth = [&](CLI::App* cmd) {
        cmd->add_option("--depth", depth_value, "truncate inputs to this window depth");
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "search node ceiling");
    };

    std::vector<std::pair<CLI::App*, std::function<Outcome()>>> verbs;
    auto verb = [&](const char* name, const char* desc, std::function<Outcome()> fn) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        add_out(cmd);
        verbs.emplace_back(cmd, std::move(fn));
        return cmd;
    };

    // ---- operator calculus ----

    CLI::App* c_star = verb("star", "compose two symbols", [&] {
        Outcome o;
        o.result = to_json(star(load_symbol(in1, depth), load_symbol(in2, depth)));
        return o;
    });
    c_star->add_option("P", in1, "left symbol JSON")->required();
    c_star->add_option("Q", in2, "right symbol JSON")->required();
    add_depth(c_star);

    CLI::App* c_adj = verb("adjoint", "formal adjoint of a symbol or half-form operator", [&] {
        Outcome o;
        Json j = read_json_file(in1);
        if (j.is_object() && j.contains("g")) {
            HalfFormOperator h = truncate_hf(half_form_from_json(j), depth);
            o.result = to_json(adjoint(h));
        } else {
            Symbol p = symbol_from_json(j);
            if (depth) p = p.truncated_depth(*depth);
            o.result = to_json(adjoint_dx(p));
        }
        return o;
    });
    c_adj->add_option("P", in1, "symbol or half-form JSON")->required();
    add_depth(c_adj);

    CLI::App* c_inv = verb("invert", "star-inverse of a symbol", [&] {
        Outcome o;
        o.result = to_json(invert(load_symbol(in1, depth)));
        return o;
    });
    c_inv->add_option("P", in1, "symbol JSON")->required();
    add_depth(c_inv);

    CLI::App* c_sym = verb("symbol", "homogeneous part of the given order", [&] {
        Outcome o;
        Symbol p = load_symbol(in1, depth);
        o.result = Json{{"order", order_m}, {"coefficient", to_json(p.symbol_of_order(order_m))}};
        return o;
    });
    c_sym->add_option("M", order_m, "tau order")->required();
    c_sym->add_option("P", in1, "symbol JSON")->required();
    add_depth(c_sym);

    CLI::App* c_kstar = verb("kstar", "k* membership of a scalar series", [&] {
        Outcome o;
        bool member = kstar_check(load_series(in1, depth));
        o.result = Json{{"member", member}};
        o.exit_code = member ? 0 : 1;
        return o;
    });
    c_kstar->add_option("S", in1, "tau series JSON")->required();
    add_depth(c_kstar);

    CLI::App* c_wstar = verb("wstar", "unitary-membership of a half-form operator", [&] {
        Outcome o;
        bool member = wstar_check(truncate_hf(half_form_from_json(read_json_file(in1)), depth));
        o.result = Json{{"member", member}};
        o.exit_code = member ? 0 : 1;
        return o;
    });
    c_wstar->add_option("H", in1, "half-form operator JSON")->required();
    add_depth(c_wstar);

    // ---- crossed modules and Cech cohomology ----

    CLI::App* c_cmv = verb("cm-validate", "check the crossed-module axioms", [&] {
        Outcome o;
        try {
            CrossedModule cm = load_cm(in1);
            o.result = Json{{"valid", true}, {"violations", Json::array()}};
        } catch (const Error& e) {
            if (e.name() != "MalformedTables") throw;
            o.result = Json{{"valid", false}, {"violations", Json::array({error_message(e)})}};
            o.exit_code = 1;
        }
        return o;
    });
    c_cmv->add_option("CM", in1, "crossed module fixture or JSON")->required();

    auto cochain_check = [&](int deg) {
        Outcome o;
        CrossedModule cm = load_cm(in1);
        Nerve nv = load_nerve(in2);
        std::vector<std::string> violations;
        if (deg == 0)
            violations = check0(cm, nv, zero_cochain_from_json(read_json_file(in3), nv));
        else
            violations = check1(cm, nv, one_cochain_from_json(read_json_file(in3), nv));
        o.result = Json{{"ok", violations.empty()}, {"violations", violations}};
        o.exit_code = violations.empty() ? 0 : 1;
        return o;
    };

    CLI::App* c_ck0 = verb("check0", "verify the degree-0 cocycle relations",
                           [&] { return cochain_check(0); });
    c_ck0->add_option("CM", in1, "crossed module fixture or JSON")->required();
    c_ck0->add_option("NERVE", in2, "nerve fixture or JSON")->required();
    c_ck0->add_option("C", in3, "cochain JSON")->required();

    CLI::App* c_ck1 = verb("check1", "verify the degree-1 cocycle relations",
                           [&] { return cochain_check(1); });
    c_ck1->add_option("CM", in1, "crossed module fixture or JSON")->required();
    c_ck1->add_option("NERVE", in2, "nerve fixture or JSON")->required();
    c_ck1->add_option("C", in3, "cochain JSON")->required();

    CLI::App* c_h0 = verb("h0", "classify degree-0 cocycles up to gauge", [&] {
        Outcome o;
        Nerve nv = load_nerve(in2);
        ZeroClassification r = h0(load_cm(in1), nv, static_cast<long long>(budget));
        o.result = classification_json(r, nv);
        o.exit_code = r.complete ? 0 : 1;
        return o;
    });
    c_h0->add_option("CM", in1, "crossed module fixture or JSON")->required();
    c_h0->add_option("NERVE", in2, "nerve fixture or JSON")->required();
    add_budget(c_h0);

    CLI::App* c_h1 = verb("h1", "classify degree-1 cocycles up to gauge", [&] {
        Outcome o;
        Nerve nv = load_nerve(in2);
        OneClassification r = h1(load_cm(in1), nv, static_cast<long long>(budget));
        o.result = classification_json(r, nv);
        o.exit_code = r.complete ? 0 : 1;
        return o;
    });
    c_h1->add_option("CM", in1, "crossed module fixture or JSON")->required();
    c_h1->add_option("NERVE", in2, "nerve fixture or JSON")->required();
    add_budget(c_h1);

    CLI::App* c_cech = verb("cech", "classical cohomology with abelian coefficients", [&] {
        Outcome o;
        ClassicalCohomology coh = classical_cohomology(load_group(in1), load_nerve(in2), degree);
        Json reps = Json::array();
        for (int idx : coh.reps) reps.push_back(coh.cocycles[idx]);
        o.result = Json{{"degree", coh.degree},
                        {"cocycles", coh.cocycles.size()},
                        {"coboundaries", coh.coboundaries.size()},
                        {"classes", coh.classes()},
                        {"invariant_factors", coh.invariant_factors},
                        {"reps", reps}};
        return o;
    });
    c_cech->add_option("DEGREE", degree, "cohomological degree (0, 1 or 2)")->required();
    c_cech->add_option("GROUP", in1, "abelian group fixture or JSON")->required();
    c_cech->add_option("NERVE", in2, "nerve fixture or JSON")->required();

    CLI::App* c_hyper = verb("compare-hyper", "degree shift against classical cohomology", [&] {
        Outcome o;
        HyperComparison hc =
            compare_hyper(load_group(in1), load_nerve(in2), static_cast<long long>(budget));
        for (const auto& e : hc.entries)
            o.checks.push_back(check_row(e.label, e.matched,
                                         std::to_string(e.classes_cm) + " = " +
                                             std::to_string(e.classes_classical)));
        o.result = Json{{"ok", hc.ok}};
        o.exit_code = hc.ok ? 0 : 1;
        return o;
    });
    c_hyper->add_option("GROUP", in1, "abelian group fixture or JSON")->required();
    c_hyper->add_option("NERVE", in2, "nerve fixture or JSON")->required();
    add_budget(c_hyper);

    // ---- descent data ----

    CLI::App* c_dv = verb("descent-validate", "check the descent identities", [&] {
        Outcome o;
        DescentReport rep = validate_descent(load_descent(in1, depth));
        for (const auto& c : rep.checks) o.checks.push_back(check_row(c.item, c.ok, c.detail));
        o.result = Json{{"ok", rep.ok}};
        o.exit_code = rep.ok ? 0 : 1;
        return o;
    });
    c_dv->add_option("D", in1, "descent datum JSON")->required();
    add_depth(c_dv);

    CLI::App* c_ec = verb("extract-class", "central defect cocycle of a descent datum", [&] {
        Outcome o;
        DescentDatum d = load_descent(in1, depth);
        std::vector<TauSeries> cls = extract_class(d);
        Json by_triangle = Json::object();
        for (std::size_t t = 0; t < cls.size(); ++t)
            by_triangle[tri_key(d.nerve.triangles[t])] = to_json(cls[t]);
        o.result = Json{{"class", by_triangle}};
        return o;
    });
    c_ec->add_option("D", in1, "descent datum JSON")->required();
    add_depth(c_ec);

    CLI::App* c_bridge = verb("bridge", "central-defect bridge to classical cohomology", [&] {
        Outcome o;
        FiniteGroup g = load_group(group_arg);
        Nerve nv = load_nerve(nerve_arg);
        if (!fwd_path.empty()) {
            OneCochain c = one_cochain_from_json(read_json_file(fwd_path), nv);
            std::vector<int> z = bridge_forward(g, nv, c);
            Json zj = Json::object();
            for (std::size_t t = 0; t < z.size(); ++t) zj[tri_key(nv.triangles[t])] = z[t];
            o.result = Json{{"z", zj}};
            return o;
        }
        if (!bwd_path.empty()) {
            Json j = read_json_file(bwd_path);
            const Json& zj = j.is_object() && j.contains("z") ? j.at("z") : j;
            std::vector<int> z;
            for (const auto& tr : nv.triangles) {
                std::string key = tri_key(tr);
                if (!zj.is_object() || !zj.contains(key))
                    throw Error("MissingAssignment", "z has no value on simplex (" + key + ")");
                if (!zj.at(key).is_number_integer())
                    throw Error("ParseError", "z values must be integers");
                z.push_back(zj.at(key).get<int>());
            }
            OneCochain c = bridge_backward(g, nv, z);
            o.result = to_json(c, nv);
            return o;
        }
        BridgeVerification v = bridge_verify(g, nv, static_cast<long long>(budget));
        if (!v.complete)
            throw Error("BudgetExceeded",
                        "bridge enumeration budget exhausted after " + std::to_string(v.nodes) +
                            " nodes");
        o.result = Json{{"classes_cm", v.classes_cm},
                        {"classes_classical", v.classes_classical},
                        {"forward_ok", v.forward_ok},
                        {"backward_ok", v.backward_ok},
                        {"complete", v.complete},
                        {"nodes", v.nodes}};
        o.checks.push_back(check_row("forward map well-defined and bijective on classes",
                                     v.forward_ok));
        o.checks.push_back(check_row("backward map inverts it", v.backward_ok));
        o.exit_code = v.ok() ? 0 : 1;
        return o;
    });
    c_bridge->add_option("--group", group_arg, "group fixture or JSON")->required();
    c_bridge->add_option("--nerve", nerve_arg, "nerve fixture or JSON")->required();
    CLI::Option* fwd = c_bridge->add_option("--forward", fwd_path, "map a crossed-module cocycle forward");
    CLI::Option* bwd = c_bridge->add_option("--backward", bwd_path, "embed a classical cocycle");
    fwd->excludes(bwd);
    add_budget(c_bridge);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* chosen = nullptr;
    std::function<Outcome()> run;
    for (auto& [cmd, fn] : verbs)
        if (app.got_subcommand(cmd)) {
            chosen = cmd;
            run = fn;
        }

    for (CLI::Option* dopt : chosen->get_options())
        if (dopt->get_name() == "--depth" && dopt->count() > 0) depth = depth_value;

    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = run();
    } catch (const Error& e) {
        out.result = Json{{"error", e.name()}, {"message", error_message(e)}};
        out.checks = Json::array();
        out.exit_code =
            (e.name() == "ParseError" || e.name() == "MalformedTables" ||
             e.name() == "MissingAssignment")
                ? 2
                : 1;
    } catch (const std::exception& e) {
        out.result = Json{{"error", "ParseError"}, {"message", e.what()}};
        out.checks = Json::array();
        out.exit_code = 2;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

    Json report{{"verb", chosen->get_name()},
                {"result", out.result},
                {"checks", out.checks},
                {"elapsed_ms", ms}};
    std::cout << report.dump(2) << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 2;
        }
        f << report.dump(2) << "\n";
    }
    return out.exit_code;
}
