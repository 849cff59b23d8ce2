#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include "farkas/box_solver.hpp"
#include "farkas/classifier.hpp"
#include "farkas/graphs.hpp"
#include "farkas/io.hpp"
#include "farkas/relations.hpp"

namespace farkas::cli {

namespace {

using nlohmann::json;

json num(const Integer& v) { return v.get_str(); }
json num(const Rational& v) { return v.get_str(); }
json num(std::size_t v) { return std::to_string(v); }

template <typename T>
json list(const std::vector<T>& values) {
    json a = json::array();
    for (const auto& v : values) a.push_back(num(v));
    return a;
}

json family_json(const VectorFamily& family) {
    json a = json::array();
    for (const auto& v : family.vectors()) a.push_back(list(v));
    return a;
}

json circuit_json(const Circuit& c) {
    std::vector<std::size_t> one_based;
    for (auto i : c.support) one_based.push_back(i + 1);
    const auto st = circuit_stats(c);
    return json{{"support", list(one_based)},
                {"coeffs", list(c.coeffs)},
                {"max_abs", num(st.max_abs)},
                {"count_ge2", num(st.count_ge2)}};
}

json cycle_json(const Graph& g, const std::vector<std::size_t>& vertices) {
    json a = json::array();
    for (auto v : vertices) a.push_back(g.labels()[v]);
    return a;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

template <typename T>
std::string show(const std::vector<T>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(x.get_str());
    return "(" + join(parts, ",") + ")";
}

std::string show_cycle(const Graph& g, const std::vector<std::size_t>& c) {
    std::vector<std::string> parts;
    for (auto v : c) parts.push_back(g.labels()[v]);
    return join(parts, "-");
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::InvalidArgument: return kParse;
        case ErrorKind::LimitExceeded: return kLimit;
        case ErrorKind::NotInClass: return kNotInClass;
        case ErrorKind::Disconnected: return kDisconnected;
        case ErrorKind::Internal: return kInternal;
    }
    return kInternal;
}

std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::DimensionMismatch: return "dimension_mismatch";
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::LimitExceeded: return "limit_exceeded";
        case ErrorKind::NotInClass: return "not_in_class";
        case ErrorKind::Disconnected: return "disconnected";
        case ErrorKind::Internal: return "internal";
    }
    return "internal";
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool quiet = false;
    Limits limits;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    json report(const std::string& command) const {
        return json{{"schema", "1"}, {"command", command}};
    }
    void emit(json& r) const {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        r["timings"] = json{{"elapsed_ms", std::to_string(ms)}};
        out << r.dump(2) << '\n';
    }
    std::ostream& table() const {
        static std::ostream null(nullptr);
        return quiet ? null : err;
    }
};

struct BoxArgs {
    std::string lower, upper, w;
};

Box parse_box(const BoxArgs& a) {
    return Box{io::parse_integer_list(a.lower), io::parse_integer_list(a.upper)};
}

int cmd_circuits(Context& ctx, const std::string& path) {
    const auto family = io::parse_vector_file(io::read_file(path));
    const auto circuits = enumerate_circuits(family, ctx.limits);
    json r = ctx.report("circuits");
    r["inputs"] = json{{"vectors", family_json(family)}};
    r["verdicts"] = json{{"circuit_count", num(circuits.size())}};
    json cs = json::array();
    for (const auto& c : circuits) cs.push_back(circuit_json(c));
    r["witnesses"] = json{{"circuits", cs}};

    auto& t = ctx.table();
    t << "circuits: " << circuits.size() << '\n';
    for (const auto& c : circuits) {
        const auto st = circuit_stats(c);
        std::vector<Integer> sup;
        for (auto i : c.support) sup.emplace_back(static_cast<unsigned long>(i + 1));
        t << "  support " << show(sup) << "  coeffs " << show(c.coeffs) << "  max|a| "
          << st.max_abs.get_str() << "  #|a|>=2 " << st.count_ge2 << '\n';
    }
    ctx.emit(r);
    return kOk;
}

int cmd_classify(Context& ctx, const std::string& path, const std::string& mode, bool oracle) {
    const auto family = io::parse_vector_file(io::read_file(path));
    const bool do_afr = mode != "wfr";
    const bool do_wfr = mode != "afr";
    json r = ctx.report("classify");
    r["inputs"] = json{{"vectors", family_json(family)}, {"mode", mode}, {"oracle", oracle}};
    json verdicts = json::object();
    json witnesses = json::object();
    bool agree = true;
    auto& t = ctx.table();

    if (do_afr) {
        const auto v = is_afr(family, ctx.limits);
        verdicts["afr"] = v.is_afr;
        witnesses["afr_violating_circuit"] = v.violating_circuit ? circuit_json(*v.violating_circuit) : json(nullptr);
        t << "afr: " << (v.is_afr ? "true" : "false");
        if (v.violating_circuit) t << "  violating circuit " << show(v.violating_circuit->coeffs);
        t << '\n';
        if (oracle) {
            const bool o = is_afr_oracle(family, ctx.limits);
            verdicts["afr_oracle"] = o;
            agree = agree && o == v.is_afr;
            t << "afr oracle: " << (o ? "true" : "false") << '\n';
        }
    }
    if (do_wfr) {
        const auto v = is_wfr(family, ctx.limits);
        verdicts["wfr"] = v.is_wfr;
        if (v.counterexample) {
            std::vector<Integer> pattern;
            for (int a : v.counterexample->pattern.values) pattern.emplace_back(a);
            witnesses["wfr_counterexample"] =
                json{{"pattern", list(pattern)},
                     {"special_index", num(v.counterexample->pattern.special_index + 1)},
                     {"x", list(v.counterexample->x)}};
            t << "wfr: false  pattern " << show(pattern) << "  x " << show(v.counterexample->x) << '\n';
        } else {
            witnesses["wfr_counterexample"] = nullptr;
            t << "wfr: true\n";
        }
        if (oracle) {
            const bool o = is_wfr_oracle(family, ctx.limits);
            verdicts["wfr_oracle"] = o;
            agree = agree && o == v.is_wfr;
            t << "wfr oracle: " << (o ? "true" : "false") << '\n';
        }
    }
    if (oracle) verdicts["oracles_agree"] = agree;
    r["verdicts"] = verdicts;
    r["witnesses"] = witnesses;
    ctx.emit(r);
    return agree ? kOk : kOracleDisagreement;
}

int cmd_decide(Context& ctx, const std::string& path, const BoxArgs& a, std::string rule,
               bool no_class_check) {
    const auto family = io::parse_vector_file(io::read_file(path));
    const Box box = parse_box(a);
    const IntVector w = io::parse_integer_list(a.w);
    require_dim(family, w);
    box.validate(family.size());

    if (rule == "auto") {
        if (is_afr(family, ctx.limits).is_afr)
            rule = "afr";
        else if (box.is_strict() && is_wfr(family, ctx.limits).is_wfr)
            rule = "wfr";
        else
            throw Error(ErrorKind::NotInClass, "no decision rule applies to this family and box");
    }
    DecideOptions opts{!no_class_check, ctx.limits};
    const Decision d = rule == "afr" ? decide_afr(family, box, w, opts) : decide_wfr(family, box, w, opts);

    json r = ctx.report("decide");
    r["inputs"] = json{{"vectors", family_json(family)},
                       {"lower", list(box.lower)},
                       {"upper", list(box.upper)},
                       {"w", list(w)},
                       {"rule", rule},
                       {"class_check", !no_class_check}};
    r["verdicts"] = json{{"representable", d.representable}, {"reason", to_string(d.reason)}};
    r["witnesses"] = json{{"solution", d.solution ? list(*d.solution) : json(nullptr)}};
    auto& t = ctx.table();
    t << "rule " << rule << ": " << (d.representable ? "representable" : "not representable") << " ("
      << to_string(d.reason) << ")";
    if (d.solution) t << "  y = " << show(*d.solution);
    t << '\n';
    ctx.emit(r);
    return d.representable ? kOk : kNegative;
}

int cmd_certify(Context& ctx, const std::string& path, const BoxArgs& a, const std::string& u_text) {
    const auto family = io::parse_vector_file(io::read_file(path));
    const Box box = parse_box(a);
    const IntVector w = io::parse_integer_list(a.w);
    require_dim(family, w);
    box.validate(family.size());
    const Certificate cert(io::parse_rational_list(u_text));
    if (cert.u.size() != family.dim())
        throw Error(ErrorKind::DimensionMismatch, "u must have the family's dimension");

    const Rational lhs = dot(cert.u, w);
    const Rational rhs = certificate_rhs(cert, family, box);
    const bool valid = verify_certificate(cert, family, box, w);

    json r = ctx.report("certify");
    r["inputs"] = json{{"vectors", family_json(family)},
                       {"lower", list(box.lower)},
                       {"upper", list(box.upper)},
                       {"w", list(w)},
                       {"u", list(cert.u)}};
    r["verdicts"] = json{{"valid", valid}, {"u_dot_w", num(lhs)}, {"rhs", num(rhs)}};
    r["witnesses"] = json::object();
    ctx.table() << "<u,w> = " << lhs.get_str() << ", rhs = " << rhs.get_str() << ": "
                << (valid ? "valid certificate (no rational solution)" : "not a certificate") << '\n';
    ctx.emit(r);
    return valid ? kOk : kNegative;
}

int cmd_graph(Context& ctx, const std::string& path, const std::string& check, bool cross) {
    const Graph g = io::parse_graph_file(io::read_file(path));
    if (!g.connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
    json r = ctx.report("graph");
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({g.labels()[a], g.labels()[b]}));
    r["inputs"] = json{{"vertices", g.labels()}, {"edges", edges}, {"check", check}, {"cross_validate", cross}};

    json verdicts = json::object();
    json witnesses = json::object();
    auto& t = ctx.table();
    auto pair_json = [&](const CyclePairWitness& w) {
        json j{{"cycles", json::array({cycle_json(g, w.first.vertices), cycle_json(g, w.second.vertices)})},
               {"note", w.note}};
        if (w.uncovered_vertex) j["uncovered"] = g.labels()[*w.uncovered_vertex];
        return j;
    };

    if (check != "weak") {
        const auto v = is_almost_farkas_graph(g, ctx.limits);
        verdicts["almost"] = *v.almost_farkas;
        witnesses["almost"] = v.witness ? pair_json(*v.witness) : json(nullptr);
        t << "almost Farkas: " << (*v.almost_farkas ? "true" : "false");
        if (v.witness)
            t << "  cycles " << show_cycle(g, v.witness->first.vertices) << " / "
              << show_cycle(g, v.witness->second.vertices) << ", uncovered "
              << g.labels()[*v.witness->uncovered_vertex];
        t << '\n';
    }
    if (check != "almost") {
        const auto v = is_weakly_farkas_graph(g, ctx.limits);
        verdicts["weak"] = *v.weakly_farkas;
        witnesses["weak"] = v.witness ? pair_json(*v.witness) : json(nullptr);
        t << "weakly Farkas: " << (*v.weakly_farkas ? "true" : "false");
        if (v.witness)
            t << "  cycles " << show_cycle(g, v.witness->first.vertices) << " / "
              << show_cycle(g, v.witness->second.vertices);
        t << '\n';
        if (!*v.weakly_farkas) {
            if (const auto gap = find_odd_cycle_gap(g, ctx.limits)) {
                const auto fx = proof_fixture(g, *gap);
                json assignment = json::array();
                for (std::size_t e = 0; e < g.edge_count(); ++e) {
                    const auto [a, b] = g.edges()[e];
                    assignment.push_back(json{{"edge", json::array({g.labels()[a], g.labels()[b]})},
                                              {"a", std::to_string(fx.pattern[e])},
                                              {"x", num(fx.x[e])}});
                }
                witnesses["pattern_counterexample"] =
                    json{{"cycles", json::array({cycle_json(g, gap->first_cycle), cycle_json(g, gap->second_cycle)})},
                         {"path", cycle_json(g, gap->path)},
                         {"assignment", assignment}};
            }
        }
    }
    int code = kOk;
    if (cross) {
        const auto cv = cross_validate_report(g, ctx.limits);
        verdicts["cross_validation"] = json{{"agrees", cv.agrees},
                                            {"graph_almost", cv.graph_almost},
                                            {"graph_weak", cv.graph_weak},
                                            {"vector_afr", cv.vector_afr},
                                            {"vector_wfr", cv.vector_wfr}};
        t << "cross-validation: " << (cv.agrees ? "agrees" : "DISAGREES") << " (afr " << cv.vector_afr
          << ", wfr " << cv.vector_wfr << ")\n";
        if (!cv.agrees) code = kOracleDisagreement;
    }
    r["verdicts"] = verdicts;
    r["witnesses"] = witnesses;
    ctx.emit(r);
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact classifier for almost/weakly Farkas-related integer vectors", "farkas"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx{out, err};
    err << std::boolalpha;
    std::uint64_t limit = 0;
    app.add_option("--limit", limit, "Override every enumeration limit with N")->check(CLI::PositiveNumber);
    app.add_flag("--quiet", ctx.quiet, "Suppress the summary on standard error");

    std::string path;
    std::function<int()> action;

    auto* circuits = app.add_subcommand("circuits", "List the elementary integral relations of a family");
    circuits->add_option("file", path, "Vector file")->required();
    circuits->callback([&] { action = [&] { return cmd_circuits(ctx, path); }; });

    std::string mode = "both";
    bool oracle = false;
    auto* classify = app.add_subcommand("classify", "Decide almost/weakly Farkas-relatedness");
    classify->add_option("file", path, "Vector file")->required();
    classify->add_option("--mode", mode, "afr, wfr or both")->check(CLI::IsMember({"afr", "wfr", "both"}));
    classify->add_flag("--oracle", oracle, "Also run the definitional brute-force oracles");
    classify->callback([&] { action = [&] { return cmd_classify(ctx, path, mode, oracle); }; });

    BoxArgs box;
    std::string rule = "auto";
    bool no_class_check = false;
    auto* decide = app.add_subcommand("decide", "Decide integer representability in a box");
    decide->add_option("file", path, "Vector file")->required();
    decide->add_option("--lower", box.lower, "Lower bounds a1,..,am")->required();
    decide->add_option("--upper", box.upper, "Upper bounds b1,..,bm")->required();
    decide->add_option("--w", box.w, "Target c1,..,cn")->required();
    decide->add_option("--rule", rule, "afr, wfr or auto")->check(CLI::IsMember({"afr", "wfr", "auto"}));
    decide->add_flag("--no-class-check", no_class_check, "Skip verifying the family's class");
    decide->callback([&] { action = [&] { return cmd_decide(ctx, path, box, rule, no_class_check); }; });

    std::string u;
    auto* certify = app.add_subcommand("certify", "Check a dual infeasibility certificate");
    certify->add_option("file", path, "Vector file")->required();
    certify->add_option("--lower", box.lower, "Lower bounds a1,..,am")->required();
    certify->add_option("--upper", box.upper, "Upper bounds b1,..,bm")->required();
    certify->add_option("--w", box.w, "Target c1,..,cn")->required();
    certify->add_option("--u", u, "Direction q1,..,qn (rationals p/q allowed)")->required();
    certify->callback([&] { action = [&] { return cmd_certify(ctx, path, box, u); }; });

    std::string check = "both";
    bool cross = false;
    auto* graph = app.add_subcommand("graph", "Odd-cycle characterizations of an edge-list graph");
    graph->add_option("file", path, "Graph edge-list file")->required();
    graph->add_option("--check", check, "almost, weak or both")->check(CLI::IsMember({"almost", "weak", "both"}));
    graph->add_flag("--cross-validate", cross, "Compare against the vector classifiers");
    graph->callback([&] { action = [&] { return cmd_graph(ctx, path, check, cross); }; });

    std::string command;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (limit) ctx.limits = Limits::uniform(limit);
        for (auto* sub : app.get_subcommands()) command = sub->get_name();
        return action();
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    } catch (const Error& e) {
        json r = ctx.report(command);
        r["error"] = json{{"kind", kind_name(e.kind())}, {"message", e.what()}};
        out << r.dump(2) << '\n';
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}

}  // namespace farkas::cli
