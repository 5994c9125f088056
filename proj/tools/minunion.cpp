#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minunion/corpus.hpp"
#include "minunion/io.hpp"
#include "minunion/reductions.hpp"
#include "minunion/solvers.hpp"

using nlohmann::json;

namespace {

using namespace minunion;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

// Machine-readable output goes to stdout; -o saves a copy.
void emit(const std::string& text, const std::string& out_path) {
    const std::string body = text.ends_with("\n") ? text : text + "\n";
    std::cout << body;
    if (!out_path.empty()) write_file(out_path, body);
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct Options {
    std::string algo = "exact";
    std::string input;
    std::string cert;
    std::string shifts_path;
    std::string output;
    Value budget = -1;
    bool budget_set = false;
    unsigned threads = 0;
    std::uint64_t guard_limit = 100'000'000;
    Value radius = 0;
    bool radius_set = false;
    std::uint64_t seed = 1;
    std::uint64_t count = 100;
    Value ruler_n = 0;
};

SolveOptions solve_options(const Options& o) {
    SolveOptions so;
    so.guard_limit = o.guard_limit;
    so.threads = o.threads;
    if (o.radius_set) so.radius = o.radius;
    return so;
}

SolveResult dispatch_solver(const std::string& algo, const Instance& inst,
                            const SolveOptions& so) {
    if (algo == "exact") return solve_exact(inst, so);
    if (algo == "oracle") return solve_oracle(inst, so);
    return solve_greedy(inst, so);
}

int run_solve(const Options& o) {
    const std::string text = read_file(o.input);
    const Instance inst = parse_instance(text);
    Timer timer;
    const SolveResult result = dispatch_solver(o.algo, inst, solve_options(o));
    const RunReport report = make_run_report("solve", input_digest(text), inst, result, timer.ms());
    emit(report.to_json().dump(), o.output);
    std::cerr << o.algo << ": value " << result.value << ", explored " << result.explored
              << (result.optimal ? " (optimal)" : " (not proven optimal)") << ", "
              << report.wall_ms << " ms\n";
    return 0;
}

int run_reduce(const Options& o) {
    if (!o.budget_set) throw Error("reduce requires -k");
    const std::string text = read_file(o.input);
    const Graph g = parse_graph(text);
    const ReducedInstance ri = encode_vc(g, o.budget);
    const std::string instance_text = render_instance(ri.instance);

    json orientation = json::object();
    for (const auto& e : ri.edges) orientation[e.label] = {e.y, e.z};
    json report{{"command", "reduce"},
                {"input_digest", input_digest(text)},
                {"n", ri.n},
                {"s", ri.s},
                {"k", ri.k},
                {"threshold", ri.threshold},
                {"trivially_yes", ri.trivially_yes},
                {"ruler", ri.ruler.elements},
                {"labels", ri.instance.labels()},
                {"orientation", orientation},
                {"vertex_names", ri.vertex_names},
                {"instance_digest", input_digest(instance_text)}};
    if (!o.output.empty()) {
        write_file(o.output, instance_text);
        report["output"] = o.output;
    } else {
        report["instance_text"] = instance_text;
    }
    std::cout << report.dump() << "\n";
    std::cerr << "reduce: n=" << ri.n << " |A|=" << ri.instance.size()
              << " threshold=" << ri.threshold << (ri.trivially_yes ? " (trivially yes)" : "")
              << "\n";
    return 0;
}

int run_decode(const Options& o) {
    if (!o.budget_set) throw Error("decode requires -k");
    if (o.shifts_path.empty()) throw Error("decode requires --shifts");
    const std::string text = read_file(o.input);
    const Graph g = parse_graph(text);
    const ReducedInstance ri = encode_vc(g, o.budget);

    json shifts_json = json::parse(read_file(o.shifts_path));
    if (shifts_json.is_object() && shifts_json.contains("shifts"))
        shifts_json = shifts_json["shifts"];
    const ShiftVector shifts = shifts_from_json(shifts_json);

    const std::vector<Value> cover = decode_cover(ri, shifts);
    const Objective objective = evaluate(ri.instance, shifts);
    std::vector<std::string> names;
    names.reserve(cover.size());
    for (Value v : cover) names.push_back(ri.vertex_names.at(static_cast<std::size_t>(v - 1)));

    json report{{"command", "decode"},
                {"input_digest", input_digest(text)},
                {"value", objective.value},
                {"threshold", ri.threshold},
                {"achieved", objective.value <= ri.threshold},
                {"cover", cover},
                {"cover_names", names},
                {"cover_size", cover.size()}};
    emit(report.dump(), o.output);
    std::cerr << "decode: cover size " << cover.size() << " (value " << objective.value << ", threshold "
              << ri.threshold << ")\n";
    return 0;
}

int run_verify(const Options& o) {
    const std::string text = read_file(o.input);
    const Instance inst = parse_instance(text);
    const ParsedCertificate parsed = parse_certificate(read_file(o.cert));
    std::optional<Value> override;
    if (o.budget_set) override = o.budget;
    const Certificate cert = bind_certificate(parsed, inst, override);

    const bool verified = verify_certificate(inst, cert);
    const ShiftVector shifts =
        solve_weight_system(cert.tree.tree(), cert.tree.weights(), inst.label(0), 0);
    const Objective objective = evaluate(inst, shifts);

    json report{{"command", "verify"},
                {"input_digest", input_digest(text)},
                {"verified", verified},
                {"budget", cert.budget},
                {"achieved_value", objective.value},
                {"shifts", shifts_to_json(shifts)}};
    emit(report.dump(), o.output);
    std::cerr << (verified ? "verified" : "NOT verified") << ": certificate achieves "
              << objective.value << " against budget " << cert.budget << "\n";
    return verified ? 0 : 1;
}

int run_ruler(const Options& o) {
    const Ruler r = ruler(o.ruler_n);
    std::string line;
    for (std::size_t i = 0; i < r.elements.size(); ++i) {
        if (i) line += " ";
        line += std::to_string(r.elements[i]);
    }
    emit(line, o.output);
    std::cerr << "ruler " << r.n << ": " << r.elements.size() << " marks, span [1, "
              << r.elements.back() << "]\n";
    return 0;
}

int run_check_gadgets(const Options& o) {
    if (!o.budget_set) throw Error("check-gadgets requires -k");
    const std::string text = read_file(o.input);
    const Graph g = parse_graph(text);
    const ReducedInstance ri = encode_vc(g, o.budget);
    const GadgetReport gadget = check_gadget_lemmas(ri);

    json report{{"command", "check-gadgets"},
                {"input_digest", input_digest(text)},
                {"n", ri.n},
                {"checks", gadget.checks},
                {"ok", gadget.ok()},
                {"violations", gadget.violations}};
    emit(report.dump(), o.output);
    std::cerr << "check-gadgets: " << gadget.checks << " checks, " << gadget.violations.size()
              << " violations\n";
    return gadget.ok() ? 0 : 1;
}

int run_bench(const Options& o) {
    std::mt19937_64 rng(o.seed);
    std::string csv = "instance,method,value,explored,milliseconds\n";
    std::size_t greedy_hits = 0;
    for (std::uint64_t i = 0; i < o.count; ++i) {
        const Instance inst = random_instance(rng);
        const std::string name = "rand-" + std::to_string(o.seed) + "-" + std::to_string(i);
        std::int64_t exact_value = 0;
        for (const char* algo : {"exact", "oracle", "greedy"}) {
            Timer timer;
            const SolveResult result = dispatch_solver(algo, inst, solve_options(o));
            csv += name;
            csv += ",";
            csv += algo;
            csv += "," + std::to_string(result.value) + "," + std::to_string(result.explored) +
                   "," + std::to_string(timer.ms()) + "\n";
            if (std::string(algo) == "exact") exact_value = result.value;
            if (std::string(algo) == "greedy" && result.value == exact_value) ++greedy_hits;
        }
    }
    emit(csv, o.output);
    std::cerr << "bench: " << o.count << " instances, greedy matched the optimum on "
              << greedy_hits << "/" << o.count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minunion: align integer sets by translation to minimize the union"};
    app.require_subcommand(0, 1);

    Options o;

    auto add_common = [&](CLI::App* cmd, bool with_solver_flags) {
        cmd->add_option("-o,--output", o.output, "also write the machine-readable output here");
        if (with_solver_flags) {
            cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
            cmd->add_option("--guard-limit", o.guard_limit,
                            "refuse searches above this many candidates");
        }
    };

    CLI::App* solve = app.add_subcommand("solve", "minimize the shifted union of an instance");
    solve->add_option("-i,--input", o.input, "instance file ('-' for stdin)")->required();
    solve->add_option("--algo", o.algo, "solver to run")
        ->check(CLI::IsMember({"exact", "oracle", "greedy"}));
    solve->add_option("--radius", o.radius, "oracle box radius override")
        ->each([&](const std::string&) { o.radius_set = true; });
    add_common(solve, true);

    CLI::App* reduce = app.add_subcommand("reduce", "encode a vertex-cover question as an instance");
    reduce->add_option("-i,--input", o.input, "graph file")->required();
    reduce->add_option("-k", o.budget, "cover budget")
        ->required()
        ->each([&](const std::string&) { o.budget_set = true; });
    add_common(reduce, false);

    CLI::App* decode = app.add_subcommand("decode", "read a vertex cover out of a solution");
    decode->add_option("-i,--input", o.input, "graph file")->required();
    decode->add_option("-k", o.budget, "cover budget used when encoding")
        ->required()
        ->each([&](const std::string&) { o.budget_set = true; });
    decode->add_option("--shifts", o.shifts_path,
                       "shift vector: a solve report or a bare JSON object")
        ->required();
    add_common(decode, false);

    CLI::App* verify = app.add_subcommand("verify", "check a weighted-tree certificate");
    verify->add_option("-i,--input", o.input, "instance file")->required();
    verify->add_option("--cert", o.cert, "certificate file")->required();
    verify->add_option("-k", o.budget, "budget override")->each([&](const std::string&) {
        o.budget_set = true;
    });
    add_common(verify, false);

    CLI::App* ruler_cmd = app.add_subcommand("ruler", "print the n-mark ruler");
    ruler_cmd->add_option("n", o.ruler_n, "number of marks")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(ruler_cmd, false);

    CLI::App* gadgets = app.add_subcommand("check-gadgets", "audit an encoded instance's gadgets");
    gadgets->add_option("-i,--input", o.input, "graph file")->required();
    gadgets->add_option("-k", o.budget, "cover budget")
        ->required()
        ->each([&](const std::string&) { o.budget_set = true; });
    add_common(gadgets, false);

    CLI::App* bench = app.add_subcommand("bench", "CSV timings over a seeded random corpus");
    bench->add_option("--seed", o.seed, "corpus seed");
    bench->add_option("--count", o.count, "number of instances");
    add_common(bench, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*solve) return run_solve(o);
        if (*reduce) return run_reduce(o);
        if (*decode) return run_decode(o);
        if (*verify) return run_verify(o);
        if (*ruler_cmd) return run_ruler(o);
        if (*gadgets) return run_check_gadgets(o);
        if (*bench) return run_bench(o);
        std::cerr << app.help();
        return 2;
    } catch (const minunion::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const minunion::GuardLimitError& e) {
        nlohmann::json err{{"error", "guard-limit"},
                           {"candidates", e.candidate_count()},
                           {"limit", e.limit()}};
        std::cout << err.dump() << "\n";
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const minunion::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
