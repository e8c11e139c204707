#include "dartcover/cli.hpp"

#include "dartcover/constructions.hpp"
#include "dartcover/dichotomy.hpp"
#include "dartcover/disconnected.hpp"
#include "dartcover/errors.hpp"
#include "dartcover/graph_io.hpp"
#include "dartcover/json_io.hpp"
#include "dartcover/stronger.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

namespace dartcover {

namespace {

void emit_graph(const Graph& g, const std::string& path, std::ostream& out)
{
    if (path.empty())
        out << serialize_graph(g);
    else
        write_graph_file(path, g);
}

int need(const std::vector<int>& v, std::size_t n, const char* what)
{
    if (v.size() != n)
        throw std::invalid_argument(std::string(what) + " takes " + std::to_string(n) + " integer(s)");
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Graph covering decisions on multigraphs with semi-edges", "dartcover"};
    app.require_subcommand(1);

    std::function<int()> action;

    std::string g_path, h_path, out_path, semantics = "lbhom";
    bool want_witness = false;
    int budget = 96, jobs = 1, max_n = 0, bins = 0;
    std::vector<int> numbers;

    auto* check = app.add_subcommand("check", "decide whether G covers H under a semantics");
    check->add_option("G", g_path)->required();
    check->add_option("H", h_path)->required();
    check->add_option("--semantics", semantics)->check(CLI::IsMember({"lbhom", "surjective", "equitable", "cover"}));
    check->add_flag("--witness", want_witness);
    check->add_option("--budget", budget, "dart budget of the exact search")->check(CLI::PositiveNumber);
    check->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    check->callback([&] {
        action = [&] {
            const Graph g = read_graph_file(g_path);
            const Graph h = read_graph_file(h_path);
            const Decision d = decide(g, h, *parse_semantics(semantics), want_witness, {budget, jobs});
            out << decision_json(g, h, d).dump(2) << '\n';
            err << semantics << ": " << (d.answer ? "yes" : "no");
            if (!d.reason.empty())
                err << " (" << d.reason << ')';
            err << '\n';
            return d.answer ? exit_code::yes : exit_code::no;
        };
    });

    auto* pattern = app.add_subcommand("pattern", "print the covering pattern of G and H");
    pattern->add_option("G", g_path)->required();
    pattern->add_option("H", h_path)->required();
    pattern->add_option("--budget", budget)->check(CLI::PositiveNumber);
    pattern->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    pattern->callback([&] {
        action = [&] {
            const Graph g = read_graph_file(g_path);
            const Graph h = read_graph_file(h_path);
            out << pattern_json(build_pattern(g, h, default_cell_decider(budget), jobs)).dump(2) << '\n';
            return exit_code::yes;
        };
    });

    auto* cls = app.add_subcommand("classify", "P / NP-complete verdict for H-Cover");
    cls->add_option("H", h_path)->required();
    cls->callback([&] {
        action = [&] {
            const Classification c = classify(read_graph_file(h_path));
            out << classification_json(c).dump(2) << '\n';
            err << to_string(c.verdict) << '\n';
            return c.verdict == Verdict::P ? exit_code::yes : exit_code::np_complete;
        };
    });

    auto* dc = app.add_subcommand("double-cover", "canonical double cover of G");
    dc->add_option("G", g_path)->required();
    dc->add_option("--out", out_path);
    dc->callback([&] {
        action = [&] {
            emit_graph(double_cover(read_graph_file(g_path)).graph, out_path, out);
            return exit_code::yes;
        };
    });

    auto* st = app.add_subcommand("stronger", "search small simple covers of A that miss B");
    st->add_option("A", g_path)->required();
    st->add_option("B", h_path)->required();
    st->add_option("--max-n", max_n)->required()->check(CLI::NonNegativeNumber);
    st->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    st->add_option("--out", out_path, "counterexample file")->default_str("counterexample.graph");
    st->callback([&] {
        action = [&] {
            const StrongerReport r = check_stronger(read_graph_file(g_path), read_graph_file(h_path), max_n, jobs);
            out << stronger_json(r).dump(2) << '\n';
            if (!r.counterexample) {
                err << "verified up to " << max_n << " vertices\n";
                return exit_code::yes;
            }
            const std::string path = out_path.empty() ? "counterexample.graph" : out_path;
            write_graph_file(path, *r.counterexample);
            err << "counterexample on " << r.counterexample->num_vertices() << " vertices written to " << path << '\n';
            return exit_code::no;
        };
    });

    auto* gen = app.add_subcommand("gen", "write a standard graph");
    gen->require_subcommand(1);
    gen->add_option("--out", out_path);
    auto add_gen = [&](const char* name, const char* help, std::size_t arity, std::function<Graph()> build) {
        auto* sub = gen->add_subcommand(name, help);
        if (arity > 0)
            sub->add_option("params", numbers)->expected(static_cast<int>(arity))->required()->check(
                CLI::NonNegativeNumber);
        sub->callback([&, build, name, arity] {
            action = [&, build, name, arity] {
                need(numbers, arity, name);
                emit_graph(build(), out_path, out);
                return exit_code::yes;
            };
        });
    };
    add_gen("f", "F(b,c): b semi-edges, c loops", 2, [&] { return build_F(numbers[0], numbers[1]); });
    add_gen("w", "W(k,m,l,p,q)", 5,
            [&] { return build_W(numbers[0], numbers[1], numbers[2], numbers[3], numbers[4]); });
    add_gen("wd", "WD(m,l,m2)", 3, [&] { return build_WD(numbers[0], numbers[1], numbers[2]); });
    add_gen("cycle", "cycle on n vertices", 1, [&] { return cycle(numbers[0]); });
    add_gen("complete", "K_n", 1, [&] { return complete(numbers[0]); });
    add_gen("bipartite", "K_{a,b}", 2, [&] { return complete_bipartite(numbers[0], numbers[1]); });
    add_gen("petersen", "Petersen graph", 0, [] { return petersen(); });

    auto* bp = gen->add_subcommand("binpacking", "equitable-cover instance: item sizes, --bins q");
    bp->add_option("sizes", numbers)->required()->check(CLI::PositiveNumber);
    bp->add_option("--bins", bins)->required()->check(CLI::NonNegativeNumber);
    bp->callback([&] {
        action = [&] {
            const auto [g, h] = gen_binpacking({numbers, bins});
            if (out_path.empty()) {
                out << "# G\n" << serialize_graph(g) << "# H\n" << serialize_graph(h);
            }
            else {
                write_graph_file(out_path + ".G.graph", g);
                write_graph_file(out_path + ".H.graph", h);
            }
            return exit_code::yes;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_code::usage;
    }

    try {
        return action();
    }
    catch (const ResourceLimit& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return exit_code::resource;
    }
    catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return exit_code::usage;
    }
    catch (const std::invalid_argument& e) {
        err << "error: invalid-argument: " << e.what() << '\n';
        return exit_code::usage;
    }
}

}  // namespace dartcover
