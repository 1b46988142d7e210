// lpm — lattice path matroid / polymatroid toolkit CLI.
//
// Exit codes: 0 success; 1 a hard structural assertion failed (a dump file
// is always written and its path printed); 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "lpm/errors.hpp"
#include "lpm/render.hpp"
#include "lpm/report.hpp"
#include "lpm/toric.hpp"

using namespace lpm;
using nlohmann::json;

namespace {

struct Options {
    std::string alpha, omega, path, mu_text, left, right, paths_csv;
    std::string convention = "HI";
    std::string format = "text";
    std::string output;
    std::string dump_path = "lpm-dump.json";
    bool matroid = false;
    bool list = false;
    int n_hint = -1;
    int t = 2;
    int t_max = 3;
    int jobs = 1;
};

// Written atomically: temp file in place, then rename.
void write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw InputError("cannot open output file " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw InputError("cannot rename " + tmp + " to " + path);
}

void deliver(const Options& opt, const std::string& content) {
    if (opt.output.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        write_file(opt.output, content);
    }
}

LatticePath parse_path_arg(const std::string& text, int n_hint) {
    if (text.find('{') != std::string::npos) {
        if (n_hint < 0) throw InputError("the north-set path form needs --n");
        return LatticePath::from_north_set(parse_north_set(text), n_hint);
    }
    return LatticePath::parse(text);
}

BoundingPair bounds_of(const Options& opt) {
    if (opt.alpha.empty() || opt.omega.empty()) throw InputError("--alpha and --omega are required");
    return BoundingPair::parse(opt.alpha, opt.omega);
}

PolymatroidInstance instance_of(const Options& opt) {
    BoundingPair bp = bounds_of(opt);
    if (opt.matroid) return PolymatroidInstance::matroid_embedding(bp);
    return PolymatroidInstance(std::move(bp));
}

std::vector<Convention> conventions_of(const Options& opt) {
    if (opt.convention == "both" || opt.convention == "BOTH")
        return {Convention::HI, Convention::LO};
    return {parse_convention(opt.convention)};
}

std::string ordering_name(Ordering o) {
    if (o == Ordering::Less) return "less";
    if (o == Ordering::Greater) return "greater";
    return "equal";
}

json instance_json(const PolymatroidInstance& inst) {
    return json{{"alpha", inst.bounds().alpha().word()},
                {"omega", inst.bounds().omega().word()},
                {"matroid", inst.squarefree_only()},
                {"n", inst.n()},
                {"r", inst.rank()}};
}

// ---------------------------------------------------------------- commands

int cmd_paths(const Options& opt) {
    BoundingPair bp = bounds_of(opt);
    auto paths = enumerate_paths(bp);
    if (opt.format == "json") {
        json words = json::array();
        for (const LatticePath& p : paths) words.push_back(p.word());
        deliver(opt, json{{"alpha", bp.alpha().word()},
                          {"omega", bp.omega().word()},
                          {"count", paths.size()},
                          {"paths", std::move(words)}}
                         .dump(2));
    } else {
        std::string out;
        if (opt.list) {
            for (const LatticePath& p : paths) out += p.word() + "\n";
        } else {
            out = std::to_string(paths.size());
        }
        deliver(opt, out);
    }
    return 0;
}

int cmd_bases(const Options& opt) {
    PolymatroidInstance inst = instance_of(opt);
    if (opt.format == "json") {
        json bases = json::array();
        for (const Monomial& b : inst.bases()) bases.push_back(b.str());
        deliver(opt, json{{"instance", instance_json(inst)},
                          {"count", inst.bases().size()},
                          {"bases", std::move(bases)}}
                         .dump(2));
    } else {
        std::string out;
        for (const Monomial& b : inst.bases()) out += b.str() + "\n";
        deliver(opt, out);
    }
    return 0;
}

int cmd_monomial(const Options& opt) {
    LatticePath p = parse_path_arg(opt.path, opt.n_hint);
    Monomial m = path_monomial(p);
    if (opt.format == "json") {
        deliver(opt, json{{"path", p.word()},
                          {"north_set", format_north_set(p.north_positions())},
                          {"monomial", m.str()},
                          {"exponents", m.exponents()}}
                         .dump(2));
    } else {
        deliver(opt, m.str());
    }
    return 0;
}

int cmd_embed(const Options& opt) {
    LatticePath p = parse_path_arg(opt.path, opt.n_hint);
    LatticePath bar = embed_squarefree(p);
    if (opt.format == "json") {
        deliver(opt, json{{"path", p.word()},
                          {"embedded", bar.word()},
                          {"north_set", format_north_set(bar.north_positions())},
                          {"monomial", path_monomial(bar).str()}}
                         .dump(2));
    } else {
        deliver(opt, bar.word() + " " + format_north_set(bar.north_positions()) + " " +
                         path_monomial(bar).str());
    }
    return 0;
}

int cmd_lvector(const Options& opt) {
    LatticePath p = parse_path_arg(opt.path, opt.n_hint);
    LVector v = l_vector(p);
    if (opt.format == "json") {
        deliver(opt, json{{"path", p.word()}, {"lvector", v}}.dump(2));
    } else {
        deliver(opt, format_lvector(v));
    }
    return 0;
}

int cmd_compare(const Options& opt) {
    PolymatroidInstance plain{bounds_of(opt)};
    // Factors are read over the plain instance; --matroid switches to the
    // embedded comparison of the same factors.
    BaseRingMonomial left(parse_vertex(plain, opt.left));
    BaseRingMonomial right(parse_vertex(plain, opt.right));
    std::string out;
    for (Convention conv : conventions_of(opt)) {
        Ordering o = opt.matroid ? compare_L_matroid(left, right, conv) : compare_l(left, right, conv);
        if (!out.empty()) out += "\n";
        out += convention_name(conv) + ": " + ordering_name(o);
    }
    deliver(opt, out);
    return 0;
}

int cmd_thin(const Options& opt) {
    PolymatroidInstance inst = instance_of(opt);
    Monomial mu = Monomial::parse(opt.mu_text, inst.nvars());
    auto thin = greedy_thin_vertex(inst, mu, opt.t);
    if (opt.format == "json") {
        json j{{"instance", instance_json(inst)}, {"mu", mu.str()}, {"t", opt.t}};
        if (thin) {
            j["thin"] = thin->vertex_str();
            json words = json::array();
            for (const LatticePath& f : thin->factors()) words.push_back(f.word());
            j["paths"] = std::move(words);
        } else {
            j["thin"] = nullptr;
        }
        deliver(opt, j.dump(2));
    } else if (thin) {
        std::string out = thin->vertex_str();
        for (const LatticePath& f : thin->factors()) out += "\n" + f.word();
        deliver(opt, out);
    } else {
        deliver(opt, "infeasible");
    }
    return 0;
}

int cmd_fiber(const Options& opt) {
    PolymatroidInstance inst = instance_of(opt);
    Monomial mu = Monomial::parse(opt.mu_text, inst.nvars());
    ExchangeGraph g = build_graph(inst, mu);
    Convention conv = conventions_of(opt).front();
    if (opt.format == "dot") {
        deliver(opt, emit_dot(g, conv));
        return 0;
    }
    ConnectivityReport cr = is_connected(g);
    if (opt.format == "json") {
        json verts = json::array();
        json thin_flags = json::array();
        for (const Vertex& v : g.vertices) {
            verts.push_back(v.vertex_str());
            thin_flags.push_back(is_thin(v).thin);
        }
        json edges = json::array();
        for (const auto& e : g.edges)
            edges.push_back(json{{"u", e.u}, {"v", e.v}, {"move", format_move(e.move)}});
        deliver(opt, json{{"instance", instance_json(inst)},
                          {"mu", mu.str()},
                          {"vertices", std::move(verts)},
                          {"thin", std::move(thin_flags)},
                          {"edges", std::move(edges)},
                          {"connected", cr.connected},
                          {"components", cr.components}}
                         .dump(2));
    } else {
        std::string out = "vertices: " + std::to_string(g.vertices.size()) +
                          "\nedges: " + std::to_string(g.edges.size()) +
                          "\nconnected: " + (cr.connected ? "yes" : "no");
        for (const Vertex& v : g.vertices)
            out += "\n" + v.vertex_str() + (is_thin(v).thin ? "  [thin]" : "");
        deliver(opt, out);
    }
    return 0;
}

int run_hard_checked(const Options& opt, const std::vector<SweepReport>& reports,
                     const std::string& rendered) {
    deliver(opt, rendered);
    for (const SweepReport& rep : reports) {
        if (rep.hard_failure()) {
            json dump = json::array();
            for (const SweepReport& r : reports) dump.push_back(to_json(r));
            write_file(opt.dump_path, dump.dump(2));
            std::cerr << "hard assertion failed; dump written: " << opt.dump_path << "\n";
            return 1;
        }
    }
    return 0;
}

int cmd_sweep(const Options& opt) {
    PolymatroidInstance inst = instance_of(opt);
    std::vector<Convention> convs = conventions_of(opt);
    std::vector<SweepReport> reports = verify_white_multi(inst, opt.t_max, convs, opt.jobs);
    if (opt.format == "json") {
        json out = json::array();
        for (const SweepReport& rep : reports) out.push_back(to_json(rep));
        return run_hard_checked(opt, reports, out.dump(2));
    }
    std::string out;
    for (const SweepReport& rep : reports) {
        out += convention_name(rep.convention) + ": fibers=" + std::to_string(rep.fibers) +
               " connected=" + std::to_string(rep.connected_fibers) +
               " thin_anomalies=" + std::to_string(rep.thin_anomalies) +
               " greedy_mismatches=" + std::to_string(rep.greedy_mismatches) +
               " nonunique_sinks=" + std::to_string(rep.nonunique_sink_fibers) +
               " nonthin_sinks=" + std::to_string(rep.nonthin_sink_fibers) +
               " descent_gaps=" + std::to_string(rep.descent_gap_fibers) + "\n";
    }
    return run_hard_checked(opt, reports, out);
}

int cmd_groebner(const Options& opt) {
    PolymatroidInstance inst = instance_of(opt);
    std::string out;
    json jout = json::array();
    for (Convention conv : conventions_of(opt)) {
        BuchbergerReport rep = buchberger_check(inst, conv, opt.jobs);
        if (opt.format == "json") {
            json j = to_json(rep);
            j["instance"] = instance_json(inst);
            jout.push_back(std::move(j));
        } else {
            out += convention_name(conv) + ": generators=" + std::to_string(rep.generators) +
                   " pairs=" + std::to_string(rep.pairs) + " zeros=" + std::to_string(rep.zeros) +
                   " failures=" + std::to_string(rep.pairs - rep.zeros) + "\n";
        }
    }
    deliver(opt, opt.format == "json" ? jout.dump(2) : out);
    return 0;
}

int cmd_hvector(const Options& opt) {
    BoundingPair bp = bounds_of(opt);
    auto h = matroid_h_vector(bp);
    json j{{"alpha", bp.alpha().word()}, {"omega", bp.omega().word()}, {"h_vector", h}};
    std::string text = "h-vector: (";
    for (size_t i = 0; i < h.size(); ++i) text += (i ? "," : "") + std::to_string(h[i]);
    text += ")";
    if (is_coloop_free(bp)) {
        BoundingPair shifted(plus_shift(bp.alpha()), bp.omega());
        auto f = degree_sequence(PolymatroidInstance{shifted});
        j["shifted_degree_sequence"] = f;
        j["coloop_free"] = true;
        j["match"] = (h == f);
        text += "\nshifted degree sequence: (";
        for (size_t i = 0; i < f.size(); ++i) text += (i ? "," : "") + std::to_string(f[i]);
        text += ")";
        text += std::string("\nmatch: ") + (h == f ? "yes" : "no");
    } else {
        j["coloop_free"] = false;
    }
    deliver(opt, opt.format == "json" ? j.dump(2) : text);
    return 0;
}

int cmd_borel_check(const Options& opt) {
    if (opt.omega.empty()) throw InputError("--omega is required");
    LatticePath omega = LatticePath::parse(opt.omega);
    BoundingPair bp(BoundingPair::free_pair(omega.n(), omega.r()).alpha(), omega);
    PolymatroidInstance inst{bp};
    auto closure = borel_closure(path_monomial(omega));
    std::vector<Monomial> bases = inst.bases();
    std::sort(bases.begin(), bases.end());
    bool match = bases == closure;
    if (opt.format == "json") {
        deliver(opt, json{{"omega", omega.word()},
                          {"m_omega", path_monomial(omega).str()},
                          {"bases", bases.size()},
                          {"borel_closure", closure.size()},
                          {"match", match}}
                         .dump(2));
    } else {
        deliver(opt, std::string(match ? "ok" : "MISMATCH") + " (" + std::to_string(bases.size()) +
                         " bases, " + std::to_string(closure.size()) + " closure generators)");
    }
    if (!match) {
        json dump{{"omega", omega.word()}, {"error", "borel closure identity failed"}};
        write_file(opt.dump_path, dump.dump(2));
        std::cerr << "hard assertion failed; dump written: " << opt.dump_path << "\n";
        return 1;
    }
    return 0;
}

int cmd_render(const Options& opt) {
    BoundingPair bp = bounds_of(opt);
    std::vector<LatticePath> paths;
    if (!opt.paths_csv.empty()) {
        size_t pos = 0;
        while (pos <= opt.paths_csv.size()) {
            size_t comma = opt.paths_csv.find(',', pos);
            std::string word = opt.paths_csv.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!word.empty()) paths.push_back(LatticePath::parse(word));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    deliver(opt, render_paths_svg(paths, bp));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice path matroid & polymatroid toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_instance_flags = [&opt](CLI::App* cmd) {
        cmd->add_option("--alpha", opt.alpha, "upper bounding path (step word)");
        cmd->add_option("--omega", opt.omega, "lower bounding path (step word)");
        cmd->add_flag("--matroid", opt.matroid, "use the squarefree matroid embedding");
    };
    auto add_common = [&opt](CLI::App* cmd, const char* formats) {
        cmd->add_option("--format", opt.format, std::string("output format: ") + formats);
        cmd->add_option("--output", opt.output, "write output to a file (atomic)");
        cmd->add_option("--dump", opt.dump_path, "dump file for hard failures");
    };

    CLI::App* paths = app.add_subcommand("paths", "count (or list) the bounded paths");
    add_instance_flags(paths);
    add_common(paths, "text|json");
    paths->add_flag("--list", opt.list, "list step words instead of the count");

    CLI::App* bases = app.add_subcommand("bases", "list the basis monomials");
    add_instance_flags(bases);
    add_common(bases, "text|json");

    CLI::App* monomial = app.add_subcommand("monomial", "path monomial m(sigma)");
    monomial->add_option("--path", opt.path, "step word or north set {..}")->required();
    monomial->add_option("--n", opt.n_hint, "east step count (north-set form only)");
    add_common(monomial, "text|json");

    CLI::App* embed = app.add_subcommand("embed", "squarefree embedding sigma-bar");
    embed->add_option("--path", opt.path, "step word or north set {..}")->required();
    embed->add_option("--n", opt.n_hint, "east step count (north-set form only)");
    add_common(embed, "text|json");

    CLI::App* lvector = app.add_subcommand("lvector", "topmost-north-step vector");
    lvector->add_option("--path", opt.path, "step word or north set {..}")->required();
    lvector->add_option("--n", opt.n_hint, "east step count (north-set form only)");
    add_common(lvector, "text|json");

    CLI::App* compare = app.add_subcommand("compare", "compare two base ring monomials");
    add_instance_flags(compare);
    compare->add_option("--left", opt.left, "vertex form {m1, m2, ...}")->required();
    compare->add_option("--right", opt.right, "vertex form {m1, m2, ...}")->required();
    compare->add_option("--convention", opt.convention, "HI | LO | both");
    add_common(compare, "text");

    CLI::App* thin = app.add_subcommand("thin", "greedy thin vertex of a fiber");
    add_instance_flags(thin);
    thin->add_option("--mu", opt.mu_text, "fiber monomial")->required();
    thin->add_option("--t", opt.t, "factor count")->required();
    add_common(thin, "text|json");

    CLI::App* fiber = app.add_subcommand("fiber", "exchange graph of a fiber");
    add_instance_flags(fiber);
    fiber->add_option("--mu", opt.mu_text, "fiber monomial")->required();
    fiber->add_option("--convention", opt.convention, "HI | LO (dot orientation)");
    add_common(fiber, "text|json|dot");

    CLI::App* sweep = app.add_subcommand("sweep", "audit every fiber up to --tmax");
    add_instance_flags(sweep);
    sweep->add_option("--tmax", opt.t_max, "largest factor count (default 3)");
    sweep->add_option("--convention", opt.convention, "HI | LO | both");
    sweep->add_option("--jobs", opt.jobs, "worker threads");
    add_common(sweep, "text|json");

    CLI::App* groebner = app.add_subcommand("groebner", "reduce every S-pair of the exchange binomials");
    add_instance_flags(groebner);
    groebner->add_option("--convention", opt.convention, "HI | LO | both");
    groebner->add_option("--jobs", opt.jobs, "worker threads");
    add_common(groebner, "text|json");

    CLI::App* hvector = app.add_subcommand("hvector", "matroid h-vector (and the shifted degree sequence)");
    add_instance_flags(hvector);
    add_common(hvector, "text|json");

    CLI::App* borel = app.add_subcommand("borel-check", "bases under the full upper path vs the Borel closure");
    borel->add_option("--omega", opt.omega, "lower bounding path")->required();
    add_common(borel, "text|json");

    CLI::App* render = app.add_subcommand("render", "SVG of paths on the bounding grid");
    add_instance_flags(render);
    render->add_option("--paths", opt.paths_csv, "comma-separated step words to draw bold");
    add_common(render, "svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (paths->parsed()) return cmd_paths(opt);
        if (bases->parsed()) return cmd_bases(opt);
        if (monomial->parsed()) return cmd_monomial(opt);
        if (embed->parsed()) return cmd_embed(opt);
        if (lvector->parsed()) return cmd_lvector(opt);
        if (compare->parsed()) return cmd_compare(opt);
        if (thin->parsed()) return cmd_thin(opt);
        if (fiber->parsed()) return cmd_fiber(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (groebner->parsed()) return cmd_groebner(opt);
        if (hvector->parsed()) return cmd_hvector(opt);
        if (borel->parsed()) return cmd_borel_check(opt);
        if (render->parsed()) return cmd_render(opt);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        json dump{{"error", e.what()}};
        write_file(opt.dump_path, dump.dump(2));
        std::cerr << "invariant violated: " << e.what() << "\ndump written: " << opt.dump_path << "\n";
        return 1;
    }
    return 2;
}
