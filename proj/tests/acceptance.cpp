// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
// Usage: acceptance <path-to-lpm-cli>
// The CLI path is needed for the criteria that exercise the binary
// surface (1 and 9). Reports for the audit criteria are written under
// ./acceptance_reports/.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lpm/report.hpp"
#include "lpm/toric.hpp"

using namespace lpm;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
int g_jobs = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const std::string& out_file) {
    std::string cmd = g_cli + " " + args + " > " + out_file + " 2>/dev/null";
    return std::system(cmd.c_str());
}

std::vector<BoundingPair> all_bounding_pairs(int n, int r) {
    auto paths = enumerate_paths(BoundingPair::free_pair(n, r));
    std::vector<BoundingPair> out;
    for (const auto& a : paths)
        for (const auto& o : paths)
            if (lies_above(a, o)) out.emplace_back(a, o);
    return out;
}

std::vector<Monomial> divisor_closure(const PolymatroidInstance& inst) {
    std::set<Monomial> out(inst.bases().begin(), inst.bases().end());
    std::vector<Monomial> queue(out.begin(), out.end());
    while (!queue.empty()) {
        Monomial m = queue.back();
        queue.pop_back();
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.exponent(i) == 0) continue;
            Monomial d = m.div_var(i);
            if (out.insert(d).second) queue.push_back(d);
        }
    }
    return {out.begin(), out.end()};
}

BoundingPair demo_pair() { return BoundingPair::parse("NNENENEE", "EENENENN"); }

struct AuditedInstance {
    std::string name;
    PolymatroidInstance inst;
};

// audit instance list: the free instances with n, r <= 4 and the demo pair
std::vector<AuditedInstance> sweep_instances() {
    std::vector<AuditedInstance> out;
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r)
            out.push_back({"free-" + std::to_string(n) + "-" + std::to_string(r),
                           PolymatroidInstance::free_instance(n, r)});
    out.push_back({"demo", PolymatroidInstance{demo_pair()}});
    return out;
}

// Shared audit results (computed once, reused by criteria 3, 4 and 8).
std::map<std::string, std::vector<SweepReport>> g_sweeps;

} // namespace

// ------------------------------------------------------------- criteria

static bool criterion1(std::string& detail) {
    std::string out = "acceptance_c1_paths.txt";
    if (run_cli("paths --alpha NNENENEE --omega EENENENN --format text", out) != 0) {
        detail = "CLI invocation failed";
        return false;
    }
    std::string text = slurp(out);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text != "54") {
        detail = "CLI paths printed '" + text + "', expected 54";
        return false;
    }
    PolymatroidInstance demo{demo_pair()};
    if (demo.bases().size() != 54 || !demo.is_basis(Monomial::parse("x1^3*x3", demo.nvars()))) {
        detail = "basis x1^3*x3 missing or count wrong";
        return false;
    }
    LatticePath sigma = LatticePath::parse("ENNNEENE");
    if (north_set(sigma) != std::vector<int>{2, 3, 4, 7}) {
        detail = "N(sigma) mismatch";
        return false;
    }
    LatticePath bar = embed_squarefree(sigma);
    if (path_monomial(bar).str() != "x2*x3*x4*x7" ||
        bar.north_positions() != std::vector<int>{3, 5, 7, 11}) {
        detail = "embedding round-trip mismatch";
        return false;
    }
    detail = "paths=54, basis x1^3*x3 present, N={2,3,4,7} -> m(bar)=x2*x3*x4*x7";
    return true;
}

static bool criterion2(std::string& detail) {
    long long instances = 0, witness_checks = 0;
    auto check_instance = [&](const PolymatroidInstance& inst) -> bool {
        if (!check_polymatroid_axioms(divisor_closure(inst)).ok) return false;
        for (const Monomial& m : inst.bases()) {
            for (const Monomial& mp : inst.bases()) {
                for (int i = 0; i < inst.nvars(); ++i) {
                    if (m.exponent(i) <= mp.exponent(i)) continue;
                    ++witness_checks;
                    try {
                        symmetric_exchange_witness(inst, m, mp, i);
                    } catch (const std::exception&) {
                        return false;
                    }
                }
            }
        }
        return true;
    };
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 3; ++r) {
            for (const BoundingPair& bp : all_bounding_pairs(n, r)) {
                ++instances;
                if (!check_instance(PolymatroidInstance{bp})) {
                    detail = "violation at alpha=" + bp.alpha().word() + " omega=" + bp.omega().word();
                    return false;
                }
            }
        }
    }
    ++instances;
    if (!check_instance(PolymatroidInstance{demo_pair()})) {
        detail = "violation on the demo instance";
        return false;
    }
    detail = std::to_string(instances) + " instances, " + std::to_string(witness_checks) +
             " exchange witnesses, zero violations";
    return true;
}

static bool criterion3(std::string& detail) {
    long long fibers = 0;
    for (const AuditedInstance& ai : sweep_instances()) {
        auto reports =
            verify_white_multi(ai.inst, 3, {Convention::HI, Convention::LO}, g_jobs);
        const SweepReport& rep = reports.front();
        if (rep.thin_anomalies != 0 || rep.greedy_mismatches != 0) {
            detail = ai.name + ": thin_anomalies=" + std::to_string(rep.thin_anomalies) +
                     " greedy_mismatches=" + std::to_string(rep.greedy_mismatches);
            return false;
        }
        fibers += rep.fibers;
        g_sweeps[ai.name] = std::move(reports);
    }
    PolymatroidInstance free54 = PolymatroidInstance::free_instance(5, 4);
    Monomial mu = Monomial::parse("x0*x1^3*x2*x3*x4^2", free54.nvars());
    auto greedy = greedy_thin_vertex(free54, mu, 2);
    std::vector<Vertex> brute;
    for (const Vertex& v : fiber_vertices(free54, mu))
        if (is_thin(v).thin) brute.push_back(v);
    if (!greedy || brute.size() != 1 || !(brute[0] == *greedy) ||
        greedy->vertex_str() != "{x0*x1*x2*x4, x1^2*x3*x4}") {
        detail = "(5,4) anchor fiber thin vertex mismatch";
        return false;
    }
    detail = std::to_string(fibers) +
             " fibers swept (t<=3): one thin vertex each, greedy = brute force; (5,4) anchor fiber exact";
    return true;
}

static bool criterion4(std::string& detail) {
    long long pairs = 0, fibers = 0;
    for (const AuditedInstance& ai : sweep_instances()) {
        const SweepReport& rep = g_sweeps.at(ai.name).front();
        if (rep.disconnected_fibers != 0) {
            detail = ai.name + ": disconnected fibers";
            return false;
        }
        // every vertex pair in every degree-2r fiber decomposes exactly
        auto gens = exchange_binomials(ai.inst);
        std::set<Monomial> mus;
        for (const Monomial& a : ai.inst.bases())
            for (const Monomial& b : ai.inst.bases()) mus.insert(a * b);
        for (const Monomial& mu : mus) {
            ExchangeGraph g = build_graph(ai.inst, mu);
            if (g.vertices.empty()) continue;
            ++fibers;
            for (size_t u = 0; u < g.vertices.size(); ++u) {
                for (size_t w = u + 1; w < g.vertices.size(); ++w) {
                    try {
                        Certificate cert =
                            decompose_kernel_binomial(ai.inst, g, gens, g.vertices[u], g.vertices[w]);
                        if (!verify_certificate(cert)) {
                            detail = ai.name + ": certificate expansion mismatch over " + mu.str();
                            return false;
                        }
                    } catch (const std::exception& e) {
                        detail = ai.name + ": " + e.what();
                        return false;
                    }
                    ++pairs;
                }
            }
        }
    }
    detail = "all sweep fibers connected; " + std::to_string(pairs) +
             " vertex pairs in " + std::to_string(fibers) +
             " degree-2r fibers certificate-decomposed, zero failures";
    return true;
}

static bool criterion5(std::string& detail) {
    long long checked = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
            for (const BoundingPair& bp : all_bounding_pairs(n, r)) {
                if (!is_coloop_free(bp)) continue;
                BoundingPair shifted(plus_shift(bp.alpha()), bp.omega());
                if (!(matroid_h_vector(bp) == degree_sequence(PolymatroidInstance{shifted}))) {
                    detail = "mismatch at alpha=" + bp.alpha().word() + " omega=" + bp.omega().word();
                    return false;
                }
                ++checked;
            }
        }
    }
    bool u12 = matroid_h_vector(BoundingPair::parse("NE", "EN")) == std::vector<long long>{1, 1};
    bool u13 = matroid_h_vector(BoundingPair::parse("NEE", "EEN")) == std::vector<long long>{1, 2};
    if (!u12 || !u13) {
        detail = "uniform matroid anchors failed";
        return false;
    }
    detail = std::to_string(checked) + " coloop-free pairs match exactly; U(1,2)->(1,1), U(1,3)->(1,2)";
    return true;
}

static bool criterion6(std::string& detail) {
    long long checked = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 4; ++r) {
            LatticePath alpha = BoundingPair::free_pair(n, r).alpha();
            for (const LatticePath& omega : enumerate_paths(BoundingPair::free_pair(n, r))) {
                PolymatroidInstance inst{BoundingPair(alpha, omega)};
                std::vector<Monomial> bases = inst.bases();
                std::sort(bases.begin(), bases.end());
                if (!(bases == borel_closure(path_monomial(omega)))) {
                    detail = "mismatch at omega=" + omega.word();
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " shifted instances equal their Borel closures";
    return true;
}

static bool criterion7(std::string& detail) {
    const unsigned seed = 20260811;
    long long violations = 0;
    std::string dump_path = "acceptance_c7_multiplicativity_dump.txt";
    std::ofstream dump;

    for (int which = 0; which < 2; ++which) {
        PolymatroidInstance inst =
            which == 0 ? PolymatroidInstance::free_instance(1, 2) : PolymatroidInstance::free_instance(2, 2);
        // exhaustive totality/antisymmetry pool: all monomials of degree <= 2
        std::vector<BaseRingMonomial> pool{BaseRingMonomial(inst.n(), inst.rank())};
        for (size_t a = 0; a < inst.bases().size(); ++a) {
            pool.push_back(BaseRingMonomial({inst.witness_at(static_cast<int>(a))}));
            for (size_t b = a; b < inst.bases().size(); ++b)
                pool.push_back(BaseRingMonomial(
                    {inst.witness_at(static_cast<int>(a)), inst.witness_at(static_cast<int>(b))}));
        }
        for (Convention conv : {Convention::HI, Convention::LO}) {
            for (const auto& x : pool) {
                for (const auto& y : pool) {
                    Ordering xy = compare_l(x, y, conv);
                    if (xy != reverse(compare_l(y, x, conv))) {
                        detail = "antisymmetry failed";
                        return false;
                    }
                    if ((xy == Ordering::Equal) != (x == y)) {
                        detail = "totality failed (distinct monomials compared equal)";
                        return false;
                    }
                }
                if (!x.is_unit() && compare_l(x, BaseRingMonomial(inst.n(), inst.rank()), conv) !=
                                        Ordering::Greater) {
                    detail = "1 is not the unique minimum";
                    return false;
                }
            }
            // acyclicity on random triples
            std::mt19937 rng(seed + static_cast<unsigned>(which * 2 + (conv == Convention::LO)));
            std::uniform_int_distribution<int> deg(1, 3);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(inst.bases().size()) - 1);
            auto random_brm = [&]() {
                std::vector<LatticePath> fs;
                int d = deg(rng);
                for (int k = 0; k < d; ++k) fs.push_back(inst.witness_at(pick(rng)));
                return BaseRingMonomial(std::move(fs));
            };
            auto leq = [](Ordering o) { return o != Ordering::Greater; };
            for (int trial = 0; trial < 10000; ++trial) {
                BaseRingMonomial a = random_brm(), b = random_brm(), c = random_brm();
                if (leq(compare_l(a, b, conv)) && leq(compare_l(b, c, conv)) &&
                    leq(compare_l(c, a, conv))) {
                    if (!(compare_l(a, b, conv) == Ordering::Equal &&
                          compare_l(b, c, conv) == Ordering::Equal)) {
                        detail = "comparison cycle found";
                        return false;
                    }
                }
                // multiplicativity audit on the same stream
                BaseRingMonomial q = random_brm();
                if (compare_l(a, b, conv) != compare_l(a * q, b * q, conv)) {
                    ++violations;
                    if (!dump.is_open()) dump.open(dump_path);
                    dump << "seed=" << seed << " instance=" << (which == 0 ? "FREE(1,2)" : "FREE(2,2)")
                         << " conv=" << convention_name(conv) << " trial=" << trial << " M=" << a.str()
                         << " M'=" << b.str() << " Q=" << q.str() << "\n";
                }
            }
        }
    }
    detail = "total, antisymmetric, acyclic on 4x10^4 triples; 1 minimal; multiplicativity violations: " +
             std::to_string(violations) + (violations ? " (dumped to " + dump_path + ")" : "");
    return true;
}

static bool criterion8(std::string& detail) {
    fs::create_directories("acceptance_reports");
    std::vector<AuditedInstance> instances = sweep_instances();
    for (const AuditedInstance& ai : sweep_instances())
        instances.push_back({"matroid-" + ai.name,
                             PolymatroidInstance::matroid_embedding(ai.inst.bounds())});

    long long clean_reports = 0, anomaly_reports = 0;
    for (const AuditedInstance& ai : instances) {
        std::vector<SweepReport> sweeps;
        if (auto it = g_sweeps.find(ai.name); it != g_sweeps.end()) {
            sweeps = it->second;
        } else {
            sweeps = verify_white_multi(ai.inst, 3, {Convention::HI, Convention::LO}, g_jobs);
        }
        for (const SweepReport& sweep : sweeps) {
            BuchbergerReport gb = buchberger_check(ai.inst, sweep.convention, g_jobs);
            nlohmann::json report = audit_json(sweep, gb);
            std::ofstream out("acceptance_reports/" + ai.name + "-" +
                              convention_name(sweep.convention) + ".json");
            out << report.dump(2) << "\n";

            if (sweep.hard_failure()) {
                detail = ai.name + ": hard sweep failure";
                return false;
            }
            // every recorded anomaly must carry a replayable dump
            long long anomalous_rows = 0;
            for (const FiberRow& row : sweep.rows)
                if (!row.connected || row.thin_count != 1 || !row.greedy_matches || !row.sink_unique ||
                    !row.sink_is_thin || row.descent_gap)
                    ++anomalous_rows;
            if (anomalous_rows > 0 &&
                sweep.anomalies.empty()) {
                detail = ai.name + ": anomalies counted but not dumped";
                return false;
            }
            for (const FiberDump& d : sweep.anomalies) {
                if (d.vertices.empty() || d.mu.empty()) {
                    detail = ai.name + ": dump is not replayable";
                    return false;
                }
            }
            long long failures = gb.pairs - gb.zeros;
            if (failures > 0 && gb.failures.empty()) {
                detail = ai.name + ": S-pair failures counted but not dumped";
                return false;
            }
            if (anomalous_rows == 0 && failures == 0) ++clean_reports;
            else ++anomaly_reports;
        }
    }
    // FREE(1,2) must be fully clean: one generator, no S-pairs, all zero.
    BuchbergerReport free12 = buchberger_check(PolymatroidInstance::free_instance(1, 2),
                                               Convention::HI, 1);
    if (free12.generators != 1 || free12.pairs != 0 || !free12.failures.empty()) {
        detail = "FREE(1,2) is not clean";
        return false;
    }
    // The probe fiber x0*x1^2*x2 over FREE(2,2) must be dumped under HI:
    // its unique sink is the non-thin vertex.
    {
        const SweepReport& hi22 = g_sweeps.at("free-2-2").front();
        bool probe_dumped = false;
        for (const FiberDump& d : hi22.anomalies) {
            if (d.mu == "x0*x1^2*x2" && d.reason.find("nonthin_sink") != std::string::npos)
                probe_dumped = true;
        }
        if (!probe_dumped) {
            detail = "probe fiber x0*x1^2*x2 not dumped under HI";
            return false;
        }
    }
    detail = std::to_string(instances.size()) + " instances x 2 conventions audited (reports in "
             "acceptance_reports/); FREE(1,2) clean (1 generator); clean reports: " +
             std::to_string(clean_reports) + ", reports with dumped anomalies: " +
             std::to_string(anomaly_reports);
    return true;
}

static bool criterion9(std::string& detail) {
    std::string args =
        "sweep --alpha NNENENEE --omega EENENENN --tmax 3 --convention both --jobs 2 --format json";
    if (run_cli(args + " --output acceptance_c9_a.json", "acceptance_c9_a.log") != 0 ||
        run_cli(args + " --output acceptance_c9_b.json", "acceptance_c9_b.log") != 0) {
        detail = "CLI sweep invocation failed";
        return false;
    }
    std::string a = slurp("acceptance_c9_a.json");
    std::string b = slurp("acceptance_c9_b.json");
    if (a.empty() || a != b) {
        detail = "consecutive sweep outputs differ";
        return false;
    }
    std::string args1 =
        "sweep --alpha NNENENEE --omega EENENENN --tmax 3 --convention both --jobs 1 --format json";
    if (run_cli(args1 + " --output acceptance_c9_c.json", "acceptance_c9_c.log") != 0) {
        detail = "CLI sweep invocation failed";
        return false;
    }
    if (slurp("acceptance_c9_c.json") != a) {
        detail = "job count changed the report bytes";
        return false;
    }
    detail = "byte-identical JSON across consecutive runs (and across --jobs 1 vs 2), " +
             std::to_string(a.size()) + " bytes";
    return true;
}

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    g_jobs = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));

    struct Item {
        const char* name;
        std::function<bool(std::string&)> fn;
    };
    std::vector<Item> items{
        {"criterion 1 (demo instance anchors)", criterion1},
        {"criterion 2 (axioms + exchange property)", criterion2},
        {"criterion 3 (thin vertex theory)", criterion3},
        {"criterion 4 (connectivity + certificates)", criterion4},
        {"criterion 5 (h-vector identity)", criterion5},
        {"criterion 6 (borel identity)", criterion6},
        {"criterion 7 (order sanity)", criterion7},
        {"criterion 8 (sink/groebner audit)", criterion8},
        {"criterion 9 (determinism)", criterion9},
    };

    int failed = 0;
    for (Item& item : items) {
        std::string detail;
        bool ok = false;
        try {
            ok = item.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s: %s — %s\n", item.name, ok ? "PASS" : "FAIL", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    std::printf("RESULT: %zu/%zu criteria passed\n", items.size() - static_cast<size_t>(failed),
                items.size());
    return failed == 0 ? 0 : 1;
}
