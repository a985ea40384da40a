// multifold: exact solvers, game strategies, and instance checks for
// multifold graph colouring (b-fold / list / online-list variants).

#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multifold/catalog.hpp"
#include "multifold/choosability.hpp"
#include "multifold/colour_solver.hpp"
#include "multifold/hypergraph.hpp"
#include "multifold/io.hpp"
#include "multifold/painting.hpp"
#include "multifold/verify.hpp"

namespace {

using namespace multifold;

constexpr int kExitWitness = 0;    // proven-positive
constexpr int kExitUsage = 2;      // bad inputs
constexpr int kExitResource = 3;   // timeout / state cap
constexpr int kExitNegative = 10;  // proven-negative

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

Graph resolve_graph(const std::string& uri) {
    if (uri.rfind("catalog:", 0) == 0) return catalog_graph(uri.substr(8));
    return graph_from_json(load_json_file(uri));
}

BFoldColouring resolve_partial(const std::string& uri, int n) {
    if (uri == "catalog:steinberg") return steinberg_instance().precolouring;
    return colouring_from_json(load_json_file(uri), n);
}

// Every command funnels its result through here so the --json document and
// the exit code stay consistent.
int emit(bool json_mode, const std::string& claim, const std::string& verdict,
         const json& witness, long long elapsed_ms, int code) {
    if (json_mode) {
        json doc;
        doc["claim"] = claim;
        doc["verdict"] = verdict;
        doc["witness"] = witness;
        doc["elapsed_ms"] = elapsed_ms;
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << claim << ": " << verdict << " (" << elapsed_ms << " ms)\n";
    }
    return code;
}

std::chrono::milliseconds parse_duration(const std::string& text) {
    std::size_t pos = 0;
    double value = std::stod(text, &pos);
    std::string unit = text.substr(pos);
    if (unit == "ms") return std::chrono::milliseconds(static_cast<long long>(value));
    if (unit == "m") return std::chrono::milliseconds(static_cast<long long>(value * 60'000));
    if (unit.empty() || unit == "s")
        return std::chrono::milliseconds(static_cast<long long>(value * 1000));
    throw std::invalid_argument("cannot parse duration '" + text + "'");
}

// ---------------------------------------------------------------------------

int run_colour(const std::string& uri, int a, int b, bool json_mode,
               const std::string& out) {
    Timer timer;
    Graph g = resolve_graph(uri);
    std::string claim = uri + " is (" + std::to_string(a) + "," + std::to_string(b) +
                        ")-colourable";
    auto w = solve_ab_colouring(g, a, b);
    if (!w) return emit(json_mode, claim, "not-colourable", nullptr, timer.ms(), kExitNegative);
    if (!is_proper_bfold(g, *w, b)) throw std::logic_error("witness failed re-verification");
    json jw = colouring_to_json(*w);
    if (!out.empty()) save_json_file(out, jw);
    return emit(json_mode, claim, "colourable", jw, timer.ms(), kExitWitness);
}

int run_list_colour(const std::string& uri, const std::string& lists_path, int b,
                    bool json_mode, const std::string& out) {
    Timer timer;
    Graph g = resolve_graph(uri);
    ListAssignment lists = lists_from_json(load_json_file(lists_path), g.vertex_count());
    std::string claim = uri + " has an (L," + std::to_string(b) + ")-colouring from " +
                        lists_path;
    auto w = solve_list_colouring(g, lists, b);
    if (!w) return emit(json_mode, claim, "not-colourable", nullptr, timer.ms(), kExitNegative);
    if (!is_proper_bfold(g, *w, b)) throw std::logic_error("witness failed re-verification");
    json jw = colouring_to_json(*w);
    if (!out.empty()) save_json_file(out, jw);
    return emit(json_mode, claim, "colourable", jw, timer.ms(), kExitWitness);
}

int run_extend(const std::string& uri, const std::string& partial_path, int universe,
               int b, bool json_mode, const std::string& out) {
    Timer timer;
    Graph g = resolve_graph(uri);
    BFoldColouring partial = resolve_partial(partial_path, g.vertex_count());
    std::vector<int> colours;
    for (int c = 1; c <= universe; ++c) colours.push_back(c);
    std::string claim = uri + " precolouring extends to a (" + std::to_string(universe) +
                        "," + std::to_string(b) + ")-colouring";
    auto w = extend_partial_colouring(g, partial, colours, b);
    if (!w)
        return emit(json_mode, claim, "not-extendable", nullptr, timer.ms(), kExitNegative);
    if (!is_proper_bfold(g, *w, b)) throw std::logic_error("witness failed re-verification");
    json jw = colouring_to_json(*w);
    if (!out.empty()) save_json_file(out, jw);
    return emit(json_mode, claim, "extendable", jw, timer.ms(), kExitWitness);
}

int run_choosable(const std::string& uri, int a, int b, const std::string& timeout,
                  int threads, bool json_mode, const std::string& out) {
    Timer timer;
    Graph g = resolve_graph(uri);
    ChoosabilityOptions opt;
    opt.budget = parse_duration(timeout);
    opt.threads = threads;
    std::string claim = uri + " is (" + std::to_string(a) + "," + std::to_string(b) +
                        ")-choosable";
    auto r = is_ab_choosable(g, a, b, opt);
    if (r.status == ChoosableStatus::Choosable)
        return emit(json_mode, claim, "choosable", nullptr, timer.ms(), kExitWitness);
    if (r.status == ChoosableStatus::Timeout)
        return emit(json_mode, claim, "timeout", nullptr, timer.ms(), kExitResource);
    json jw = lists_to_json(*r.witness);
    if (!out.empty()) save_json_file(out, jw);
    return emit(json_mode, claim, "not-choosable", jw, timer.ms(), kExitNegative);
}

int run_ladder(const std::string& uri, int kmax, const std::string& timeout, int threads,
               bool json_mode) {
    Timer timer;
    Graph g = resolve_graph(uri);
    ChoosabilityOptions opt;
    opt.budget = parse_duration(timeout);
    opt.threads = threads;
    auto ladder = strong_ladder(g, kmax, opt);
    json rows = json::array();
    for (const auto& row : ladder.rows) {
        json r;
        r["k"] = row.k;
        if (row.ch_k) {
            r["ch_k"] = *row.ch_k;
            r["value"] = Rational(*row.ch_k - 1, row.k).str();
        } else {
            r["ch_k"] = nullptr;  // gap: timed out, never guessed
            r["value"] = nullptr;
        }
        rows.push_back(r);
    }
    std::string bound = ladder.lower_bound ? ladder.lower_bound->str() : "none";
    std::string claim = uri + " strong-fractional ladder up to k=" + std::to_string(kmax);
    if (json_mode) return emit(true, claim, bound, rows, timer.ms(), kExitWitness);
    for (const auto& row : ladder.rows) {
        std::cout << "k=" << row.k << "  ch_k=";
        if (row.ch_k)
            std::cout << *row.ch_k << "  (ch_k-1)/k=" << Rational(*row.ch_k - 1, row.k).str();
        else
            std::cout << "gap (timeout)";
        std::cout << "\n";
    }
    std::cout << "certified lower bound: " << bound << " (" << timer.ms() << " ms)\n";
    return kExitWitness;
}

int run_amplify(const std::string& id, int m, int x_size, const std::string& y3,
                const std::string& out_graph, const std::string& out_lists, bool solve,
                bool json_mode) {
    Timer timer;
    Fig4Y3Side side = (y3 == "A") ? Fig4Y3Side::A : Fig4Y3Side::B;
    auto amp = amplify_catalog_gadget(id, m, x_size, side);
    if (!out_graph.empty()) save_json_file(out_graph, graph_to_json(amp.graph));
    if (!out_lists.empty()) save_json_file(out_lists, lists_to_json(amp.lists));
    std::string claim = "amplified " + id + " at m=" + std::to_string(m) + ": " +
                        std::to_string(amp.copies) + " copies, " +
                        std::to_string(amp.graph.vertex_count()) + " vertices";
    if (!solve)
        return emit(json_mode, claim, "constructed", nullptr, timer.ms(), kExitWitness);
    auto w = solve_list_colouring(amp.graph, amp.lists, m);
    if (w) {
        if (!is_proper_bfold(amp.graph, *w, m))
            throw std::logic_error("witness failed re-verification");
        return emit(json_mode, claim, "colourable", colouring_to_json(*w), timer.ms(),
                    kExitWitness);
    }
    return emit(json_mode, claim, "not-colourable", nullptr, timer.ms(), kExitNegative);
}

// Human-driven strategies for `play` and `paint --lister stdin`.
std::vector<int> read_vertex_line(const std::string& prompt) {
    std::cout << prompt << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) throw StrategyFailure("end of input");
    std::istringstream in(line);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    return out;
}

struct StdinLister : ListerStrategy {
    std::vector<int> choose(const GameState& st) override {
        std::ostringstream prompt;
        prompt << "round " << st.round + 1 << ", live:";
        for (int v : st.live_vertices())
            prompt << " " << v << "(t" << st.tokens[v] << ",d" << st.debt[v] << ")";
        prompt << "\nU> ";
        return read_vertex_line(prompt.str());
    }
};

struct StdinPainter : PainterStrategy {
    std::vector<int> choose(const GameState& st, const std::vector<int>& chosen) override {
        std::ostringstream prompt;
        prompt << "round " << st.round + 1 << ", Lister chose:";
        for (int v : chosen) prompt << " " << v;
        prompt << "\nX> ";
        return read_vertex_line(prompt.str());
    }
};

int run_paint(const std::string& uri, int a, int b, bool exact,
              const std::string& painter_kind, const std::string& lister_kind,
              const std::string& host_path, int games, std::uint64_t seed,
              bool json_mode, const std::string& transcript_out) {
    Timer timer;

    if (exact) {
        Graph g = resolve_graph(uri);
        std::string claim =
            uri + " is (" + std::to_string(a) + "," + std::to_string(b) + ")-paintable";
        auto outcome = solve_paintable_exact(g, uniform_fold(g.vertex_count(), a),
                                             uniform_fold(g.vertex_count(), b));
        bool painter = outcome == PaintOutcome::PainterWins;
        return emit(json_mode, claim, painter ? "painter-wins" : "lister-wins", nullptr,
                    timer.ms(), painter ? kExitWitness : kExitNegative);
    }

    // Strategy play.  The cyclic painter needs the class structure (a gnmk
    // catalog graph); the kernel painter takes a bipartite host whose line
    // graph becomes the arena, with f(v) = b(d+(v)+1).
    Graph arena;
    std::vector<int> f, gfn;
    std::optional<GnmkGraph> gnmk;
    std::optional<GalvinResult> galvin;

    if (painter_kind == "cyclic") {
        int n = 0, m = 0, k = 0;
        char d1 = 0, d2 = 0;
        bool ok = uri.rfind("catalog:gnmk-", 0) == 0;
        if (ok) {
            std::istringstream in(uri.substr(13));
            ok = static_cast<bool>(in >> n >> d1 >> m >> d2 >> k) && d1 == '-' && d2 == '-';
        }
        if (!ok)
            throw std::invalid_argument("--painter cyclic needs --graph catalog:gnmk-N-M-K");
        gnmk = build_gnmk(n, m, k);
        arena = gnmk->graph;
    } else if (painter_kind == "kernel") {
        if (host_path.empty())
            throw std::invalid_argument("--painter kernel needs --host <bipartite.json>");
        Graph host = resolve_graph(host_path);
        auto parts = find_bipartition(host);
        if (!parts) throw std::invalid_argument("--host graph is not bipartite");
        galvin = galvin_orientation(host, parts->first, parts->second);
        arena = galvin->line.graph;
    } else {
        arena = resolve_graph(uri);
    }

    int n = arena.vertex_count();
    gfn = uniform_fold(n, b);
    if (painter_kind == "kernel") {
        f.assign(n, 0);
        for (int v = 0; v < n; ++v) f[v] = b * (galvin->orientation.out_degree(v) + 1);
    } else {
        f = uniform_fold(n, a);
    }

    if (lister_kind == "exhaustive") {
        if (!gnmk)
            throw std::invalid_argument("--lister exhaustive pairs with --painter cyclic");
        auto r = verify_cyclic_exhaustive(*gnmk, a, b);
        std::string claim = uri + " cyclic painter survives every Lister line at (" +
                            std::to_string(a) + "," + std::to_string(b) + ")";
        return emit(json_mode, claim,
                    r.painter_always_wins ? "painter-wins" : "lister-wins",
                    json{{"states", r.states}, {"max_case1", r.max_case1}}, timer.ms(),
                    r.painter_always_wins ? kExitWitness : kExitNegative);
    }

    std::optional<BFoldColouring> phi;
    if (painter_kind == "fractional") {
        phi = solve_ab_colouring(arena, a, b);
        if (!phi)
            throw std::invalid_argument(
                "--painter fractional: the graph is not (a,b)-colourable, no base colouring");
    }

    auto make_painter = [&]() -> std::unique_ptr<PainterStrategy> {
        if (painter_kind == "cyclic") return std::make_unique<CyclicPainter>(*gnmk);
        if (painter_kind == "fractional")
            return std::make_unique<FractionalPainter>(arena, *phi);
        if (painter_kind == "kernel")
            return std::make_unique<KernelPainter>(galvin->orientation, f, gfn);
        if (painter_kind == "greedy") return std::make_unique<GreedyPainter>();
        throw std::invalid_argument("unknown painter '" + painter_kind + "'");
    };
    auto make_lister = [&](int game) -> std::unique_ptr<ListerStrategy> {
        if (lister_kind == "random") return std::make_unique<RandomLister>(seed + game);
        if (lister_kind == "stdin") return std::make_unique<StdinLister>();
        throw std::invalid_argument("unknown lister '" + lister_kind + "'");
    };

    int wins = 0;
    GameResult last{GameOutcome::Truncated, {}};
    for (int game = 0; game < games; ++game) {
        auto painter = make_painter();
        auto lister = make_lister(static_cast<int>(game));
        last = play_game(arena, f, gfn, *painter, *lister);
        if (last.outcome == GameOutcome::PainterWins) ++wins;
    }

    // Transcripts are re-validated through the replay rules before emission.
    if (last.outcome == GameOutcome::PainterWins || last.outcome == GameOutcome::ListerWins) {
        auto replay = replay_transcript(arena, f, gfn, last.state.transcript);
        if (!replay || *replay != last.outcome)
            throw std::logic_error("transcript failed replay validation");
    }
    json jt = transcript_to_json(last.state.transcript, to_string(last.outcome));
    if (!transcript_out.empty()) save_json_file(transcript_out, jt);

    std::string claim = uri + " painter=" + painter_kind + " vs lister=" + lister_kind;
    std::string verdict =
        std::to_string(wins) + "/" + std::to_string(games) + " painter wins";
    return emit(json_mode, claim, verdict, jt, timer.ms(),
                wins == games ? kExitWitness : kExitNegative);
}

int run_play(const std::string& uri, int a, int b, const std::string& human_side,
             std::uint64_t seed, const std::string& transcript_out) {
    Graph g = resolve_graph(uri);
    std::vector<int> f = uniform_fold(g.vertex_count(), a);
    std::vector<int> gfn = uniform_fold(g.vertex_count(), b);
    GreedyPainter machine_painter;
    RandomLister machine_lister(seed);
    StdinLister human_lister;
    StdinPainter human_painter;
    GameResult r = (human_side == "lister")
                       ? play_game(g, f, gfn, machine_painter, human_lister)
                       : play_game(g, f, gfn, human_painter, machine_lister);
    std::cout << "winner: " << to_string(r.outcome) << " after " << r.state.round
              << " rounds\n";
    if (!transcript_out.empty())
        save_json_file(transcript_out,
                       transcript_to_json(r.state.transcript, to_string(r.outcome)));
    if (r.outcome == GameOutcome::PainterWins) return kExitWitness;
    if (r.outcome == GameOutcome::ListerWins) return kExitNegative;
    return kExitUsage;
}

int run_hyper(const std::string& path, int b, int trials, std::uint64_t seed,
              bool json_mode) {
    Timer timer;
    Hypergraph h = hypergraph_from_json(load_json_file(path));
    std::string claim = path + " has a " + std::to_string(b) + "-proper 2-colouring";
    auto col = random_b_proper_2colouring(h, b, trials, seed);
    if (!col)
        return emit(json_mode, claim, "not-found", nullptr, timer.ms(), kExitNegative);
    if (!is_b_proper_2colouring(h, *col, b))
        throw std::logic_error("colouring failed re-verification");
    return emit(json_mode, claim, "found", json(*col), timer.ms(), kExitWitness);
}

json gadget_document(const std::string& id) {
    GadgetSpec spec = gadget(id, 1);
    json j;
    j["id"] = spec.id;
    j["m"] = spec.m;
    j["epsilon_m"] = spec.epsilon_m;
    j["blocks"] = spec.blocks;
    j["graph"] = graph_to_json(spec.graph);
    j["lists"] = lists_to_json(spec.lists);
    j["designated"] = {{"u", spec.u}, {"v", spec.v}};
    j["notes"] = {"lists are the m=1 instantiation; other m via the gadget builder"};
    return j;
}

json steinberg_document() {
    SteinbergInstance inst = steinberg_instance();
    json j;
    j["graph"] = graph_to_json(inst.graph);
    j["partial"] = colouring_to_json(inst.precolouring);
    j["notes"] = inst.notes;
    return j;
}

int run_catalog(const std::string& action, const std::string& id, const std::string& dir) {
    if (action == "list") {
        for (const auto& name : catalog_ids()) std::cout << name << "\n";
        return kExitWitness;
    }
    if (action == "show") {
        if (id == "steinberg")
            std::cout << steinberg_document().dump(1) << "\n";
        else if (id == "fig2" || id == "fig3" || id == "fig4")
            std::cout << gadget_document(id).dump(1) << "\n";
        else
            std::cout << graph_to_json(catalog_graph(id)).dump(1) << "\n";
        return kExitWitness;
    }
    if (action == "dump") {
        for (const char* gid : {"fig2", "fig3", "fig4"})
            save_json_file(dir + "/" + gid + ".json", gadget_document(gid));
        save_json_file(dir + "/steinberg.json", steinberg_document());
        std::cout << "wrote fig2.json fig3.json fig4.json steinberg.json to " << dir << "\n";
        return kExitWitness;
    }
    throw std::invalid_argument("catalog action must be list, show or dump");
}

int run_verify_paper(const std::string& claim_id, int threads, bool json_mode) {
    auto catalogue = claim_catalogue();
    std::vector<std::string> ids;
    if (claim_id.empty())
        for (const auto& [id, _] : catalogue) ids.push_back(id);
    else
        ids.push_back(claim_id);

    bool all_pass = true;
    json results = json::array();
    for (const auto& id : ids) {
        ClaimResult r = run_claim(id, threads);
        all_pass = all_pass && r.pass;
        if (json_mode)
            results.push_back({{"claim", r.id},
                               {"verdict", r.pass ? "pass" : "fail"},
                               {"witness", r.detail},
                               {"elapsed_ms", static_cast<long long>(r.elapsed_s * 1000)}});
        else
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.detail << "\n";
    }
    if (json_mode) std::cout << results.dump(1) << "\n";
    return all_pass ? kExitWitness : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multifold: exact b-fold, list and online-list colouring lab"};
    app.require_subcommand(1);

    std::string graph_uri, lists_path, partial_path, out, out_graph, out_lists;
    std::string timeout = "600s", painter_kind = "greedy", lister_kind = "random";
    std::string host_path, human_side, claim_id, catalog_action, catalog_id;
    std::string catalog_dir = "catalog", y3_side = "B", hyper_path, transcript_out;
    int a = 0, b = 1, kmax = 1, universe = 0, x_size = -1, m = 1, games = 1;
    int trials = 1000, threads = 1;
    std::uint64_t seed = 0;
    bool json_mode = false, exact = false, solve_amplified = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json_mode, "emit a JSON result document");
        cmd->add_option("--threads", threads, "worker threads (results are identical)");
    };

    auto* colour = app.add_subcommand("colour", "exact (a,b)-colouring");
    colour->add_option("--graph", graph_uri)->required();
    colour->add_option("-a", a)->required();
    colour->add_option("-b", b)->required();
    colour->add_option("--out", out, "write the witness colouring to a file");
    add_common(colour);

    auto* list_colour = app.add_subcommand("list-colour", "exact (L,b)-colouring");
    list_colour->add_option("--graph", graph_uri)->required();
    list_colour->add_option("--lists", lists_path)->required();
    list_colour->add_option("-b", b)->required();
    list_colour->add_option("--out", out);
    add_common(list_colour);

    auto* extend = app.add_subcommand("extend", "complete a partial colouring");
    extend->add_option("--graph", graph_uri)->required();
    extend->add_option("--partial", partial_path)->required();
    extend->add_option("--universe", universe, "colours 1..K")->required();
    extend->add_option("-b", b)->required();
    extend->add_option("--out", out);
    add_common(extend);

    auto* choosable = app.add_subcommand("choosable", "exact (a,b)-choosability");
    choosable->add_option("--graph", graph_uri)->required();
    choosable->add_option("-a", a)->required();
    choosable->add_option("-b", b)->required();
    choosable->add_option("--timeout", timeout, "e.g. 600s, 10m, 500ms");
    choosable->add_option("--out", out, "write a bad-assignment witness to a file");
    add_common(choosable);

    auto* ladder = app.add_subcommand("ladder", "k-fold choice numbers and (ch_k-1)/k");
    ladder->add_option("--graph", graph_uri)->required();
    ladder->add_option("--kmax", kmax)->required();
    ladder->add_option("--timeout", timeout, "per-decision budget");
    add_common(ladder);

    auto* amplify = app.add_subcommand("amplify", "build the shared-pair composite");
    amplify->add_option("--gadget", catalog_id, "fig2|fig3|fig4")->required();
    amplify->add_option("-m", m)->required();
    amplify->add_option("--x-size", x_size, "|L(u)|; defaults to the gadget list size");
    amplify->add_option("--y3-side", y3_side, "fig4 y3 reading (A|B)");
    amplify->add_option("--out-graph", out_graph);
    amplify->add_option("--out-lists", out_lists);
    amplify->add_flag("--solve", solve_amplified, "also run the list-colouring solver");
    add_common(amplify);

    auto* paint = app.add_subcommand("paint", "the (f,g)-painting game");
    paint->add_option("--graph", graph_uri);
    paint->add_option("-a", a)->required();
    paint->add_option("-b", b)->required();
    paint->add_flag("--exact", exact, "full minimax over game states");
    paint->add_option("--painter", painter_kind, "cyclic|fractional|kernel|greedy");
    paint->add_option("--lister", lister_kind, "random|exhaustive|stdin");
    paint->add_option("--host", host_path, "bipartite host for --painter kernel");
    paint->add_option("--games", games);
    paint->add_option("--seed", seed);
    paint->add_option("--transcript-out", transcript_out);
    add_common(paint);

    auto* play = app.add_subcommand("play", "interactive painting game");
    play->add_option("--graph", graph_uri)->required();
    play->add_option("-a", a)->required();
    play->add_option("-b", b)->required();
    play->add_option("--human", human_side, "lister|painter")->required();
    play->add_option("--seed", seed);
    play->add_option("--transcript-out", transcript_out);

    auto* hyper = app.add_subcommand("hyper", "random b-proper 2-colouring search");
    hyper->add_option("--file", hyper_path)->required();
    hyper->add_option("-b", b)->required();
    hyper->add_option("--trials", trials);
    hyper->add_option("--seed", seed);
    add_common(hyper);

    auto* catalog = app.add_subcommand("catalog", "built-in instances");
    catalog->add_option("action", catalog_action, "list|show|dump")->required();
    catalog->add_option("id", catalog_id, "instance id for show");
    catalog->add_option("--dir", catalog_dir, "output directory for dump");

    auto* verify = app.add_subcommand("verify-paper", "run the built-in claim suite");
    verify->add_option("--claim", claim_id, "run a single claim by id");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*colour) return run_colour(graph_uri, a, b, json_mode, out);
        if (*list_colour) return run_list_colour(graph_uri, lists_path, b, json_mode, out);
        if (*extend) return run_extend(graph_uri, partial_path, universe, b, json_mode, out);
        if (*choosable)
            return run_choosable(graph_uri, a, b, timeout, threads, json_mode, out);
        if (*ladder) return run_ladder(graph_uri, kmax, timeout, threads, json_mode);
        if (*amplify)
            return run_amplify(catalog_id, m, x_size, y3_side, out_graph, out_lists,
                               solve_amplified, json_mode);
        if (*paint)
            return run_paint(graph_uri, a, b, exact, painter_kind, lister_kind, host_path,
                             games, seed, json_mode, transcript_out);
        if (*play) return run_play(graph_uri, a, b, human_side, seed, transcript_out);
        if (*hyper) return run_hyper(hyper_path, b, trials, seed, json_mode);
        if (*catalog) return run_catalog(catalog_action, catalog_id, catalog_dir);
        if (*verify) return run_verify_paper(claim_id, threads, json_mode);
    } catch (const multifold::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
