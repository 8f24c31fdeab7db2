#include "kundupack/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "kundupack/io.hpp"
#include "kundupack/navigate.hpp"
#include "kundupack/oracle.hpp"

namespace kundu::cli {

namespace {

// A file path if one exists, otherwise the argument itself.
std::string load(const std::string& arg) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return arg;
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::invalid_input, "cannot read " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DegreeSequence load_sequence(const std::string& arg) {
    auto inst = io::parse_instance(load(arg));
    if (auto* seq = std::get_if<DegreeSequence>(&inst)) return *seq;
    if (auto* g = std::get_if<LabeledGraph>(&inst)) return DegreeSequence(g->degree_sequence());
    return DegreeSequence(std::get<KunduRealization>(inst).green.degree_sequence());
}

Mode parse_mode(const std::string& text) {
    if (text == "guaranteed") return Mode::guaranteed;
    if (text == "best-effort") return Mode::best_effort;
    throw Error(ErrorKind::invalid_input, "unknown mode '" + text + "'");
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse_error:
        case ErrorKind::invalid_input:
        case ErrorKind::too_large: return 2;
        default: return 1;
    }
}

std::string factor_json(const OneFactor& f) { return io::edges_to_json(f.edges()).dump(); }

struct Options {
    std::string mode = "best-effort";
    std::uint64_t seed = 0;
    bool json = false;
    std::size_t max_n = 0;
};

class Runner {
public:
    Runner(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

    void check(const std::string& arg) {
        const DegreeSequence seq = load_sequence(arg);
        const bool graphic = is_graphic(seq);
        const bool feasible = kundu_feasible(seq);
        if (opt_.json) {
            io::Json j = io::Json::object();
            j["graphic"] = graphic;
            j["kundu_feasible"] = feasible;
            out_ << j.dump() << '\n';
        } else {
            out_ << "graphic=" << (graphic ? "true" : "false") << " kundu_feasible=" << (feasible ? "true" : "false")
                 << '\n';
        }
    }

    void realize_cmd(const std::string& arg) {
        const LabeledGraph g = realize(load_sequence(arg));
        if (opt_.json)
            out_ << io::edges_to_json(g.edges()).dump() << '\n';
        else
            out_ << io::format_graph(g);
    }

    void kundu(const std::string& arg) {
        std::mt19937_64 rng(opt_.seed);
        const KunduRealization kr = kundu_realize(KunduInstance{load_sequence(arg), mode()}, rng);
        out_ << io::to_json(kr).dump() << '\n';
    }

    void navigate(const std::string& start_arg, const std::string& goal_arg) {
        const KunduRealization start = io::parse_kundu_realization(load(start_arg));
        const KunduRealization goal = io::parse_kundu_realization(load(goal_arg));
        const SwapTrace trace = navigate_full(start, goal, mode());
        verify_trace(start, trace);
        out_ << io::to_json(trace).dump() << '\n';
    }

    void embed(const std::string& kr_arg, const std::string& j_arg) {
        const KunduRealization kr = io::parse_kundu_realization(load(kr_arg));
        const OneFactor j = io::parse_factor(load(j_arg));
        const Embedding emb = embed_factor(kr, j, mode());
        verify_trace(kr, emb.trace);
        io::Json doc = io::to_json(emb.trace);
        doc["result"] = io::to_json(emb.realization);
        out_ << doc.dump() << '\n';
    }

    int verify(const std::string& start_arg, const std::string& trace_arg, std::ostream& err) {
        const KunduRealization start = io::parse_kundu_realization(load(start_arg));
        const SwapTrace trace = io::parse_trace(load(trace_arg));
        try {
            verify_trace(start, trace);
        } catch (const InvalidSwapError& e) {
            std::ostringstream line;
            line << "InvalidSwap";
            if (e.step()) line << " step=" << *e.step();
            line << " reason=" << to_string(e.reason());
            out_ << line.str() << '\n';
            err << e.what() << '\n';
            return 1;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::trace_mismatch) throw;
            out_ << "TraceMismatch\n";
            err << e.what() << '\n';
            return 1;
        }
        out_ << "ok steps=" << trace.swaps.size() << '\n';
        return 0;
    }

    void oracle_cmd(const std::string& sub, const std::string& arg) {
        if (sub == "matchings") {
            const std::size_t n = matching_order(arg);
            const auto all = oracle::enumerate_perfect_matchings(n, cap(oracle::kMatchingCap));
            if (opt_.json) {
                io::Json list = io::Json::array();
                for (const auto& m : all) list.push_back(io::edges_to_json(m.edges()));
                io::Json j = io::Json::object();
                j["count"] = all.size();
                j["matchings"] = std::move(list);
                out_ << j.dump() << '\n';
                return;
            }
            out_ << "count=" << all.size() << '\n';
            for (const auto& m : all) out_ << factor_json(m) << '\n';
            return;
        }
        const DegreeSequence pi = load_sequence(arg);
        if (sub == "realizations") {
            const auto all = oracle::enumerate_realizations(pi, cap(oracle::kRealizationCap));
            if (opt_.json) {
                io::Json list = io::Json::array();
                for (const auto& g : all) list.push_back(io::edges_to_json(g.edges()));
                io::Json j = io::Json::object();
                j["count"] = all.size();
                j["realizations"] = std::move(list);
                out_ << j.dump() << '\n';
                return;
            }
            out_ << "count=" << all.size() << '\n';
            for (const auto& g : all) out_ << io::edges_to_json(g.edges()).dump() << '\n';
        } else if (sub == "kundu") {
            const auto all = oracle::enumerate_kundu_realizations(pi, cap(oracle::kRealizationCap));
            if (opt_.json) {
                io::Json list = io::Json::array();
                for (const auto& kr : all) list.push_back(io::to_json(kr));
                io::Json j = io::Json::object();
                j["count"] = all.size();
                j["realizations"] = std::move(list);
                out_ << j.dump() << '\n';
                return;
            }
            out_ << "count=" << all.size() << '\n';
            for (const auto& kr : all) out_ << io::to_json(kr).dump() << '\n';
        } else if (sub == "metagraph") {
            const auto mg = oracle::kswap_metagraph(pi, cap(oracle::kMetagraphCap));
            const auto r = oracle::report(mg);
            if (opt_.json) {
                io::Json j = io::Json::object();
                j["nodes"] = r.nodes;
                j["edges"] = r.edges;
                j["components"] = r.components;
                io::Json w = io::Json::array();
                for (auto [a, b] : r.witnesses) w.push_back(io::Json::array({a, b}));
                j["witnesses"] = std::move(w);
                out_ << j.dump() << '\n';
                return;
            }
            out_ << r.to_string() << '\n';
        } else if (sub == "coverage") {
            const auto c = oracle::factor_coverage(pi, cap(oracle::kRealizationCap));
            if (opt_.json) {
                io::Json j = io::Json::object();
                j["covered"] = c.covered;
                j["witness"] = c.witness ? io::edges_to_json(c.witness->edges()) : io::Json(nullptr);
                out_ << j.dump() << '\n';
                return;
            }
            out_ << "covered=" << (c.covered ? "true" : "false");
            if (c.witness) out_ << " witness=" << factor_json(*c.witness);
            out_ << '\n';
        } else {
            throw Error(ErrorKind::invalid_input, "unknown oracle subcommand '" + sub + "'");
        }
    }

    void random(const std::string& spec) {
        std::mt19937_64 rng(opt_.seed);
        DegreeSequence pi = random_sequence(spec, rng);
        const KunduRealization kr = random_kundu_realization(KunduInstance{pi, mode()}, rng);
        out_ << io::to_json(kr).dump() << '\n';
    }

private:
    Mode mode() const { return parse_mode(opt_.mode); }
    std::size_t cap(std::size_t fallback) const { return opt_.max_n ? opt_.max_n : fallback; }

    static std::size_t matching_order(const std::string& arg) {
        const DegreeSequence seq = load_sequence(arg);
        // A lone number is the vertex count; a longer sequence contributes its length.
        return seq.size() == 1 ? static_cast<std::size_t>(seq[0]) : seq.size();
    }

    // "N:MAXDEG" draws entries uniformly from 0..MAXDEG until the sequence is
    // Kundu-feasible; anything else is read as an explicit sequence.
    static DegreeSequence random_sequence(const std::string& spec, std::mt19937_64& rng) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos) return load_sequence(spec);
        std::size_t n = 0;
        int max_deg = 0;
        try {
            std::size_t used = 0;
            n = std::stoul(spec.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("n");
            const std::string rest = spec.substr(colon + 1);
            max_deg = std::stoi(rest, &used);
            if (used != rest.size() || max_deg < 0) throw std::invalid_argument("maxdeg");
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::invalid_input, "SEQSPEC must be N:MAXDEG or a degree sequence");
        }
        if (n % 2 != 0) throw Error(ErrorKind::invalid_input, "N must be even");
        std::uniform_int_distribution<int> pick(0, max_deg);
        for (int attempt = 0; attempt < 10000; ++attempt) {
            std::vector<int> values(n);
            for (int& v : values) v = pick(rng);
            DegreeSequence seq(std::move(values));
            if (kundu_feasible(seq)) return seq;
        }
        throw Error(ErrorKind::not_feasible, "no feasible sequence found for " + spec);
    }

    std::ostream& out_;
    const Options& opt_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kundu realizations of degree sequences and K-swap navigation (vertices are 0-indexed)",
                 "kundupack"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--mode", opt.mode, "guaranteed or best-effort")
        ->check(CLI::IsMember({"guaranteed", "best-effort"}));
    app.add_option("--seed", opt.seed, "seed for every randomized choice");
    app.add_flag("--json", opt.json, "JSON output");
    app.add_option("--max-n", opt.max_n, "override the oracle size cap");

    std::string a;
    std::string b;
    std::string sub;
    auto* check = app.add_subcommand("check", "graphicality and Kundu feasibility of SEQ");
    check->add_option("SEQ", a)->required();
    auto* realize_sc = app.add_subcommand("realize", "Havel-Hakimi realization of SEQ");
    realize_sc->add_option("SEQ", a)->required();
    auto* kundu_sc = app.add_subcommand("kundu", "a Kundu realization of SEQ");
    kundu_sc->add_option("SEQ", a)->required();
    auto* navigate_sc = app.add_subcommand("navigate", "K-swap trace from START to GOAL");
    navigate_sc->add_option("START", a)->required();
    navigate_sc->add_option("GOAL", b)->required();
    auto* embed_sc = app.add_subcommand("embed", "realization of the graph avoiding factor J");
    embed_sc->add_option("KR", a)->required();
    embed_sc->add_option("J", b)->required();
    auto* verify_sc = app.add_subcommand("verify", "replay TRACE from START");
    verify_sc->add_option("START", a)->required();
    verify_sc->add_option("TRACE", b)->required();
    auto* oracle_sc = app.add_subcommand("oracle", "exhaustive small-n enumeration");
    oracle_sc->add_option("SUBCMD", sub, "realizations, matchings, kundu, metagraph or coverage")
        ->required()
        ->check(CLI::IsMember({"realizations", "matchings", "kundu", "metagraph", "coverage"}));
    oracle_sc->add_option("SEQ", a)->required();
    auto* random_sc = app.add_subcommand("random", "random Kundu realization from N:MAXDEG or SEQ");
    random_sc->add_option("SEQSPEC", a)->required();

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Runner runner(out, opt);
    try {
        if (check->parsed()) runner.check(a);
        if (realize_sc->parsed()) runner.realize_cmd(a);
        if (kundu_sc->parsed()) runner.kundu(a);
        if (navigate_sc->parsed()) runner.navigate(a, b);
        if (embed_sc->parsed()) runner.embed(a, b);
        if (verify_sc->parsed()) return runner.verify(a, b, err);
        if (oracle_sc->parsed()) runner.oracle_cmd(sub, a);
        if (random_sc->parsed()) runner.random(a);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code(e.kind());
    }
    return 0;
}

}  // namespace kundu::cli
