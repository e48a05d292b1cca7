#include "cospec/cli.hpp"

#include "cospec/cograph.hpp"
#include "cospec/generators.hpp"
#include "cospec/graph_io.hpp"
#include "cospec/harness.hpp"
#include "cospec/hfree.hpp"
#include "cospec/linalg.hpp"
#include "cospec/vicinal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace cospec::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::optional<int> parse_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        return std::nullopt;
    return v;
}

int require_int(std::string_view s, const char* what)
{
    auto v = parse_int(s);
    if (!v)
        throw UsageError(std::string(what) + ": expected an integer, got '" + std::string(s) + "'");
    return *v;
}

std::vector<int> parse_int_list(std::string_view s, const char* what)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string_view::npos)
            comma = s.size();
        out.push_back(require_int(s.substr(start, comma - start), what));
        start = comma + 1;
    }
    return out;
}

std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

Graph glg_counterexample(int k)
{
    std::vector<int> counts(k + 1, 1);
    counts[0] = k;
    return generalized_line_graph(star(k + 1), counts);
}

std::string read_stream(std::istream& in)
{
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::optional<Graph> named_graph(std::string_view raw)
{
    const std::string name = lower(raw);
    if (name == "house")
        return house_graph();
    if (name == "figure4")
        return figure4_graph();
    if (name == "co-k3" || name == "cok3")
        return empty_graph(3);
    if (name == "2k2")
        return disjoint_union(complete(2), complete(2));
    if (name == "k22" || name == "c4")
        return cycle(4);
    if (name.size() == 2 && (name[0] == 'p' || name[0] == 'c' || name[0] == 'k') && std::isdigit(name[1])) {
        const int n = name[1] - '0';
        if (name[0] == 'p' && n >= 1)
            return path(n);
        if (name[0] == 'c' && n >= 3)
            return cycle(n);
        if (name[0] == 'k')
            return complete(n);
    }
    static const std::pair<const char*, Graph (*)(int)> families[] = {
        {"glg-counterexample-k", glg_counterexample},
        {"path", path},
        {"cycle", cycle},
        {"complete", complete},
        {"star", star},
        {"empty", empty_graph},
        {"cocktail", cocktail_party},
    };
    for (const auto& [prefix, make] : families) {
        const std::string_view p(prefix);
        if (name.size() > p.size() && name.compare(0, p.size(), p) == 0) {
            if (auto n = parse_int(std::string_view(name).substr(p.size())))
                return make(*n);
        }
    }
    return std::nullopt;
}

Graph resolve_input(const std::string& spec, std::istream& in)
{
    if (spec == "-")
        return parse_graph(read_stream(in));
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream f(spec, std::ios::binary);
        if (!f)
            throw ParseError("cannot read " + spec);
        return parse_graph(read_stream(f));
    }
    try {
        if (auto g = named_graph(spec))
            return *g;
    } catch (const GraphError& e) {
        throw ParseError(spec + ": " + e.what());
    }
    return parse_graph(spec);
}

namespace {

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

void emit(const Io& io, const json& j) { io.out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const Io& io, const std::string& input)
{
    const Graph g = resolve_input(input, io.in);
    const auto p4 = find_induced_p4(g);
    const auto dil = dilworth_number(g);
    const auto prof = multiplicity_profile(g);
    const auto drp = check_drp(g);
    const auto cdrp = check_cdrp(g);
    json report = {
        {"input", graph_payload(g)},
        {"isCograph", !p4},
        {"p4Witness", p4 ? json(*p4) : json(nullptr)},
        {"cotree", p4 ? json(nullptr) : to_json(build_cotree(g))},
        {"isThreshold", is_threshold(g)},
        {"dilworth", to_json(dil)},
        {"spectral", to_json(prof)},
        {"drp", drp.holds},
        {"cdrp", cdrp.holds},
        {"drpDetails", drp.details},
        {"cdrpDetails", cdrp.details},
        {"duplicationClasses", duplication_classes(g)},
        {"coduplicationClasses", coduplication_classes(g)},
        {"dilworthBoundHolds", prof.max_other_mult <= dil.dilworth},
    };
    emit(io, report);
    io.err << "n=" << g.order() << " m=" << g.edge_count() << " cograph=" << yes_no(!p4)
           << " dilworth=" << dil.dilworth << " mult0=" << prof.mult0 << " mult-1=" << prof.mult_minus1
           << " maxOtherMult=" << prof.max_other_mult << " drp=" << yes_no(drp.holds)
           << " cdrp=" << yes_no(cdrp.holds) << '\n';
    return Ok;
}

Graph build_family(const std::string& family, const std::vector<std::string>& params, const std::string& base,
                   std::optional<std::uint64_t> seed)
{
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw UsageError(family + ": expected " + std::to_string(k) + " parameter(s), got " +
                             std::to_string(params.size()));
    };
    auto int_at = [&](std::size_t i) { return require_int(params[i], family.c_str()); };
    auto need_seed = [&] {
        if (!seed)
            throw UsageError(family + ": --seed is required");
        return *seed;
    };

    if (family == "path") {
        need(1);
        return path(int_at(0));
    }
    if (family == "cycle") {
        need(1);
        return cycle(int_at(0));
    }
    if (family == "complete") {
        need(1);
        return complete(int_at(0));
    }
    if (family == "star") {
        need(1);
        return star(int_at(0));
    }
    if (family == "empty") {
        need(1);
        return empty_graph(int_at(0));
    }
    if (family == "cocktail") {
        need(1);
        return cocktail_party(int_at(0));
    }
    if (family == "multipartite") {
        need(1);
        return complete_multipartite(parse_int_list(params[0], "multipartite"));
    }
    if (family == "threshold") {
        need(1);
        if (auto len = parse_int(params[0]))
            return threshold_from_sequence(CreationSequence::random(*len, need_seed()));
        return threshold_from_sequence(CreationSequence::parse(params[0]));
    }
    if (family == "tightness") {
        need(2);
        return tightness_family(int_at(0), int_at(1));
    }
    if (family == "glg" || family == "line") {
        if (base.empty())
            throw UsageError(family + ": --base is required");
        auto h = named_graph(base);
        if (!h)
            throw UsageError(family + ": unknown base graph '" + base + "'");
        if (family == "line") {
            need(0);
            return line_graph(*h);
        }
        need(1);
        return generalized_line_graph(*h, parse_int_list(params[0], "glg"));
    }
    if (family == "house") {
        need(0);
        return house_graph();
    }
    if (family == "figure4") {
        need(0);
        return figure4_graph();
    }
    if (family == "random-cograph") {
        need(1);
        return random_cograph(int_at(0), need_seed());
    }
    if (family == "random") {
        need(1);
        return random_graph(int_at(0), need_seed());
    }
    throw UsageError("unknown family '" + family + "'");
}

int cmd_gen(const Io& io, const std::string& family, const std::vector<std::string>& params,
            const std::string& format, const std::string& out_path, const std::string& base,
            std::optional<std::uint64_t> seed)
{
    Graph g;
    try {
        g = build_family(family, params, base, seed);
    } catch (const GraphError& e) {
        throw UsageError(e.what());
    }
    std::string text;
    if (format == "json")
        text = to_json(g).dump() + "\n";
    else
        text = to_graph6(g) + "\n";
    if (out_path.empty()) {
        io.out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw UsageError("cannot write " + out_path);
        f << text;
    }
    io.err << family << ": n=" << g.order() << " m=" << g.edge_count() << '\n';
    return Ok;
}

struct VerifyArgs {
    std::string id;
    std::string input;
    int s = 2;
    int k = 1;
    std::string parts;
    std::string base;
    std::string counts;
    int max_n = 6;
    int jobs = 1;
    int count = 200;
    std::optional<std::uint64_t> seed;
};

int cmd_verify(const Io& io, const VerifyArgs& a)
{
    auto need_input = [&] {
        if (a.input.empty())
            throw UsageError(a.id + ": --input is required");
        return resolve_input(a.input, io.in);
    };

    VerificationReport r;
    if (a.id == "dilworth-bound") {
        r = check_dilworth_bound(need_input());
    } else if (a.id == "threshold-simple") {
        const Graph g = need_input();
        try {
            r = check_threshold_simple(g);
        } catch (const NotThreshold& e) {
            throw UsageError(std::string("threshold-simple: ") + e.what());
        }
    } else if (a.id == "royle-drp" || a.id == "royle-cdrp" || a.id == "royle-lemmas") {
        std::vector<Graph> corpus;
        if (!a.input.empty()) {
            corpus.push_back(resolve_input(a.input, io.in));
        } else {
            if (!a.seed)
                throw UsageError(a.id + ": give --input or --seed for a random cograph corpus");
            std::mt19937_64 rng(*a.seed);
            for (int i = 0; i < a.count; ++i) {
                const int n = 1 + static_cast<int>(rng() % 14);
                corpus.push_back(random_cograph(n, rng()));
            }
        }
        const RoyleScope scope = a.id == "royle-drp"    ? RoyleScope::Duplication
                                 : a.id == "royle-cdrp" ? RoyleScope::Coduplication
                                                        : RoyleScope::Both;
        try {
            r = check_royle_lemmas(corpus, scope);
        } catch (const NonCographInCorpus& e) {
            throw UsageError(e.what());
        }
    } else if (a.id == "glg-mult") {
        if (a.base.empty() || a.counts.empty())
            throw UsageError("glg-mult: --base and --counts are required");
        auto h = named_graph(a.base);
        if (!h)
            h = resolve_input(a.base, io.in);
        try {
            r = check_glg_multiplicity(*h, parse_int_list(a.counts, "--counts"));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (a.id == "tightness") {
        try {
            r = check_tightness(a.s, a.k);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (a.id == "distinct-multipartite") {
        if (a.parts.empty())
            throw UsageError("distinct-multipartite: --parts is required");
        try {
            r = check_distinct_multipartite(parse_int_list(a.parts, "--parts"));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (a.id == "theorem-4-3") {
        try {
            r = verify_theorem_4_3(a.max_n, a.jobs);
        } catch (const InvalidSearchSpec& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("unknown theorem id '" + a.id + "'");
    }
    emit(io, to_json(r));
    io.err << r.theorem_id << ": " << (r.holds ? "holds" : "VIOLATED") << '\n';
    return r.holds ? Ok : Violation;
}

struct FuzzArgs {
    std::vector<std::string> forbidden;
    std::string property = "drp";
    int max_n = 6;
    std::string mode = "exhaustive";
    std::uint64_t count = 1000;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    bool iso_reduce = false;
};

int cmd_fuzz(const Io& io, const FuzzArgs& a)
{
    SearchSpec spec;
    for (const auto& f : a.forbidden)
        spec.forbidden.push_back(resolve_input(f, io.in));
    const std::string prop = lower(a.property);
    if (prop == "drp")
        spec.property = RankProperty::DRP;
    else if (prop == "cdrp")
        spec.property = RankProperty::CDRP;
    else
        throw UsageError("--property must be drp or cdrp");
    if (a.mode == "exhaustive")
        spec.mode = SearchMode::Exhaustive;
    else if (a.mode == "sampled")
        spec.mode = SearchMode::Sampled;
    else
        throw UsageError("--mode must be exhaustive or sampled");
    spec.max_n = a.max_n;
    spec.count = a.count;
    spec.seed = a.seed;
    spec.jobs = a.jobs;
    spec.iso_reduce = a.iso_reduce;

    std::optional<Counterexample> hit;
    try {
        hit = find_counterexample(spec);
    } catch (const InvalidSearchSpec& e) {
        throw UsageError(e.what());
    }

    json forbidden = json::array();
    for (const auto& h : spec.forbidden)
        forbidden.push_back(graph_payload(h));
    json result = {
        {"spec",
         {{"forbidden", forbidden},
          {"property", to_string(spec.property)},
          {"maxN", spec.max_n},
          {"mode", to_string(spec.mode)},
          {"isoReduce", spec.iso_reduce}}},
        {"found", hit.has_value()},
        {"counterexample", hit ? to_json(*hit) : json(nullptr)},
    };
    if (spec.mode == SearchMode::Sampled) {
        result["spec"]["count"] = spec.count;
        result["spec"]["seed"] = *spec.seed;
    }
    emit(io, result);
    if (hit)
        io.err << "counterexample: " << to_graph6(hit->graph) << " (n=" << hit->graph.order() << ")\n";
    else
        io.err << "no counterexample up to n=" << spec.max_n << '\n';
    return hit ? Violation : Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact spectral and vicinal-preorder toolkit for cographs", "cospec"};
    app.require_subcommand(1);

    std::string analyze_input;
    auto* analyze = app.add_subcommand("analyze", "Full report for one graph");
    analyze->add_option("input", analyze_input, "graph6, JSON, file path, '-' for stdin, or a named graph")
        ->required();

    std::string family, format = "g6", out_path, base;
    std::vector<std::string> params;
    std::optional<std::uint64_t> gen_seed;
    auto* gen = app.add_subcommand("gen", "Generate a graph from a named family");
    gen->add_option("family", family, "path cycle complete star empty cocktail multipartite threshold tightness "
                                      "glg line house figure4 random-cograph random")
        ->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--format", format, "g6 or json")->check(CLI::IsMember({"g6", "json"}));
    gen->add_option("--out", out_path, "Write to this file instead of stdout");
    gen->add_option("--base", base, "Base graph for glg and line (e.g. star4)");
    gen->add_option("--seed", gen_seed, "Seed for random families");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run one executable theorem check");
    verify->add_option("id", va.id,
                       "dilworth-bound threshold-simple royle-drp royle-cdrp royle-lemmas glg-mult tightness "
                       "distinct-multipartite theorem-4-3")
        ->required();
    verify->add_option("--input", va.input, "Input graph");
    verify->add_option("--s", va.s, "Tightness parameter s");
    verify->add_option("--k", va.k, "Tightness parameter k");
    verify->add_option("--parts", va.parts, "Comma-separated part sizes");
    verify->add_option("--base", va.base, "Base graph for glg-mult");
    verify->add_option("--counts", va.counts, "Comma-separated cocktail-party counts");
    verify->add_option("--max-n", va.max_n, "Vertex bound for theorem-4-3");
    verify->add_option("--jobs", va.jobs, "Worker threads");
    verify->add_option("--count", va.count, "Random corpus size");
    verify->add_option("--seed", va.seed, "Seed for the random corpus");

    FuzzArgs fa;
    auto* fuzz = app.add_subcommand("fuzz", "Search an H-free family for a DRP/CDRP counterexample");
    fuzz->add_option("--forbidden", fa.forbidden, "Forbidden induced subgraph (repeatable)")->required();
    fuzz->add_option("--property", fa.property, "drp or cdrp");
    fuzz->add_option("--max-n", fa.max_n, "Largest vertex count");
    fuzz->add_option("--mode", fa.mode, "exhaustive or sampled");
    fuzz->add_option("--count", fa.count, "Samples per vertex count");
    fuzz->add_option("--seed", fa.seed, "Seed (sampled mode)");
    fuzz->add_option("--jobs", fa.jobs, "Worker threads");
    fuzz->add_flag("--iso-reduce", fa.iso_reduce, "Enumerate one graph per isomorphism class");

    std::vector<std::string> argv_store{"cospec"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return Usage;
    }

    const Io io{in, out, err};
    try {
        if (*analyze)
            return cmd_analyze(io, analyze_input);
        if (*gen)
            return cmd_gen(io, family, params, format, out_path, base, gen_seed);
        if (*verify)
            return cmd_verify(io, va);
        if (*fuzz)
            return cmd_fuzz(io, fa);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return Parse;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return Usage;
    } catch (const GraphError& e) {
        err << "usage error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}

} // namespace cospec::cli
