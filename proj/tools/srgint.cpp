// srgint command line: build, verify, search, profiles.
//
// Exit codes: 0 verified/found, 1 refuted/unsat, 2 input or usage error,
// 3 budget exhausted.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srgint/certify.hpp"
#include "srgint/constructions.hpp"
#include "srgint/design.hpp"
#include "srgint/graph6.hpp"
#include "srgint/lattice.hpp"
#include "srgint/pentagons.hpp"
#include "srgint/search.hpp"
#include "srgint/srg.hpp"

using namespace srgint;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2, kBudget = 3 };

// Raised for bad names, unreadable files and malformed input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Artifact = std::variant<Graph, Design, Certificate>;

std::vector<std::size_t> numeric_args(const std::string& name, const std::string& prefix, std::size_t count) {
    std::vector<std::size_t> out;
    std::stringstream rest(name.substr(prefix.size()));
    std::string part;
    while (std::getline(rest, part, ':')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad numeric argument in '" + name + "'");
        out.push_back(std::stoul(part));
    }
    if (out.size() != count) throw InputError("'" + prefix + "' takes " + std::to_string(count) + " arguments");
    return out;
}

Artifact build_artifact(const std::string& name) {
    static const std::map<std::string, std::function<Artifact()>> fixed = {
        {"hoffman-singleton", [] { return hoffman_singleton(); }},
        {"mclaughlin-complement", [] { return mclaughlin_complement(); }},
        {"gq39", [] { return gq39(); }},
        {"gq39-complement", [] { return gq39_complement(); }},
        {"sims-gewirtz-complement", [] { return sims_gewirtz_complement(); }},
        {"sts15-block-graph", [] { return sts15_block_graph(); }},
        {"mclaughlin-extended", [] { return extend_by_dominating_clique(mclaughlin_complement(), 3); }},
        {"petersen", [] { return petersen(); }},
        {"clebsch", [] { return clebsch(); }},
        {"shrikhande", [] { return shrikhande(); }},
        {"sts15", [] { return sts15(); }},
        {"golay-s-5-8-24", [] { return golay_s_5_8_24(); }},
        {"s-4-7-23", [] { return steiner_4_7_23(); }},
        {"s-3-6-22", [] { return steiner_3_6_22(); }},
        {"design-2-21-6-4", [] { return quasi_symmetric_2_21_6_4(); }},
        {"cert:sims-gewirtz", [] { return sims_gewirtz_certificate(); }},
        {"cert:sts15", [] { return geometric_certificate(sts15_block_graph(), sts15_point_cliques()); }},
        {"cert:gq39", [] {
             const auto g = gq39();
             return geometric_certificate(g, edge_cliques(g));
         }},
    };
    if (auto it = fixed.find(name); it != fixed.end()) return it->second();

    const auto starts = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
    if (starts("triangular:")) return triangular(numeric_args(name, "triangular:", 1)[0]);
    if (starts("lattice:")) return lattice_graph(numeric_args(name, "lattice:", 1)[0]);
    if (starts("cycle:")) return cycle_graph(numeric_args(name, "cycle:", 1)[0]);
    if (starts("path:")) return path_graph(numeric_args(name, "path:", 1)[0]);
    if (starts("complete:")) return complete_graph(numeric_args(name, "complete:", 1)[0]);
    if (starts("kmultipartite:")) {
        const auto a = numeric_args(name, "kmultipartite:", 2);
        return complete_multipartite(a[0], a[1]);
    }
    if (starts("cert:knt:")) {
        const auto a = numeric_args(name, "cert:knt:", 2);
        return knt_certificate(a[0], a[1]);
    }
    throw InputError("unknown construction '" + name + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A graph argument is a file (graph6, or JSON when it ends in .json) or a
// construction name.
Graph load_graph(const std::string& arg) {
    if (!std::filesystem::exists(arg)) {
        auto a = build_artifact(arg);
        if (auto* g = std::get_if<Graph>(&a)) return std::move(*g);
        throw InputError("'" + arg + "' is not a graph");
    }
    const auto text = read_file(arg);
    try {
        if (has_suffix(arg, ".json")) return graph_from_json(json::parse(text));
        std::string line = text.substr(0, text.find('\n'));
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        return graph6_decode(line);
    } catch (const std::exception& e) {
        throw InputError(arg + ": " + e.what());
    }
}

template <typename T, typename Parse>
T load_text(const std::string& arg, Parse parse, const char* kind) {
    if (!std::filesystem::exists(arg)) {
        auto a = build_artifact(arg);
        if (auto* x = std::get_if<T>(&a)) return std::move(*x);
        throw InputError("'" + arg + "' is not a " + kind);
    }
    try {
        return parse(read_file(arg));
    } catch (const std::exception& e) {
        throw InputError(arg + ": " + e.what());
    }
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json graph_summary(const Graph& g) {
    json j{{"kind", "graph"}, {"order", g.order()}, {"graph6", graph6_encode(g)}};
    if (const auto p = is_srg(g)) {
        j["srg"] = p->str();
        j["spectrum"] = srg_spectrum(*p).str();
    } else {
        j["srg"] = nullptr;
    }
    return j;
}

int cmd_build(const std::string& name, const std::string& out) {
    const auto artifact = build_artifact(name);
    json report;
    std::string text;
    if (const auto* g = std::get_if<Graph>(&artifact)) {
        report = graph_summary(*g);
        report.erase("graph6");
        text = has_suffix(out, ".json") ? graph_to_json(*g).dump() + "\n" : graph6_encode(*g) + "\n";
        std::cout << name << " " << (is_srg(*g) ? is_srg(*g)->str() : std::to_string(g->order()) + " vertices") << "\n";
    } else if (const auto* d = std::get_if<Design>(&artifact)) {
        const auto l2 = t_design_lambda(*d, 2);
        report = {{"kind", "design"}, {"points", d->v}, {"blocks", d->num_blocks()}, {"block_size", d->block_size()},
                  {"lambda_2", l2 ? json(*l2) : json(nullptr)}};
        text = design_to_text(*d);
        std::cout << name << " " << d->num_blocks() << " blocks of size " << d->block_size() << " on " << d->v
                  << " points\n";
    } else {
        const auto& c = std::get<Certificate>(artifact);
        report = {{"kind", "certificate"}, {"s", c.s}, {"t", c.t}, {"rows", c.n.rows()}, {"cols", c.n.cols()}};
        text = certificate_to_text(c);
        std::cout << name << " " << c.n.rows() << " x " << c.n.cols() << " certificate, s=" << c.s << " t=" << c.t
                  << "\n";
    }
    if (!out.empty()) write_file(out, text);
    report["name"] = name;
    emit(report);
    return kOk;
}

int verify_srg(const std::string& graph) {
    const auto g = load_graph(graph);
    auto report = graph_summary(g);
    report["check"] = "strongly regular";
    report["verified"] = report["srg"] != nullptr;
    emit(report);
    return report["verified"] ? kOk : kRefuted;
}

int verify_certificate_cmd(const std::string& cert_arg, const std::string& graph_arg) {
    const auto c = load_text<Certificate>(cert_arg, certificate_from_text, "certificate");
    const auto g = load_graph(graph_arg);
    if (c.n.cols() != g.order())
        throw InputError("certificate has " + std::to_string(c.n.cols()) + " columns, graph has " +
                         std::to_string(g.order()) + " vertices");
    const auto v = verify_certificate(g, c);
    auto report = v.to_json();
    report["check"] = "N^T N = s(A + tI)";
    report["s"] = c.s;
    report["t"] = c.t;
    report["rows"] = c.n.rows();
    emit(report);
    return v.accepted ? kOk : kRefuted;
}

int verify_design(const std::string& arg, int t, std::optional<int> lambda) {
    const auto d = load_text<Design>(arg, design_from_text, "design");
    const auto l = t_design_lambda(d, t);
    json report{{"check", std::to_string(t) + "-design"}, {"points", d.v}, {"blocks", d.num_blocks()},
                {"lambda", l ? json(*l) : json(nullptr)}};
    std::vector<int> inter;
    for (int x : intersection_numbers(d)) inter.push_back(x);
    report["intersection_numbers"] = inter;
    const bool ok = l.has_value() && (!lambda || *l == *lambda);
    report["verified"] = ok;
    emit(report);
    return ok ? kOk : kRefuted;
}

int verify_gram_mcl() {
    const auto m = mclaughlin_complement();
    const auto dt = delta_tilde(delta_275(m));
    const auto g = gram(dt);
    const auto want = shifted_adjacency(m, 3);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) bad += g(i, j) != want(i, j);
    const auto det = lattice_determinant(dt);
    json report{{"check", "gram(Delta tilde) = A(McL complement) + 3I"},
                {"vectors", dt.size()},
                {"differing_entries", bad},
                {"lattice_rank", det.rank},
                {"lattice_determinant", to_string(det.determinant)},
                {"verified", bad == 0}};
    emit(report);
    return bad == 0 ? kOk : kRefuted;
}

int verify_pentagons() {
    const auto h = hoffman_singleton();
    const auto ps = pentagons(h);
    std::size_t structured = 0;
    json first_failure = nullptr;
    for (const auto& p : ps) {
        VertexSet s(h.order());
        for (auto x : p) s.insert(x);
        const auto rep = verify_pentagon_structure(h, s);
        structured += rep.ok;
        if (!rep.ok && first_failure.is_null()) first_failure = rep.to_json();
    }
    const auto parts = pentagon_partitions(h);
    std::vector<VertexSet> fixed;
    for (std::size_t i = 0; i < 5; ++i) fixed.push_back(hoffman_singleton_petersen_part(i));
    const auto subs = enumerate_petersen_subgraphs(h);
    const auto meeting = petersen_meeting_all(subs, fixed, 2);
    const bool ok = ps.size() == 1260 && structured == ps.size() && parts.complete && parts.count == 126 &&
                    meeting.empty();
    json report{{"check", "Hoffman-Singleton pentagon structure"},
                {"pentagons", ps.size()},
                {"pentagons_with_structure", structured},
                {"pentagon_partitions", parts.count},
                {"petersen_subgraphs", subs.size()},
                {"petersen_meeting_all_in_2", meeting.size()},
                {"first_failure", first_failure},
                {"verified", ok}};
    emit(report);
    return ok ? kOk : kRefuted;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SRGINT_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("SRGINT_BUDGET is not a number");
        }
    }
    return UINT64_MAX;
}

int cmd_search(const std::string& graph, std::int64_t s, std::int64_t t, std::optional<std::uint64_t> budget,
               const std::string& out) {
    const auto g = load_graph(graph);
    SearchOptions o;
    o.s = s;
    o.t = t;
    o.budget = budget ? *budget : default_budget();
    SearchResult r;
    try {
        r = find_representation(g, o);
    } catch (const std::domain_error& e) {
        emit({{"verdict", "precondition"}, {"error", e.what()}});
        return kUsage;
    }
    auto report = r.to_json();
    if (r.certificate) {
        const auto text = certificate_to_text(*r.certificate);
        if (out.empty())
            report["certificate"] = text;
        else
            write_file(out, text);
    }
    emit(report);
    switch (r.verdict) {
        case Verdict::Found: return kOk;
        case Verdict::Unsat: return kRefuted;
        case Verdict::Unknown: return kBudget;
    }
    return kBudget;
}

int cmd_profiles(const std::string& target, int gamma_abs) {
    ProfileQuery q;
    std::set<Profile> expected;
    if (target == "hosi") {
        q = gamma_abs == 2 ? hosi_abs2_query() : hosi_profile_query();
        if (gamma_abs != 2) expected = hosi_expected_profiles();
    } else if (target == "gq39c") {
        q = gamma_abs == 2 ? gq39c_abs2_query() : gq39c_profile_query();
        if (gamma_abs != 2) expected = gq39c_expected_profiles();
    } else {
        throw InputError("unknown profile target '" + target + "'");
    }
    const auto got = profile_solutions(q);
    json report{{"target", target},
                {"gamma_abs", gamma_abs},
                {"profiles", profiles_to_json(got)},
                {"expected", profiles_to_json(expected)},
                {"verified", got == expected}};
    if (target == "gq39c" && gamma_abs == 2) {
        std::int64_t least = -1;
        for (const auto& p : got) {
            const auto sup = profile_support(p);
            if (least < 0 || sup < least) least = sup;
        }
        report["min_support"] = least;
        report["expected"] = "nonempty, every support at least 31";
        report["verified"] = !got.empty() && least >= 31;
    }
    emit(report);
    return report["verified"] ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly regular graphs, designs and s-integrability certificates"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker cap (all work runs on one thread)")->check(CLI::PositiveNumber);

    std::function<int()> action;

    auto* build = app.add_subcommand("build", "Construct a named graph, design or certificate");
    std::string build_name, build_out;
    build->add_option("name", build_name, "Construction name")->required();
    build->add_option("--out,-o", build_out, "Output file (graph6, .json, design or certificate text)");
    build->callback([&] { action = [&] { return cmd_build(build_name, build_out); }; });

    auto* verify = app.add_subcommand("verify", "Check a property exactly");
    verify->require_subcommand(1);
    std::string v_graph, v_cert, v_design;
    int v_t = 2;
    std::optional<int> v_lambda;
    auto* v_srg = verify->add_subcommand("srg", "Strong regularity");
    v_srg->add_option("graph", v_graph, "Graph file or construction name")->required();
    v_srg->callback([&] { action = [&] { return verify_srg(v_graph); }; });
    auto* v_certificate = verify->add_subcommand("certificate", "N^T N = s(A + tI)");
    v_certificate->add_option("certificate", v_cert, "Certificate file or cert:<name>")->required();
    v_certificate->add_option("graph", v_graph, "Graph file or construction name")->required();
    v_certificate->callback([&] { action = [&] { return verify_certificate_cmd(v_cert, v_graph); }; });
    auto* v_des = verify->add_subcommand("design", "t-design property");
    v_des->add_option("design", v_design, "Design file or construction name")->required();
    v_des->add_option("-t", v_t, "Strength t")->check(CLI::PositiveNumber);
    v_des->add_option("--lambda", v_lambda, "Required lambda");
    v_des->callback([&] { action = [&] { return verify_design(v_design, v_t, v_lambda); }; });
    verify->add_subcommand("gram-mcl", "Gram matrix of Delta tilde against the McLaughlin complement")
        ->callback([&] { action = verify_gram_mcl; });
    verify->add_subcommand("pentagons", "Hoffman-Singleton pentagon and Petersen structure")
        ->callback([&] { action = verify_pentagons; });

    auto* search = app.add_subcommand("search", "Search for N with N^T N = s(A + tI)");
    std::string s_graph, s_out;
    std::int64_t s_s = 1, s_t = 1;
    std::optional<std::uint64_t> s_budget;
    search->add_option("graph", s_graph, "Graph file or construction name")->required();
    search->add_option("s", s_s, "Scale s")->required()->check(CLI::PositiveNumber);
    search->add_option("t", s_t, "Shift t")->required()->check(CLI::PositiveNumber);
    search->add_option("--budget", s_budget, "Node budget (default: SRGINT_BUDGET, else unlimited)");
    search->add_option("--out,-o", s_out, "Certificate output file");
    search->callback([&] { action = [&] { return cmd_search(s_graph, s_s, s_t, s_budget, s_out); }; });

    auto* profiles = app.add_subcommand("profiles", "Solve the row profile equations");
    std::string p_target;
    int p_abs = 1;
    profiles->add_option("target", p_target, "hosi or gq39c")->required()->check(CLI::IsMember({"hosi", "gq39c"}));
    profiles->add_option("--gamma-abs", p_abs, "Entry size at the base vertex")->check(CLI::IsMember({1, 2}));
    profiles->callback([&] { action = [&] { return cmd_profiles(p_target, p_abs); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
