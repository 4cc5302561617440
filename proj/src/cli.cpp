#include "ssn/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <unistd.h>

#include "ssn/errors.hpp"
#include "ssn/families.hpp"
#include "ssn/network.hpp"
#include "ssn/serialize.hpp"
#include "ssn/verify.hpp"

namespace ssn::cli {

namespace {

// Argument problems detected after CLI11 has accepted the command line.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Params {
    std::string family;
    std::map<std::string, std::string> values;  // --l, --m, ... as given
    bool minus_one = false;
    std::string variant = "gamma";
    std::string format = "json";
    std::string output;
};

const std::map<std::string, std::vector<std::string>> kFamilyParams = {
    {"em1", {"l", "n", "p"}},
    {"em2", {"l", "m", "n", "p"}},
    {"em3", {"a1", "a2", "a3"}},
    {"torus", {"p", "q"}},
};

const std::map<std::string, std::vector<std::string>> kRequired = {
    {"em1", {"l"}},
    {"em2", {"l", "m"}},
    {"em3", {"a1", "a2", "a3"}},
    {"torus", {"p", "q"}},
};

std::int64_t parse_int(const std::string& name, const std::string& text) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("--" + name + ": expected an integer, got \"" + text + "\"");
}

IntRange parse_range(const std::string& name, const std::string& text) {
    auto colon = text.find(':', 1);
    if (colon == std::string::npos) {
        auto v = parse_int(name, text);
        return {v, v};
    }
    return {parse_int(name, text.substr(0, colon)), parse_int(name, text.substr(colon + 1))};
}

void check_params(const Params& p) {
    const auto& allowed = kFamilyParams.at(p.family);
    for (const auto& [name, value] : p.values)
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw UsageError("--" + name + " is not a parameter of family " + p.family);
    for (const auto& name : kRequired.at(p.family))
        if (!p.values.count(name)) throw UsageError("family " + p.family + " requires --" + name);
}

std::int64_t int_param(const Params& p, const std::string& name) {
    auto it = p.values.find(name);
    return it == p.values.end() ? 0 : parse_int(name, it->second);
}

IntRange range_param(const Params& p, const std::string& name, IntRange fallback = {0, 0}) {
    auto it = p.values.find(name);
    return it == p.values.end() ? fallback : parse_range(name, it->second);
}

ExtendedRational rational_param(const Params& p, const std::string& name) {
    try {
        return ExtendedRational::parse(p.values.at(name));
    } catch (const ParseError& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

void add_family_options(CLI::App* sub, Params& params) {
    sub->add_option("family", params.family, "em1, em2, em3 or torus")
        ->required()
        ->check(CLI::IsMember({"em1", "em2", "em3", "torus"}));
    for (const char* name : {"l", "m", "n", "p", "q", "a1", "a2", "a3"}) {
        std::string flag = std::string("--") + name;
        sub->add_option_function<std::string>(
            flag, [&params, name](const std::string& v) { params.values[name] = v; },
            std::string(name[0] == 'a' ? "rational p/q" : "integer"));
    }
    sub->add_flag("--minus-one", params.minus_one, "use the slope gamma - 1");
    sub->add_option("-o,--output", params.output, "write the document to a file");
}

std::string text_of(const SurgeryResult& r) {
    std::ostringstream os;
    os << r.vertex.id() << '\n' << "space: " << r.space.str() << '\n';
    auto c = recognize(r.space);
    os << "kind: " << to_string(c.kind);
    for (const auto& l : c.lens) os << " L(" << l.p << ',' << l.q << ')';
    if (c.kind == SfsKind::SeifertOverS2 || c.kind == SfsKind::SeifertOverRP2) os << ' ' << c.space.str();
    os << '\n';
    return os.str();
}

std::string text_of(const NetworkPath& path) {
    std::ostringstream os;
    os << path.start.id();
    if (path.start_identified_with) os << " = " << path.start_identified_with->id();
    os << '\n';
    for (const auto& s : path.steps) {
        os << "  " << s.move.str() << " -> " << s.vertex.id();
        if (s.identified_with) os << " = " << s.identified_with->id();
        os << '\n';
    }
    return os.str();
}

std::string text_of(const NetworkGraph& g) {
    std::ostringstream os;
    for (const auto& n : g.nodes) {
        os << n.id;
        for (const auto& a : n.aliases) os << " = " << a;
        os << '\n';
    }
    for (const auto& e : g.edges) os << e.from << " -> " << e.to << ' ' << e.move << '\n';
    return os.str();
}

SurgeryResult vertex_of(const Params& p) {
    if (p.family == "em1") return em1_vertex(int_param(p, "l"), int_param(p, "n"), int_param(p, "p"), p.minus_one);
    if (p.family == "em2")
        return em2_vertex(int_param(p, "l"), int_param(p, "m"), int_param(p, "n"), int_param(p, "p"), p.minus_one);
    if (p.family == "em3") {
        if (p.minus_one) throw UsageError("--minus-one does not apply to em3");
        return em3_vertex(rational_param(p, "a1"), rational_param(p, "a2"), rational_param(p, "a3"));
    }
    if (p.minus_one) throw UsageError("--minus-one does not apply to torus");
    return torus_reducible_surgery(int_param(p, "p"), int_param(p, "q"));
}

std::string vertex_doc(const Params& p) {
    SurgeryResult r = vertex_of(p);
    if (p.format == "text") return text_of(r);
    if (p.format != "json") throw UsageError("vertex supports --format json or text");
    auto j = to_json(r);
    if (p.family == "em3") {
        auto a1 = rational_param(p, "a1"), a2 = rational_param(p, "a2"), a3 = rational_param(p, "a3");
        auto t = *em3_trivializable(a1, a2, a3);
        j["trivialization"] = {{"case", t.which == Em3Case::I ? "I" : "II"},
                               {t.which == Em3Case::I ? "n" : "p", t.parameter},
                               {"swapped", t.swapped}};
        j["surgery_description"] = to_json(em3_surgery_description(a1, a2, a3));
    }
    return j.dump(2) + "\n";
}

std::string path_doc(const Params& p) {
    NetworkPath path;
    if (p.family == "em1")
        path = em1_path(int_param(p, "l"), int_param(p, "n"), int_param(p, "p"), p.minus_one);
    else if (p.family == "em2")
        path = em2_path(int_param(p, "l"), int_param(p, "m"), int_param(p, "n"), int_param(p, "p"), p.minus_one);
    else if (p.family == "em3")
        path = em3_path(rational_param(p, "a1"), rational_param(p, "a2"), rational_param(p, "a3"));
    else
        throw UsageError("path is defined for em1, em2 and em3");
    if (p.format == "text") return text_of(path);
    if (p.format != "json") throw UsageError("path supports --format json or text");
    return to_json(path).dump(2) + "\n";
}

std::string graph_doc(const Params& p) {
    GraphRequest r;
    if (p.family == "em1") r.family = Family::EM1;
    if (p.family == "em2") r.family = Family::EM2;
    if (p.family == "em3") r.family = Family::EM3;
    if (p.family == "torus") r.family = Family::Torus;
    if (r.family == Family::EM3) {
        r.a1 = rational_param(p, "a1");
        r.a2 = rational_param(p, "a2");
        r.a3 = rational_param(p, "a3");
    } else {
        r.l = range_param(p, "l");
        r.m = range_param(p, "m", {1, 1});
        r.n = range_param(p, "n");
        r.p = range_param(p, "p");
        r.q = range_param(p, "q");
    }
    if (p.variant == "both")
        r.variant = SlopeVariant::Both;
    else if (p.minus_one || p.variant == "minus-one")
        r.variant = SlopeVariant::GammaMinusOne;
    NetworkGraph g = export_graph(r);
    if (p.format == "dot") return to_dot(g);
    if (p.format == "text") return text_of(g);
    return to_json(g).dump(2) + "\n";
}

int verify(std::ostream& out, std::size_t fuzz, std::uint64_t seed, bool color) {
    VerifyOptions o;
    o.fuzz = fuzz;
    o.seed = seed;
    auto paint = [color](const char* code, const std::string& s) {
        return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
    };
    std::size_t failed = 0;
    for (const auto& r : run_verify(o)) {
        out << (r.ok() ? paint("32", "ok  ") : paint("31", "FAIL")) << ' ' << r.name << " (" << r.cases << " cases)\n";
        for (const auto& f : r.failures) out << "    " << f << '\n';
        if (!r.ok()) ++failed;
    }
    out << (failed ? paint("31", std::to_string(failed) + " check(s) failed") : paint("32", "all checks passed")) << '\n';
    return failed ? 1 : 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Seifert surgery network calculator", "ssnet"};
    app.require_subcommand(1);
    app.footer("Ranges are inclusive \"lo:hi\", e.g. --n=-2:2. Rationals are \"p/q\" or integers.");

    Params params;
    auto* vertex = app.add_subcommand("vertex", "slope and Seifert invariants of a family vertex");
    auto* path = app.add_subcommand("path", "network path from a family vertex to a torus knot or the unknot");
    auto* graph = app.add_subcommand("graph", "network subgraph over parameter ranges");
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-consistency checks");

    for (auto* sub : {vertex, path, graph}) {
        add_family_options(sub, params);
        sub->add_option("--format", params.format, "output format")
            ->check(CLI::IsMember(sub == graph ? std::vector<std::string>{"json", "dot", "text"}
                                               : std::vector<std::string>{"json", "text"}));
    }
    graph->add_option("--variant", params.variant, "slopes to include")
        ->check(CLI::IsMember({"gamma", "minus-one", "both"}));

    std::size_t fuzz = VerifyOptions{}.fuzz;
    std::uint64_t seed = VerifyOptions{}.seed;
    verify_cmd->add_option("--fuzz", fuzz, "random cases per fuzzed property");
    verify_cmd->add_option("--seed", seed, "random seed");

    bool color = std::getenv("NO_COLOR") == nullptr && &out == &std::cout && isatty(STDOUT_FILENO);

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (verify_cmd->parsed()) return verify(out, fuzz, seed, color);

        check_params(params);
        std::string doc;
        if (vertex->parsed())
            doc = vertex_doc(params);
        else if (path->parsed())
            doc = path_doc(params);
        else
            doc = graph_doc(params);

        if (params.output.empty()) {
            out << doc;
        } else {
            std::ofstream f(params.output, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + params.output + " for writing");
            f << doc;
        }
        return 0;
    } catch (const UsageError& e) {
        CLI::App* sub = vertex->parsed() ? vertex : path->parsed() ? path : graph;
        err << "error: " << e.what() << "\n\n" << sub->help();
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace ssn::cli
