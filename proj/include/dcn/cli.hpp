#pragma once

// Command-line front end.  `run` takes the argument vector without the program
// name and writes to the given streams, so the whole surface is testable
// in-process.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dihedral.hpp"
#include "format.hpp"
#include "moment_graph.hpp"
#include "neighborhood.hpp"
#include "oracle.hpp"

namespace dcn::cli {

enum ExitCode : int { ok = 0, usage_error = 1, mismatch = 2 };

using nlohmann::json;

inline json to_json(const ElementSet& s)
{
    json out = json::array();
    for (const GroupElement& g : s)
        out.push_back(to_string(g));
    return out;
}

inline json to_json(const Degree& d) { return json::array({d.a, d.b}); }

inline json to_json(const Mismatch& m)
{
    return {{"u", to_string(m.u)}, {"d", to_json(m.d)}, {"closed", to_json(m.closed)}, {"oracle", to_json(m.oracle)}};
}

/// ANSI colouring for human-readable output, enabled by DCN_COLOR=1.
class Palette {
public:
    explicit Palette(bool enabled) : enabled_(enabled) {}

    static Palette from_env()
    {
        const char* v = std::getenv("DCN_COLOR");
        return Palette(v != nullptr && std::string(v) == "1");
    }

    std::string good(const std::string& s) const { return wrap("\x1b[32m", s); }
    std::string bad(const std::string& s) const { return wrap("\x1b[31m", s); }

private:
    std::string wrap(const char* code, const std::string& s) const
    {
        return enabled_ ? code + s + "\x1b[0m" : s;
    }
    bool enabled_;
};

namespace detail {

// CLI11 validators that reuse the library grammar so malformed values are
// reported as usage errors before any command runs.
inline std::string check_element(const std::string& s)
{
    try {
        parse_element(s);
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

inline std::string check_degree(const std::string& s)
{
    try {
        parse_degree(s);
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               Palette palette = Palette::from_env())
{
    CLI::App app{"Curve neighborhoods in the moment graph of the infinite dihedral group"};
    app.name("dcn");
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "Structured output");

    const CLI::Validator element_check(detail::check_element, "ELEMENT", "element");
    const CLI::Validator degree_check(detail::check_degree, "A,B", "degree");

    std::string g_text, h_text, u_text, d_text, max_d_text;

    auto* length_cmd = app.add_subcommand("length", "Coxeter length of an element");
    length_cmd->add_option("g", g_text, "Element")->required()->check(element_check);

    auto* word_cmd = app.add_subcommand("word", "Reduced word of an element");
    word_cmd->add_option("g", g_text, "Element")->required()->check(element_check);

    auto* phi_cmd = app.add_subcommand("phi", "Degree map (#s0, #s1) of an element");
    phi_cmd->add_option("g", g_text, "Element")->required()->check(element_check);

    auto* mul_cmd = app.add_subcommand("mul", "Product g*h");
    mul_cmd->add_option("lhs", g_text, "Left factor")->required()->check(element_check);
    mul_cmd->add_option("rhs", h_text, "Right factor")->required()->check(element_check);

    auto add_u_d = [&](CLI::App* cmd) {
        cmd->add_option("--u", u_text, "Start element")->required()->check(element_check);
        cmd->add_option("--d", d_text, "Degree bound a,b")->required()->check(degree_check);
    };

    auto* ad_cmd = app.add_subcommand("ad", "The set A_d(u)");
    add_u_d(ad_cmd);

    std::string method = "closed";
    auto* gamma_cmd = app.add_subcommand("gamma", "Curve neighborhood Gamma_d(u)");
    add_u_d(gamma_cmd);
    gamma_cmd->add_option("--method", method, "closed, oracle or both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));

    auto* chains_cmd = app.add_subcommand("chains", "Increasing chains from u of degree <= d");
    add_u_d(chains_cmd);

    std::uint64_t max_length = 0;
    std::string format = "dot";
    auto* graph_cmd = app.add_subcommand("graph", "Moment-graph slice up to a length");
    graph_cmd->add_option("--max-length", max_length, "Largest vertex length")->required();
    graph_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

    std::uint64_t max_u_length = 0;
    unsigned jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Compare closed form against the chain oracle");
    verify_cmd->add_option("--max-u-length", max_u_length, "Largest length of u")->required();
    verify_cmd->add_option("--max-d", max_d_text, "Largest degree a,b")->required()->check(degree_check);
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    const auto emit = [&](json input, json result) {
        out << json{{"input", std::move(input)}, {"result", std::move(result)}}.dump(2) << "\n";
    };

    try {
        if (length_cmd->parsed()) {
            const GroupElement g = parse_element(g_text);
            if (as_json)
                emit({{"g", to_string(g)}}, explicit_length(g));
            else
                out << explicit_length(g) << "\n";
        } else if (word_cmd->parsed()) {
            const GroupElement g = parse_element(g_text);
            const Word w = reduced_word(g);
            if (as_json) {
                json letters = json::array();
                for (Generator x : w)
                    letters.push_back(to_string(x));
                emit({{"g", to_string(g)}}, letters);
            } else {
                out << to_string(w) << "\n";
            }
        } else if (phi_cmd->parsed()) {
            const GroupElement g = parse_element(g_text);
            if (as_json)
                emit({{"g", to_string(g)}}, to_json(phi(g)));
            else
                out << to_string(phi(g)) << "\n";
        } else if (mul_cmd->parsed()) {
            const GroupElement g = parse_element(g_text), h = parse_element(h_text);
            const GroupElement gh = mul(g, h);
            if (as_json)
                emit({{"g", to_string(g)}, {"h", to_string(h)}}, to_string(gh));
            else
                out << to_string(gh) << "\n";
        } else if (ad_cmd->parsed()) {
            const GroupElement u = parse_element(u_text);
            const Degree d = parse_degree(d_text);
            const ElementSet a = ad_set(u, d);
            if (as_json)
                emit({{"u", to_string(u)}, {"d", to_json(d)}}, to_json(a));
            else
                out << to_string(a) << "\n";
        } else if (gamma_cmd->parsed()) {
            const GroupElement u = parse_element(u_text);
            const Degree d = parse_degree(d_text);
            const json input = {{"u", to_string(u)}, {"d", to_json(d)}, {"method", method}};
            if (method != "both") {
                const ElementSet s = method == "closed" ? curve_neighborhood(u, d) : curve_neighborhood_oracle(u, d);
                if (as_json)
                    emit(input, to_json(s));
                else
                    out << to_string(s) << "\n";
                return ok;
            }
            const ElementSet closed = curve_neighborhood(u, d);
            const ElementSet oracle = curve_neighborhood_oracle(u, d);
            const bool agree = closed == oracle;
            if (as_json) {
                out << json{{"input", input},
                            {"result", to_json(closed)},
                            {"closed", to_json(closed)},
                            {"oracle", to_json(oracle)},
                            {"agree", agree}}
                           .dump(2)
                    << "\n";
            } else {
                out << "closed: " << to_string(closed) << "\n";
                out << "oracle: " << to_string(oracle) << "\n";
                if (!agree)
                    out << palette.bad("results differ") << "\n";
            }
            return agree ? ok : mismatch;
        } else if (chains_cmd->parsed()) {
            const GroupElement u = parse_element(u_text);
            const Degree d = parse_degree(d_text);
            const std::vector<Chain> chains = enumerate_chains(u, d);
            if (as_json) {
                json list = json::array();
                for (const Chain& c : chains) {
                    json vertices = json::array({to_string(c.start)});
                    json roots = json::array();
                    for (const Step& s : c.steps) {
                        vertices.push_back(to_string(s.target));
                        roots.push_back(to_json(s.root.to_degree()));
                    }
                    list.push_back({{"vertices", vertices}, {"roots", roots}, {"degree", to_json(c.degree())}});
                }
                emit({{"u", to_string(u)}, {"d", to_json(d)}}, list);
            } else {
                for (const Chain& c : chains)
                    out << to_string(c) << "  degree " << to_string(c.degree()) << "\n";
                out << chains.size() << " chains\n";
            }
        } else if (graph_cmd->parsed()) {
            if (as_json || format == "json") {
                const GraphSlice slice = moment_graph_slice(max_length);
                json edges = json::array();
                for (const Edge& e : slice.edges)
                    edges.push_back({{"from", to_string(e.from)}, {"to", to_string(e.to)}, {"root", to_json(e.root.to_degree())}});
                emit({{"max_length", max_length}}, {{"vertices", to_json(slice.vertices)}, {"edges", edges}});
            } else {
                write_dot(out, max_length);
            }
        } else if (verify_cmd->parsed()) {
            const Degree max_d = parse_degree(max_d_text);
            const DiffReport report = differential_check(max_u_length, max_d, jobs);
            if (as_json) {
                json mismatches = json::array();
                for (const Mismatch& m : report.mismatches)
                    mismatches.push_back(to_json(m));
                emit({{"max_u_length", max_u_length}, {"max_d", to_json(max_d)}},
                     {{"cases_total", report.cases_total},
                      {"cases_passed", report.cases_passed},
                      {"mismatches", mismatches}});
            } else {
                const std::string summary = std::to_string(report.cases_total) + " cases, " +
                                            std::to_string(report.mismatches.size()) + " mismatches";
                out << (report.ok() ? palette.good(summary) : palette.bad(summary)) << "\n";
                for (const Mismatch& m : report.mismatches)
                    out << "mismatch u=" << to_string(m.u) << " d=" << to_string(m.d)
                        << " closed=" << to_string(m.closed) << " oracle=" << to_string(m.oracle) << "\n";
            }
            return report.ok() ? ok : mismatch;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return ok;
}

} // namespace dcn::cli
