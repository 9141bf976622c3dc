#pragma once

// Command-line front end. Kept in a header so the tests can drive it
// in-process and check output and exit codes.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirichlet/dirichlet.hpp"

namespace dirichlet::cli {

enum ExitCode : int { kOk = 0, kCertificationFailure = 1, kValidationError = 2, kSolverFailure = 3 };

inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum class Format { Json, Csv, Table };

struct RunConfig {
    std::string subcommand;
    std::string input;
    std::string family;
    Format format = Format::Json;
    double tol = kBoundTol;
    std::uint64_t seed = kDefaultSeed;
    std::size_t jobs = 1;
    bool limit_override = false;
};

struct FamilySpec {
    std::string name;
    std::vector<std::size_t> args;
};

/// `name:a,b,...` with non-negative integer arguments.
inline FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "family spec needs name:args, got \"" + text + "\"");
    FamilySpec fs{text.substr(0, colon), {}};
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw Error(Errc::ParseError, "bad family argument \"" + item + "\" in \"" + text + "\"");
        }
        fs.args.push_back(std::stoul(item));
    }
    return fs;
}

inline void expect_arity(const FamilySpec& fs, std::size_t n) {
    if (fs.args.size() != n) {
        throw Error(Errc::ParseError, fs.name + " takes " + std::to_string(n) + " argument(s), got " +
                                          std::to_string(fs.args.size()));
    }
}

/// Families with a boundary: star:b, path:n, pc:l,a, slp:p,q,c,d,e, leafy:L,q,
/// random-tree:n and random:n (the last two use the seed).
inline BoundaryGraph make_family(const FamilySpec& fs, std::uint64_t seed) {
    const auto& a = fs.args;
    if (fs.name == "star") {
        expect_arity(fs, 1);
        return gen_star(a[0]);
    }
    if (fs.name == "path") {
        expect_arity(fs, 1);
        return gen_path(a[0]);
    }
    if (fs.name == "pc") {
        expect_arity(fs, 2);
        return gen_path_cliques({a[0], a[1]});
    }
    if (fs.name == "slp") {
        expect_arity(fs, 5);
        return gen_slp({a[0], a[1], a[2], a[3], a[4]});
    }
    if (fs.name == "leafy") {
        expect_arity(fs, 2);
        return gen_leafy_path(a[0], a[1]);
    }
    if (fs.name == "random-tree" || fs.name == "random") {
        expect_arity(fs, 1);
        if (a[0] < 3) throw Error(Errc::ParamOutOfRange, fs.name + " needs n >= 3");
        gen::Rng rng(seed);
        return fs.name == "random" ? gen::random_boundary_graph(rng, a[0]) : gen::random_tree(rng, a[0]);
    }
    if (fs.name == "mohar") {
        throw Error(Errc::ParamOutOfRange, "mohar:k,t has no boundary; only `spectrum` accepts it");
    }
    throw Error(Errc::ParseError, "unknown family \"" + fs.name + "\"");
}

class App {
public:
    App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"First Dirichlet eigenvalues of graphs with boundary: spectra, bounds, decompositions, "
                     "extremal trees."};
        app.set_help_all_flag("--help-all");
        app.require_subcommand(1);
        app.fallthrough();

        std::string format = "json";
        app.add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
        app.add_option("--tol", cfg_.tol, "Tolerance for bound checks and argmax ties")->capture_default_str();
        app.add_option("--seed", cfg_.seed, "Seed for random families")->capture_default_str();
        app.add_option("--jobs", cfg_.jobs, "Worker threads for extremal searches")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        app.add_flag("--limit-override", cfg_.limit_override, "Allow enumeration beyond k <= 8, b <= 20");

        auto add_input = [&](CLI::App* sub) {
            sub->add_option("input", cfg_.input, "Graph JSON file");
            sub->add_option("--family", cfg_.family, "Family spec, e.g. star:3, path:5, pc:2,3, slp:2,1,0,1,0");
        };

        auto* spectrum = app.add_subcommand("spectrum", "Dirichlet spectrum and ground state");
        add_input(spectrum);

        auto* bounds = app.add_subcommand("bounds", "Certify every applicable bound against lambda1");
        add_input(bounds);
        std::string report_path;
        bounds->add_option("--report", report_path, "Re-check a saved bounds report instead of a graph");

        auto* decompose = app.add_subcommand("decompose", "Path covering/packing decomposition");
        add_input(decompose);
        std::string method = "forest";
        decompose->add_option("--method", method, "forest or tree-center")
            ->check(CLI::IsMember({"forest", "tree-center"}))
            ->capture_default_str();

        auto* extremal = app.add_subcommand("extremal", "Exhaustive check of the extremal trees");
        long a = 1, k = 3;
        std::string which = "all";
        extremal->add_option("-a", a, "Leaves per interior vertex")->required();
        extremal->add_option("-k", k, "Interior vertices")->required();
        extremal->add_option("--which", which, "Leaf case")
            ->check(CLI::IsMember({"ak+1", "ak+k-1", "ak+2", "all"}))
            ->capture_default_str();

        auto* generate = app.add_subcommand("generate", "Print a family member as graph JSON");
        generate->add_option("--family", cfg_.family, "Family spec")->required();

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << "\n";
            return kValidationError;
        }
        cfg_.format = format == "csv" ? Format::Csv : format == "table" ? Format::Table : Format::Json;

        try {
            if (!(cfg_.tol > 0.0)) throw Error(Errc::ParamOutOfRange, "--tol must be positive");
            if (*spectrum) return cmd_spectrum();
            if (*bounds) return report_path.empty() ? cmd_bounds() : cmd_recheck(report_path);
            if (*decompose) return cmd_decompose(method);
            if (*extremal) return cmd_extremal(a, k, which);
            if (*generate) return cmd_generate();
        } catch (const Error& e) {
            err_ << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
            if (e.code() == Errc::Mismatch) return kCertificationFailure;
            return is_validation_error(e.code()) ? kValidationError : kSolverFailure;
        }
        return kValidationError;
    }

private:
    BoundaryGraph load_input() {
        if (!cfg_.input.empty() && !cfg_.family.empty()) {
            throw Error(Errc::ParseError, "give either an input file or --family, not both");
        }
        if (!cfg_.family.empty()) return make_family(parse_family_spec(cfg_.family), cfg_.seed);
        if (cfg_.input.empty()) throw Error(Errc::ParseError, "no input: give a graph file or --family");
        return load_boundary_graph(cfg_.input);
    }

    void print_json(const nlohmann::json& j) { out_ << j.dump(2) << "\n"; }

    int cmd_spectrum() {
        if (!cfg_.family.empty() && cfg_.family.rfind("mohar:", 0) == 0) return cmd_mohar();
        auto bg = load_input();
        auto sol = solve_dirichlet(bg);
        switch (cfg_.format) {
        case Format::Json: print_json(spectrum_json(bg, sol)); break;
        case Format::Csv:
            out_ << "index,eigenvalue\n";
            for (std::size_t i = 0; i < sol.spectrum.eigenvalues.size(); ++i) {
                out_ << i + 1 << ',' << fmt12(sol.spectrum.eigenvalues[i]) << "\n";
            }
            break;
        case Format::Table:
            out_ << "lambda1 " << fmt12(sol.ground.lambda1) << "\n";
            out_ << "gap     " << fmt12(sol.ground.spectral_gap) << "\n";
            out_ << "spectrum";
            for (double x : sol.spectrum.eigenvalues) out_ << ' ' << fmt12(x);
            out_ << "\nvertex  f\n";
            for (std::size_t i = 0; i < bg.interior().size(); ++i) {
                out_ << std::left << std::setw(8) << bg.interior()[i] << fmt12(sol.ground.eigenfunction[i]) << "\n";
            }
            break;
        }
        return kOk;
    }

    /// Laplacian μ2 of P_{k,t} against 4/(nD).
    int cmd_mohar() {
        auto fs = parse_family_spec(cfg_.family);
        expect_arity(fs, 2);
        Graph g = gen_mohar({fs.args[0], fs.args[1]});
        const double n = static_cast<double>(g.order());
        const double D = static_cast<double>(fs.args[1] + 2);
        const double mu2 = laplacian_mu2(g);
        const double lower = 4.0 / (n * D);
        nlohmann::json j = {{"n", g.order()}, {"diameter", fs.args[1] + 2}, {"mu2", num12(mu2)},
                            {"lower_4_over_nD", num12(lower)}, {"holds", mu2 >= lower - cfg_.tol}};
        if (cfg_.format == Format::Json) {
            print_json(j);
        } else {
            out_ << "n,diameter,mu2,lower,holds\n"
                 << g.order() << ',' << fs.args[1] + 2 << ',' << fmt12(mu2) << ',' << fmt12(lower) << ','
                 << (mu2 >= lower - cfg_.tol) << "\n";
        }
        return mu2 >= lower - cfg_.tol ? kOk : kCertificationFailure;
    }

    void emit_report(const BoundReport& rep) {
        switch (cfg_.format) {
        case Format::Json: print_json(to_json(rep)); break;
        case Format::Csv: out_ << bound_report_csv(rep); break;
        case Format::Table:
            out_ << "lambda1 " << fmt12(rep.lambda1) << "   |Omega| " << rep.metrics.interior_size << "   r "
                 << rep.metrics.inscribed_radius << "   D " << rep.metrics.diameter << "\n";
            for (const auto& b : rep.bounds) {
                out_ << std::left << std::setw(30) << b.name << std::setw(7) << to_string(b.kind) << std::setw(20)
                     << fmt12(b.value) << (b.equality ? "equality " : "")
                     << (!b.asserted ? "(reference)" : b.holds ? "ok" : "VIOLATED") << "\n";
            }
            for (const auto& s : rep.skipped) out_ << "skipped: " << s << "\n";
            out_ << (rep.certified() ? "CERTIFIED" : "FAILED") << "\n";
            break;
        }
    }

    int cmd_bounds() {
        auto bg = load_input();
        VerifyOptions opts;
        opts.tolerance = cfg_.tol;
        auto rep = verify_all(bg, opts);
        emit_report(rep);
        if (cfg_.format != Format::Json) {
            const auto& m = rep.metrics;
            err_ << "lambda1*|Omega|*D = "
                 << fmt12(rep.lambda1 * static_cast<double>(m.interior_size) * static_cast<double>(m.diameter))
                 << "\n";
        }
        return rep.certified() ? kOk : kCertificationFailure;
    }

    int cmd_recheck(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(Errc::ParseError, "cannot open " + path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(Errc::ParseError, e.what());
        }
        auto rep = bound_report_from_json(j);
        rep.tolerance = cfg_.tol;
        recheck(rep);
        emit_report(rep);
        return rep.certified() ? kOk : kCertificationFailure;
    }

    int cmd_decompose(const std::string& method) {
        auto bg = load_input();
        PathCollection pc;
        if (method == "tree-center") {
            if (!is_tree_with_leaf_boundary(bg)) {
                throw Error(Errc::NotATree, "tree-center decomposition needs a tree with leaf boundary");
            }
            pc = tree_path_decomposition(bg);
        } else {
            pc = shortest_path_forest_cover(bg);
        }
        auto cert = certify(bg, pc);
        switch (cfg_.format) {
        case Format::Json: {
            auto j = to_json(pc, cert);
            j["method"] = method;
            print_json(j);
            break;
        }
        case Format::Csv:
            out_ << "path,length,vertices\n";
            for (std::size_t i = 0; i < pc.paths.size(); ++i) {
                out_ << i << ',' << pc.paths[i].size() - 1 << ',';
                for (std::size_t j = 0; j < pc.paths[i].size(); ++j) out_ << (j ? " " : "") << pc.paths[i][j];
                out_ << "\n";
            }
            break;
        case Format::Table:
            for (const auto& p : pc.paths) {
                for (std::size_t j = 0; j < p.size(); ++j) out_ << (j ? " - " : "") << p[j];
                out_ << "\n";
            }
            out_ << "c " << cert.c << "   p " << cert.p << "   max length " << cert.max_length;
            if (cert.usable()) out_ << "   lower bound " << fmt12(lb_covering_packing(cert.c, cert.p, cert.max_length));
            out_ << "\n";
            break;
        }
        return kOk;
    }

    int cmd_extremal(long a, long k, const std::string& which) {
        SearchOptions opts;
        opts.jobs = cfg_.jobs;
        opts.tie_tol = cfg_.tol;
        opts.limits.override_limits = cfg_.limit_override;
        if (cfg_.limit_override) err_ << "warning: desk-scale enumeration limits disabled\n";
        auto rep = verify_extremal_theorems(a, k, parse_leaf_case(which), opts);
        switch (cfg_.format) {
        case Format::Json: print_json(to_json(rep)); break;
        case Format::Csv: out_ << extremal_report_csv(rep); break;
        case Format::Table:
            for (const auto& c : rep.checks) {
                out_ << std::left << std::setw(8) << to_string(c.leaf_case) << "b=" << std::setw(4) << c.b;
                if (!c.applicable) {
                    out_ << "n/a (" << c.note << ")\n";
                    continue;
                }
                out_ << "max " << fmt12(c.result->max_lambda1) << "  sigma " << fmt12(c.predicted_lambda1)
                     << "  classes " << c.result->total_enumerated << "  argmax " << c.result->argmax.size() << "  "
                     << (c.passed() ? "PASS" : "FAIL") << "\n";
                for (const auto& code : c.result->argmax) out_ << "    " << code.text << "\n";
            }
            break;
        }
        return rep.passed() ? kOk : kCertificationFailure;
    }

    int cmd_generate() {
        auto fs = parse_family_spec(cfg_.family);
        if (fs.name == "mohar") {
            expect_arity(fs, 2);
            Graph g = gen_mohar({fs.args[0], fs.args[1]});
            nlohmann::json edges = nlohmann::json::array();
            for (auto [u, v] : g.edges()) edges.push_back({u, v});
            print_json({{"n", g.order()}, {"edges", edges}});
            return kOk;
        }
        print_json(to_json(make_family(fs, cfg_.seed)));
        return kOk;
    }

    std::ostream& out_;
    std::ostream& err_;
    RunConfig cfg_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return App(out, err).run(args);
}

} // namespace dirichlet::cli
