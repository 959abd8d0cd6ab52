#ifndef KCLEAN_TOOLS_CLI_APP_HPP
#define KCLEAN_TOOLS_CLI_APP_HPP

#include <chrono>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kclean/io.hpp"
#include "kclean/kclean.hpp"

namespace kclean::cli {

using json = nlohmann::json;

struct Options {
    std::string file;
    std::string property;
    std::string mode;
    std::string u;
    std::string a;
    std::string order;
    std::string bound;
    int k = -1;
    int jobs = 1;
    bool find = false;
    bool verify = false;
    bool text = false;
    std::uint64_t seed = 1;
    int trials = 20;
    int n = 2;
    int maxexp = 2;
};

/// A loaded input file, converted to whichever views it supports.
struct Input {
    io::FileKind kind;
    std::optional<MonomialIdeal> ideal;
    std::optional<Multicomplex> multicomplex;
    std::optional<SimplicialComplex> complex;

    std::size_t nvars() const {
        if (ideal) {
            return ideal->nvars();
        }
        if (multicomplex) {
            return multicomplex->nvars();
        }
        return complex->vertices();
    }

    /// The ideal view: I itself, I(Γ), or I_Δ.
    MonomialIdeal as_ideal() const {
        if (ideal) {
            return *ideal;
        }
        if (multicomplex) {
            return to_ideal(*multicomplex);
        }
        return stanley_reisner(*complex);
    }

    /// The multicomplex view: Γ(I), Γ, or the {0,∞} encoding of Δ.
    Multicomplex as_multicomplex() const {
        if (multicomplex) {
            return *multicomplex;
        }
        if (ideal) {
            return from_ideal(*ideal);
        }
        return to_multicomplex(*complex);
    }
};

inline Input load(const std::string& path) {
    const json j = io::read_file(path);
    Input in{io::classify(j), std::nullopt, std::nullopt, std::nullopt};
    switch (in.kind) {
        case io::FileKind::ideal:
            in.ideal = io::ideal_from_json(j);
            break;
        case io::FileKind::multicomplex:
            in.multicomplex = io::multicomplex_from_json(j);
            break;
        case io::FileKind::complex:
            in.complex = io::complex_from_json(j);
            break;
    }
    return in;
}

inline json parse_json_arg(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        throw Error(std::string("malformed ") + what + ": " + text);
    }
}

inline ExpVec parse_vector(const std::string& text, std::size_t n, const char* what) {
    if (text.empty()) {
        throw Error(std::string("missing ") + what);
    }
    return io::expvec_from_json(parse_json_arg(text, what), n);
}

inline SearchBound parse_bound(const std::string& text, std::size_t n) {
    if (text.empty()) {
        return {};
    }
    const json j = parse_json_arg(text, "--bound");
    if (!j.is_array() || j.size() != n) {
        throw Error("--bound needs an array of " + std::to_string(n) + " nonnegative integers");
    }
    std::vector<int> caps;
    for (const auto& c : j) {
        if (!c.is_number_integer() || c.get<int>() < 0) {
            throw Error("--bound entries must be nonnegative integers");
        }
        caps.push_back(c.get<int>());
    }
    return {caps};
}

inline void require_k(int k, int lowest) {
    if (k < lowest) {
        throw Error("--k must be at least " + std::to_string(lowest));
    }
}

inline json caps_json(const std::vector<int>& caps) { return caps; }

/// Evaluates one command; throws Error on bad input.
class Runner {
public:
    explicit Runner(Options opt) : opt_(std::move(opt)) {}

    json ass_like(const std::string& which) {
        const Input in = load(opt_.file);
        const MonomialIdeal I = in.as_ideal();
        json primes = json::array();
        if (which == "ass") {
            for (const auto& p : ass(I)) {
                primes.push_back(to_string(p));
            }
        } else if (which == "min") {
            for (const auto& p : min_primes(I)) {
                primes.push_back(to_string(p));
            }
        } else if (which == "irreducible") {
            for (const auto& q : irreducible_decomposition(I)) {
                primes.push_back(to_string(q));
            }
        } else {
            return to_string(radical(I));
        }
        return primes;
    }

    json colon_cmd() {
        const MonomialIdeal I = load(opt_.file).as_ideal();
        const ExpVec u = parse_vector(opt_.u, I.nvars(), "--u");
        return {{"ideal", to_string(colon(I, u))}, {"json", io::to_json(colon(I, u))}};
    }

    json facets_cmd() {
        const Multicomplex g = load(opt_.file).as_multicomplex();
        json out = json::array();
        for (const auto& f : g.facets()) {
            out.push_back(to_string(f));
        }
        return {{"facets", out}, {"multicomplex", io::to_json(g)}};
    }

    json local_cmd(const std::string& which) {
        const Input in = load(opt_.file);
        if (in.kind == io::FileKind::complex) {
            if (opt_.a.empty()) {
                throw Error("missing --a");
            }
            const VarSet s = io::face_from_json(parse_json_arg(opt_.a, "--a"), in.complex->vertices());
            if (which == "star") {
                std::vector<VarSet> faces;
                for (VarSet f : in.complex->facets()) {
                    if (s.subset_of(f)) {
                        faces.push_back(f);
                    }
                }
                require_face(*in.complex, s, "star");
                return io::to_json(SimplicialComplex::from_facets(in.complex->vertices(), faces));
            }
            return io::to_json(which == "link" ? link_sc(*in.complex, s) : deletion_sc(*in.complex, s));
        }
        const Multicomplex g = in.as_multicomplex();
        const ExpVec a = parse_vector(opt_.a, g.nvars(), "--a");
        if (!member(g, a)) {
            throw Error(to_string(a) + " is not a face");
        }
        const Multicomplex r = which == "link" ? link(g, a) : which == "del" ? deletion(g, a) : star(g, a);
        json facets = json::array();
        for (const auto& f : r.facets()) {
            facets.push_back(to_string(f));
        }
        return {{"facets", facets}, {"multicomplex", io::to_json(r)}};
    }

    json polarize_cmd() {
        const Input in = load(opt_.file);
        if (in.kind == io::FileKind::multicomplex) {
            auto [gp, pm] = polarize_multicomplex(*in.multicomplex);
            return {{"multicomplex", io::to_json(gp)}, {"blocks", pm.blocks()}};
        }
        auto [ip, pm] = polarize_ideal(in.as_ideal());
        return {{"ideal", to_string(ip)}, {"json", io::to_json(ip)}, {"blocks", pm.blocks()}};
    }

    /// Sets result, certificate and bound_used.
    void check_cmd(json& doc) {
        const Input in = load(opt_.file);
        const std::string& p = opt_.property;
        if (p == "k-clean" || p == "pretty-k-clean") {
            require_k(opt_.k, 0);
            const MonomialIdeal I = in.as_ideal();
            const SearchBound bound = parse_bound(opt_.bound, I.nvars());
            auto tree = p == "k-clean" ? is_k_clean(I, opt_.k, bound) : is_pretty_k_clean(I, opt_.k, bound);
            doc["result"] = static_cast<bool>(tree);
            doc["certificate"] = tree ? io::to_json(*tree) : json(nullptr);
            doc["bound_used"] = caps_json(bound.caps ? *bound.caps : I.max_exponents());
            return;
        }
        if (p == "k-decomposable") {
            if (in.kind == io::FileKind::complex) {
                require_k(opt_.k, -1);
                auto tree = is_k_decomposable_sc(*in.complex, opt_.k);
                doc["result"] = static_cast<bool>(tree);
                doc["certificate"] = tree ? io::to_json(*tree) : json(nullptr);
                doc["bound_used"] = "exact";
                return;
            }
            require_k(opt_.k, 0);
            const Multicomplex g = in.as_multicomplex();
            const SearchBound bound = parse_bound(opt_.bound, g.nvars());
            auto tree = is_k_decomposable(g, opt_.k, bound);
            doc["result"] = static_cast<bool>(tree);
            doc["certificate"] = tree ? io::to_json(*tree) : json(nullptr);
            doc["bound_used"] = caps_json(bound.caps ? *bound.caps : default_shedding_caps(g));
            return;
        }
        if (p == "shellable") {
            shelling_find(in, doc);
            return;
        }
        throw Error("unknown property '" + p + "' (expected k-clean, pretty-k-clean, k-decomposable or shellable)");
    }

    void filtration_cmd(json& doc) {
        const MonomialIdeal I = load(opt_.file).as_ideal();
        const int k = opt_.k < 0 ? static_cast<int>(I.nvars()) - 1 : opt_.k;
        const SearchBound bound = parse_bound(opt_.bound, I.nvars());
        auto tree = is_pretty_k_clean(I, k, bound);
        doc["result"] = static_cast<bool>(tree);
        doc["bound_used"] = caps_json(bound.caps ? *bound.caps : I.max_exponents());
        if (!tree) {
            doc["certificate"] = nullptr;
            return;
        }
        const PrimeFiltration f = filtration_from_tree(*tree);
        json lines = json::array();
        for (const auto& s : f.steps) {
            lines.push_back(io::filtration_line(s));
        }
        doc["certificate"] = {{"steps", io::to_json(f)}, {"lines", lines}};
    }

    void shelling_cmd(json& doc) {
        const Input in = load(opt_.file);
        if (opt_.find == opt_.verify) {
            throw Error("shelling needs exactly one of --find or --verify");
        }
        if (opt_.find) {
            shelling_find(in, doc);
            return;
        }
        const json order = parse_json_arg(opt_.order, "--order");
        if (!order.is_array()) {
            throw Error("--order must be a JSON array");
        }
        doc["bound_used"] = "exact";
        doc["certificate"] = order;
        if (in.kind == io::FileKind::complex) {
            std::vector<VarSet> faces;
            for (const auto& f : order) {
                faces.push_back(io::face_from_json(f, in.complex->vertices()));
            }
            doc["result"] = is_shelling_sc(*in.complex, faces);
            return;
        }
        const Multicomplex g = in.as_multicomplex();
        std::vector<ExpVec> elems;
        for (const auto& f : order) {
            elems.push_back(io::expvec_from_json(f, g.nvars()));
        }
        doc["result"] = is_shelling(g, elems);
    }

    void shelling_find(const Input& in, json& doc) {
        doc["bound_used"] = "exact";
        if (in.kind == io::FileKind::complex) {
            auto order = is_shellable_sc(*in.complex);
            doc["result"] = static_cast<bool>(order);
            json cert = nullptr;
            if (order) {
                cert = json::array();
                for (VarSet f : *order) {
                    cert.push_back(io::to_json(f));
                }
            }
            doc["certificate"] = cert;
            return;
        }
        auto order = find_shelling(in.as_multicomplex());
        doc["result"] = static_cast<bool>(order);
        json cert = nullptr;
        if (order) {
            cert = json::array();
            for (const auto& f : *order) {
                cert.push_back(io::to_json(f));
            }
        }
        doc["certificate"] = cert;
    }

    void oracle_cmd(json& doc) {
        if (opt_.mode != "cross-check") {
            throw Error("oracle supports only 'cross-check'");
        }
        if (opt_.n < 1 || opt_.n > 3 || opt_.maxexp < 1 || opt_.maxexp > 3 || opt_.trials < 0) {
            throw Error("oracle cross-check needs 1 <= n <= 3, 1 <= maxexp <= 3 and trials >= 0");
        }
        const std::size_t n = static_cast<std::size_t>(opt_.n);
        Rng rng(opt_.seed);
        std::vector<MonomialIdeal> ideals;
        for (int t = 0; t < opt_.trials; ++t) {
            ideals.push_back(random_ideal(rng, n, opt_.maxexp, 4));
        }
        std::vector<int> ks;
        if (opt_.k >= 0) {
            ks.push_back(opt_.k);
        } else {
            for (int k = 0; k < opt_.n; ++k) {
                ks.push_back(k);
            }
        }
        auto check_one = [&ks](const MonomialIdeal& I) {
            json found = json::array();
            const auto caps = I.max_exponents();
            const TruncationBox box{caps};
            std::vector<int> wide = caps;
            for (auto& c : wide) {
                c += 1;
            }
            std::vector<VarSet> fast;
            for (const auto& p : ass(I)) {
                fast.push_back(p.vars());
            }
            if (fast != oracle_ass(I.nvars(), I.gens(), TruncationBox{wide})) {
                found.push_back({{"ideal", to_string(I)}, {"check", "ass"}});
            }
            const Multicomplex g = from_ideal(I);
            for (int k : ks) {
                const bool pc = static_cast<bool>(is_pretty_k_clean(I, k, SearchBound{caps}));
                if (pc != oracle_pretty_k_clean(I.nvars(), I.gens(), k, box)) {
                    found.push_back({{"ideal", to_string(I)}, {"check", "pretty-k-clean"}, {"k", k}});
                }
                const bool dec = static_cast<bool>(is_k_decomposable(g, k, SearchBound{caps}));
                if (dec != oracle_decomposable(g.nvars(), g.facets(), k, box)) {
                    found.push_back({{"ideal", to_string(I)}, {"check", "k-decomposable"}, {"k", k}});
                }
            }
            return found;
        };
        std::vector<json> results(ideals.size());
        const std::size_t jobs = static_cast<std::size_t>(std::max(1, opt_.jobs));
        for (std::size_t start = 0; start < ideals.size(); start += jobs) {
            std::vector<std::future<json>> batch;
            for (std::size_t i = start; i < std::min(ideals.size(), start + jobs); ++i) {
                batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, check_one,
                                           std::cref(ideals[i])));
            }
            for (std::size_t i = 0; i < batch.size(); ++i) {
                results[start + i] = batch[i].get();
            }
        }
        json disagreements = json::array();
        for (const auto& r : results) {
            for (const auto& d : r) {
                disagreements.push_back(d);
            }
        }
        doc["result"] = disagreements.empty();
        doc["certificate"] = {{"trials", opt_.trials}, {"ks", ks}, {"disagreements", disagreements}};
        doc["bound_used"] = "per instance: largest generator exponents";
    }

private:
    Options opt_;
};

/// Runs the command line (without the program name). Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cleanness and decomposability of monomial ideals and multicomplexes", "kclean"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--bound", opt.bound, "JSON array of per-variable search caps");
        sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_file = [&opt](CLI::App* sub) { sub->add_option("file", opt.file, "input JSON file")->required(); };

    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const char* name : {"ass", "min", "irreducible", "radical"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " of an ideal (or of I(Γ), I_Δ)");
        add_file(sub);
        add_common(sub);
        subs.emplace_back(name, sub);
    }
    auto* colon_sub = app.add_subcommand("colon", "I : x^u");
    add_file(colon_sub);
    add_common(colon_sub);
    colon_sub->add_option("--u", opt.u, "exponent vector as JSON")->required();

    auto* facets_sub = app.add_subcommand("facets", "facets of Γ or Γ(I)");
    add_file(facets_sub);
    add_common(facets_sub);

    for (const char* name : {"link", "del", "star"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " of a face");
        add_file(sub);
        add_common(sub);
        sub->add_option("--a", opt.a, "face: exponent vector, or vertex list for complexes")->required();
        subs.emplace_back(name, sub);
    }

    auto* polarize_sub = app.add_subcommand("polarize", "polarization of an ideal or multicomplex");
    add_file(polarize_sub);
    add_common(polarize_sub);

    auto* check_sub = app.add_subcommand("check", "decide a property");
    check_sub->add_option("property", opt.property, "k-clean | pretty-k-clean | k-decomposable | shellable")
        ->required();
    add_file(check_sub);
    add_common(check_sub);
    check_sub->add_option("--k", opt.k, "k");

    auto* filtration_sub = app.add_subcommand("filtration", "pretty clean prime filtration");
    add_file(filtration_sub);
    add_common(filtration_sub);
    filtration_sub->add_option("--k", opt.k, "k (default n-1)");
    filtration_sub->add_flag("--text", opt.text, "print the chain as plain lines");

    auto* shelling_sub = app.add_subcommand("shelling", "find or verify a shelling");
    add_file(shelling_sub);
    add_common(shelling_sub);
    shelling_sub->add_flag("--find", opt.find, "search for a shelling");
    shelling_sub->add_flag("--verify", opt.verify, "verify --order");
    shelling_sub->add_option("--order", opt.order, "facet order as a JSON array");

    auto* oracle_sub = app.add_subcommand("oracle", "brute-force cross-checks");
    oracle_sub->add_option("mode", opt.mode, "cross-check")->required();
    add_common(oracle_sub);
    oracle_sub->add_option("--seed", opt.seed, "random seed");
    oracle_sub->add_option("--trials", opt.trials, "number of random ideals");
    oracle_sub->add_option("--n", opt.n, "variables (<= 3)");
    oracle_sub->add_option("--maxexp", opt.maxexp, "largest exponent (<= 3)");
    oracle_sub->add_option("--k", opt.k, "single k (default all k < n)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    json doc;
    try {
        Runner runner(opt);
        CLI::App* chosen = app.get_subcommands().front();
        const std::string name = chosen->get_name();
        if (name == "ass" || name == "min" || name == "irreducible" || name == "radical") {
            doc["result"] = runner.ass_like(name);
        } else if (name == "colon") {
            doc["result"] = runner.colon_cmd();
        } else if (name == "facets") {
            doc["result"] = runner.facets_cmd();
        } else if (name == "link" || name == "del" || name == "star") {
            doc["result"] = runner.local_cmd(name);
        } else if (name == "polarize") {
            doc["result"] = runner.polarize_cmd();
        } else if (name == "check") {
            runner.check_cmd(doc);
        } else if (name == "filtration") {
            runner.filtration_cmd(doc);
            if (opt.text) {
                if (doc["result"].get<bool>()) {
                    for (const auto& line : doc["certificate"]["lines"]) {
                        out << line.get<std::string>() << "\n";
                    }
                } else {
                    out << "not pretty " << (opt.k < 0 ? std::string("clean") : std::to_string(opt.k) + "-clean")
                        << " within bound\n";
                }
                return 0;
            }
        } else if (name == "shelling") {
            runner.shelling_cmd(doc);
        } else {
            runner.oracle_cmd(doc);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (!doc.contains("certificate")) {
        doc["certificate"] = nullptr;
    }
    if (!doc.contains("bound_used")) {
        doc["bound_used"] = nullptr;
    }
    doc["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << doc.dump() << "\n";
    return 0;
}

}  // namespace kclean::cli

#endif
