// Command-line front end: compute, count, verify, render, expand.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skylr/enumgen.hpp"
#include "skylr/error.hpp"
#include "skylr/io.hpp"
#include "skylr/lrrules.hpp"
#include "skylr/poly.hpp"

using namespace skylr;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
    bool json = false;
    std::size_t threads = 0;

    std::string kind;
    std::string shape;
    std::size_t n = 0;

    std::string outer, inner, content;
    bool list = false;

    std::string lambda;

    SweepBounds bounds;
    std::string form = "derived";
    bool verbose = false;
};

std::size_t threads_of(const Options& o) { return o.threads ? o.threads : default_threads(); }

void print_poly(const Options& o, const Polynomial& p) {
    if (o.json)
        std::cout << to_json(p).dump() << '\n';
    else
        std::cout << to_string(p) << '\n';
}

int cmd_compute(const Options& o) {
    if (o.n == 0) throw Error(ErrorCode::Parse, "--n must be positive");
    if (o.kind == "schur") print_poly(o, schur_poly(parse_partition(o.shape), o.n));
    else if (o.kind == "atom") print_poly(o, atom_poly(parse_weak(o.shape), o.n));
    else if (o.kind == "char") print_poly(o, char_poly(parse_weak(o.shape), o.n));
    else if (o.kind == "qs") print_poly(o, qs_poly(parse_composition(o.shape), o.n));
    else if (o.kind == "qs-ssc") print_poly(o, qs_poly_ssc(parse_composition(o.shape), o.n));
    return 0;
}

void print_count(const Options& o, std::uint64_t count, const Json& items) {
    if (o.list) {
        std::cout << items.dump(o.json ? -1 : 2) << '\n';
    } else if (o.json) {
        std::cout << Json{{"kind", o.kind}, {"count", count}}.dump() << '\n';
    } else {
        std::cout << count << '\n';
    }
}

int cmd_count(const Options& o) {
    Json items = Json::array();
    if (o.kind != "ct" && o.content.empty()) throw Error(ErrorCode::Parse, "count " + o.kind + " needs --content");
    if (o.kind == "lrs" || o.kind == "lrk") {
        const WeakComposition delta = parse_weak(o.outer);
        const WeakComposition gamma = o.inner.empty() ? WeakComposition(std::vector<int>(delta.length(), 0)) : parse_weak(o.inner);
        const WeakComposition c = parse_weak(o.content);
        SkewShape(delta, gamma);
        if (o.list) {
            const auto all = o.kind == "lrs" ? enum_lrs(delta, gamma, c) : enum_lrk(delta, gamma, c);
            for (const Filling& f : all) items.push_back(to_json(f));
            print_count(o, all.size(), items);
        } else {
            print_count(o, o.kind == "lrs" ? count_lrs(delta, gamma, c) : count_lrk(delta, gamma, c), items);
        }
    } else if (o.kind == "lrc") {
        const Composition beta = parse_composition(o.outer), alpha = parse_composition(o.inner);
        const WeakComposition c = parse_weak(o.content);
        if (o.list) {
            const auto reps = lrc_representatives(beta, alpha, c, o.n);
            for (const Filling& f : reps) items.push_back(to_json(f));
            print_count(o, reps.size(), items);
        } else {
            print_count(o, count_lrc(beta, alpha, c, o.n), items);
        }
    } else if (o.kind == "ct") {
        const Partition lam = parse_partition(o.outer);
        const Partition mu = o.inner.empty() ? Partition{} : parse_partition(o.inner);
        std::optional<WeakComposition> c;
        if (!o.content.empty()) c = parse_weak(o.content);
        const int n = o.n ? static_cast<int>(o.n) : c ? static_cast<int>(c->length()) : 0;
        if (n <= 0) throw Error(ErrorCode::Parse, "count ct needs --n or --content");
        std::uint64_t count = 0;
        for_each_ct(lam, mu, n, c, [&](const ContreTableau& t) {
            ++count;
            if (o.list) items.push_back(to_json(t));
        });
        print_count(o, count, items);
    }
    return 0;
}

int cmd_verify(const Options& o) {
    const SweepBounds& b = o.bounds;
    if (b.max_n < 1 || b.max_size < 0 || b.max_lambda < 0) throw Error(ErrorCode::Parse, "sweep bounds must be positive");
    if (b.max_n > 3 || b.max_size > 3 || b.max_lambda > 2)
        std::cerr << "warning: bounds beyond --max-n 3 --max-size 3 --max-lambda 2 may take a long time\n";
    const IdentityForm form = o.form == "literal" ? IdentityForm::Literal : IdentityForm::Derived;
    const std::size_t threads = threads_of(o);

    std::size_t passed = 0, failed = 0;
    Json out = Json::array();
    auto run = [&](Rule rule) {
        for (const ExpansionReport& r : sweep(rule, b, threads)) {
            r.pass() ? ++passed : ++failed;
            if (o.json)
                out.push_back(to_json(r));
            else if (o.verbose || !r.pass())
                std::cout << (r.pass() ? "PASS " : "FAIL ") << r.label()
                          << (r.first_discrepancy ? "  (" + *r.first_discrepancy + ")" : "") << '\n';
        }
    };
    if (o.kind == "atoms" || o.kind == "all") run(Rule::Atom);
    if (o.kind == "chars" || o.kind == "all") run(Rule::Character);
    if (o.kind == "qs" || o.kind == "all") run(Rule::QuasiSchur);
    if (o.kind == "consistency" || o.kind == "all") {
        for (const ConsistencyCase& c : sweep_consistency(b, form, threads)) {
            const bool ok = c.sides.holds();
            ok ? ++passed : ++failed;
            const std::string label = "consistency delta=" + to_string(c.delta) + " gamma=" + to_string(c.gamma) +
                                      " lambda=" + to_string(c.lambda);
            if (o.json)
                out.push_back({{"rule", "consistency"},
                               {"form", o.form},
                               {"delta", c.delta.vec()},
                               {"gamma", c.gamma.vec()},
                               {"lambda", c.lambda.vec()},
                               {"character_side", c.sides.character_side.str()},
                               {"atom_side", c.sides.atom_side.str()},
                               {"pass", ok}});
            else if (o.verbose || !ok)
                std::cout << (ok ? "PASS " : "FAIL ") << label << "  (" << c.sides.character_side << " vs "
                          << c.sides.atom_side << ")\n";
        }
    }
    if (o.json)
        std::cout << Json{{"suite", o.kind}, {"passed", passed}, {"failed", failed}, {"instances", out}}.dump() << '\n';
    else
        std::cout << o.kind << ": " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : kVerifyFailed;
}

int cmd_render(const Options&) {
    const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
    auto one = [](const Json& item) {
        if (item.contains("basement")) return render(filling_from_json(item));
        return render(ct_from_json(item));
    };
    if (j.is_array()) {
        bool first = true;
        for (const Json& item : j) {
            if (!first) std::cout << '\n';
            first = false;
            std::cout << one(item);
        }
    } else {
        std::cout << one(j);
    }
    return 0;
}

int cmd_expand(const Options& o) {
    if (o.n == 0) throw Error(ErrorCode::Parse, "--n must be positive");
    const Partition lam = parse_partition(o.lambda);
    ExpansionReport r;
    if (o.kind == "atom") r = verify_atom_theorem(parse_weak(o.shape), lam, o.n);
    else if (o.kind == "char") r = verify_char_theorem(parse_weak(o.shape), lam, o.n);
    else r = verify_qs_theorem(parse_composition(o.shape), lam, o.n);
    if (o.json) {
        std::cout << to_json(r).dump() << '\n';
    } else {
        for (const auto& [shape, c] : r.counted) std::cout << to_string(std::span<const int>(shape)) << '\t' << c << '\n';
        std::cout << (r.pass() ? "agrees with product expansion" : "DISAGREES with product expansion") << '\n';
    }
    return r.pass() ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Skyline fillings, Demazure atoms and characters, quasisymmetric Schur functions, LR rules"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--threads", o.threads, "Worker threads (SKYLINE_THREADS caps the default)");

    auto* compute = app.add_subcommand("compute", "Print a generating polynomial");
    compute->add_option("kind", o.kind)->required()->check(CLI::IsMember({"schur", "atom", "char", "qs", "qs-ssc"}));
    compute->add_option("--shape", o.shape, "e.g. 2,0,1")->required();
    compute->add_option("--n", o.n, "Number of variables")->required();

    auto* count = app.add_subcommand("count", "Count LR tableaux or contretableaux");
    count->add_option("kind", o.kind)->required()->check(CLI::IsMember({"lrs", "lrk", "lrc", "ct"}));
    count->add_option("--outer", o.outer)->required();
    count->add_option("--inner", o.inner);
    count->add_option("--content", o.content);
    count->add_option("--n", o.n, "Rows for lrc, entry bound for ct");
    count->add_flag("--list", o.list, "Print the tableaux as JSON");

    auto* verify = app.add_subcommand("verify", "Sweep the LR rules against polynomial products");
    verify->add_option("suite", o.kind)->required()->check(CLI::IsMember({"atoms", "chars", "qs", "consistency", "all"}));
    verify->add_option("--max-n", o.bounds.max_n);
    verify->add_option("--max-size", o.bounds.max_size);
    verify->add_option("--max-lambda", o.bounds.max_lambda);
    verify->add_option("--form", o.form, "Indexing of the consistency identity")
        ->check(CLI::IsMember({"derived", "literal"}));
    verify->add_flag("--verbose", o.verbose, "List passing instances too");

    auto* rend = app.add_subcommand("render", "Draw a filling or contretableau given as JSON on stdin");

    auto* expand = app.add_subcommand("expand", "Expand shape x s_lambda and tabulate coefficients");
    expand->add_option("kind", o.kind)->required()->check(CLI::IsMember({"atom", "char", "qs"}));
    expand->add_option("--shape", o.shape)->required();
    expand->add_option("--lambda", o.lambda)->required();
    expand->add_option("--n", o.n)->required();

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
        if (compute->parsed()) return cmd_compute(o);
        if (count->parsed()) return cmd_count(o);
        if (verify->parsed()) return cmd_verify(o);
        if (rend->parsed()) return cmd_render(o);
        if (expand->parsed()) return cmd_expand(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
