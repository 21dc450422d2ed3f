// Front end for the exact quantum-logic workbench: evaluate formulas
// under the three semantics, verify and produce witness certificates,
// sweep enumerated formula spaces, and re-derive the library's
// mathematical claims. Run `qlsat --help` for the command list.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlsat/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qlsat::error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

qlsat::Semantics semantics_flag(const std::string& text) {
    try {
        return qlsat::semantics_from_string(text);
    } catch (const qlsat::error& e) {
        throw qlsat::error(std::string("--semantics: ") + e.what());
    }
}

qlsat::FieldTag field_flag(const std::string& text) {
    try {
        return qlsat::field_from_string(text);
    } catch (const qlsat::error& e) {
        throw qlsat::error(std::string("--field: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact satisfiability workbench for quantum logic over Q and Q(i)"};
    app.require_subcommand(1);

    // Shared flag storage; each subcommand registers the flags it uses.
    std::string formula_text, doc_path, out_path, semantics_text, field_text = "rat";
    std::uint64_t seed = qlsat::kDefaultSeed;
    std::uint64_t max_trials = 200;
    long denom_bound = 64;
    int dim = 0;
    bool no_rows = false;

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate a formula under a valuation or certificate document");
    eval->add_option("formula", formula_text, "formula text, e.g. \"p0 & ~(p1 | p2)\"")
        ->required();
    eval->add_option("document", doc_path, "valuation or certificate file")->required();
    eval->add_option("--semantics", semantics_text,
                     "std, com or pba (default: the certificate's tag)");
    eval->add_option("--dim", dim, "ambient dimension; must match the document");

    CLI::App* verify = app.add_subcommand("verify", "re-check every claim in a certificate");
    verify->add_option("certificate", doc_path, "certificate file")->required();

    CLI::App* decide = app.add_subcommand(
        "decide", "decide or search satisfiability of a formula at a fixed dimension");
    decide->add_option("formula", formula_text, "formula text")->required();
    decide->add_option("--semantics", semantics_text, "std, com or pba")->required();
    decide->add_option("--dim", dim, "ambient dimension (default 2)");
    decide->add_option("--seed", seed, "search seed (default 1729)");
    decide->add_option("--max-trials", max_trials, "search trial budget (default 200)");
    decide->add_option("--denom-bound", denom_bound,
                       "largest denominator drawn for random rationals (default 64)");
    decide->add_option("--field", field_text, "rat or gauss (default rat)");
    decide->add_option("--out", out_path, "write a certificate here when a witness is found");

    CLI::App* explore = app.add_subcommand(
        "explore", "classify every formula within enumeration bounds under all three semantics");
    int max_atoms = 2, max_connectives = 3;
    std::uint64_t offset = 0, limit = 0;
    bool sorted_children = false;
    explore->add_option("--atoms", max_atoms, "distinct atoms allowed (default 2)");
    explore->add_option("--connectives", max_connectives, "connective budget (default 3)");
    explore->add_option("--offset", offset, "skip this many enumeration indices");
    explore->add_option("--limit", limit, "classify at most this many formulas (0 = all)");
    explore->add_flag("--sorted-children", sorted_children,
                      "skip trees whose binary children are out of print order");
    explore->add_option("--dim", dim, "ambient dimension (default 2)");
    explore->add_option("--seed", seed, "search seed (default 1729)");
    explore->add_option("--max-trials", max_trials, "per-formula search budget (default 200)");
    explore->add_option("--denom-bound", denom_bound,
                        "largest denominator drawn for random rationals (default 64)");
    explore->add_option("--field", field_text, "rat or gauss (default rat)");
    explore->add_flag("--no-rows", no_rows, "print only the closing summary");

    CLI::App* reproduce = app.add_subcommand(
        "reproduce", "re-derive the library's mathematical claims in exact arithmetic");
    std::vector<int> dims = {2, 3, 4};
    int samples = 100;
    reproduce->add_option("--dims", dims, "dimensions to run, e.g. --dims 2,3,4")
        ->delimiter(',');
    reproduce->add_option("--seed", seed, "sampling seed (default 1729)");
    reproduce->add_option("--samples", samples, "sampled valuations per battery (default 100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    using namespace qlsat;
    return cli::guarded(std::cerr, [&]() -> int {
        if (eval->parsed()) {
            cli::EvalArgs args;
            args.formula_text = formula_text;
            args.doc_text = read_file(doc_path);
            if (!semantics_text.empty()) args.semantics = semantics_flag(semantics_text);
            if (dim > 0) args.dim = dim;
            return cli::cmd_eval(args, std::cout);
        }
        if (verify->parsed()) {
            cli::VerifyArgs args;
            args.doc_text = read_file(doc_path);
            return cli::cmd_verify(args, std::cout);
        }
        if (decide->parsed()) {
            cli::DecideArgs args;
            args.formula_text = formula_text;
            args.semantics = semantics_flag(semantics_text);
            args.field = field_flag(field_text);
            args.budget.seed = seed;
            args.budget.max_trials = max_trials;
            args.budget.denom_bound = denom_bound;
            args.budget.dimension = dim > 0 ? dim : 2;
            if (!out_path.empty()) args.out_path = out_path;
            return cli::cmd_decide(args, std::cout);
        }
        if (explore->parsed()) {
            cli::ExploreArgs args;
            args.bounds.max_atoms = max_atoms;
            args.bounds.max_connectives = max_connectives;
            args.bounds.offset = offset;
            args.bounds.limit = limit;
            args.bounds.mode =
                sorted_children ? EnumMode::SortedChildren : EnumMode::RawTrees;
            args.dim = dim > 0 ? dim : 2;
            args.field = field_flag(field_text);
            args.budget.seed = seed;
            args.budget.max_trials = max_trials;
            args.budget.denom_bound = denom_bound;
            args.rows = !no_rows;
            return cli::cmd_explore(args, std::cout);
        }
        cli::ReproduceArgs args;
        args.options.dims = dims;
        args.options.seed = seed;
        args.options.samples = samples;
        return cli::cmd_reproduce(args, std::cout);
    });
}
