#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qlsat/certificate.hpp"
#include "qlsat/explorer.hpp"
#include "qlsat/reproduce.hpp"

namespace qlsat::cli {

// Command bodies for the front end, kept out of main() so the whole
// surface is unit-testable. Each takes document text plus flags and
// writes its report to a stream; the return value is the process exit
// code for the "ran to completion" cases. Errors leave by exception
// and are mapped to the exit-code contract by guarded():
//
//   0  ran; the verdict (whatever it is) is in the output
//   1  a verification or reproduction check failed
//   2  malformed input: formula text, document, flags, preconditions
//   3  dimension or field mismatch
//   4  the valuation lacks an atom the formula uses
//  70  the library contradicted itself; always a bug worth reporting

inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const internal_soundness_error& e) {
        err << "internal soundness violation (please report): " << e.what() << "\n";
        return 70;
    } catch (const parse_error& e) {
        err << "parse error at offset " << e.offset << ": " << e.what() << "\n";
        return 2;
    } catch (const certificate_error& e) {
        err << "document error: " << e.what() << "\n";
        return 2;
    } catch (const projector_invariant_error& e) {
        err << "document error: " << e.what() << "\n";
        return 2;
    } catch (const not_admissible_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const missing_atom_error& e) {
        err << "missing atom: " << e.what() << "\n";
        return 4;
    } catch (const dimension_mismatch& e) {
        err << "dimension mismatch: " << e.what() << "\n";
        return 3;
    } catch (const field_mismatch& e) {
        err << "field mismatch: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace detail {

template <class F>
auto dispatch_field(FieldTag tag, F&& f) {
    return tag == FieldTag::Rat ? f.template operator()<Rational>()
                                : f.template operator()<Gaussian>();
}

inline const char* eval_verdict_text(bool nonzero) {
    // A single-valuation evaluation witnesses satisfiability when the
    // value is nonzero; a zero value says nothing about other
    // valuations, and the wording keeps that honest.
    return nonzero ? "SAT" : "UNSAT-under-this-valuation";
}

}  // namespace detail

// ---- eval ----------------------------------------------------------------

struct EvalArgs {
    std::string formula_text;
    std::string doc_text;  // certificate or bare valuation document
    std::optional<Semantics> semantics;  // default: the certificate's tag
    std::optional<int> dim;              // default: the document's dim
};

template <class S>
int eval_typed(const EvalArgs& args, std::ostream& out) {
    Formula f = parse(args.formula_text);

    int doc_dim = 0;
    BlockEncoding encoding = BlockEncoding::Basis;
    std::map<int, Matrix<S>> blocks;
    std::optional<Semantics> doc_semantics;

    if (is_certificate_document(args.doc_text)) {
        Certificate<S> cert = parse_certificate<S>(args.doc_text);
        doc_dim = cert.dimension;
        doc_semantics = cert.semantics;
        encoding = cert.semantics == Semantics::Std ? BlockEncoding::Basis
                                                    : BlockEncoding::ProjectorMatrix;
        blocks = std::move(cert.atom_blocks);
    } else {
        ValuationDoc<S> doc = parse_valuation<S>(args.doc_text);
        doc_dim = doc.dimension;
        encoding = doc.encoding;
        blocks = std::move(doc.atom_blocks);
    }

    if (args.dim && *args.dim != doc_dim)
        throw dimension_mismatch("--dim " + std::to_string(*args.dim) +
                                 " contradicts the document's dim " + std::to_string(doc_dim));
    int d = doc_dim;

    if (!args.semantics && !doc_semantics)
        throw error("a bare valuation document needs --semantics");
    Semantics sem = args.semantics ? *args.semantics : *doc_semantics;

    out << "formula " << print(f) << "\n";
    out << "semantics " << to_string(sem) << "\n";
    out << "field " << to_string(field_traits<S>::tag) << "\n";
    out << "dim " << d << "\n";

    std::string block_text;
    if (sem == Semantics::Std) {
        Subspace<S> value = eval_std(f, as_std_valuation(d, encoding, blocks), d);
        qlsat::detail::append_matrix_block(block_text, "value", value.basis());
        out << block_text;
        out << "verdict " << detail::eval_verdict_text(sat_verdict(value)) << "\n";
        return 0;
    }

    ProjValuation<S> v = as_proj_valuation(d, encoding, blocks);
    if (sem == Semantics::Com) {
        Projector<S> value = eval_com(f, v);
        qlsat::detail::append_matrix_block(block_text, "value", value.matrix());
        out << block_text;
        out << "verdict " << detail::eval_verdict_text(sat_verdict(value)) << "\n";
        return 0;
    }

    PbaOutcome<S> outcome = eval_pba(f, v);
    if (!outcome.is_defined()) {
        out << "outcome UNDEFINED\n";
        out << "blame " << path_to_text(outcome.blame()) << "\n";
        return 0;
    }
    out << "outcome DEFINED\n";
    qlsat::detail::append_matrix_block(block_text, "value", outcome.value().matrix());
    out << block_text;
    out << "verdict " << detail::eval_verdict_text(sat_verdict(outcome)) << "\n";
    return 0;
}

inline int cmd_eval(const EvalArgs& args, std::ostream& out) {
    return detail::dispatch_field(certificate_field(args.doc_text),
                                  [&]<class S>() { return eval_typed<S>(args, out); });
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string doc_text;
};

template <class S>
int verify_typed(const VerifyArgs& args, std::ostream& out) {
    Certificate<S> cert = parse_certificate<S>(args.doc_text);
    out << "formula " << print(cert.formula) << "\n";
    out << "semantics " << to_string(cert.semantics) << "\n";
    out << "field " << to_string(field_traits<S>::tag) << "\n";
    out << "dim " << cert.dimension << "\n";
    out << "claimed verdict " << to_string(cert.verdict) << "\n";
    VerifyReport report = verify_certificate(cert);
    if (report.pass) {
        out << "verification PASS\n";
        return 0;
    }
    out << "verification FAIL: " << report.detail << "\n";
    return 1;
}

inline int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    return detail::dispatch_field(certificate_field(args.doc_text),
                                  [&]<class S>() { return verify_typed<S>(args, out); });
}

// ---- decide ---------------------------------------------------------------

struct DecideArgs {
    std::string formula_text;
    Semantics semantics = Semantics::Com;
    FieldTag field = FieldTag::Rat;
    SearchBudget budget;                  // carries dim, seed, trials, denominators
    std::optional<std::string> out_path;  // certificate written here on SAT
};

template <class S>
int decide_typed(const DecideArgs& args, std::ostream& out) {
    Formula f = parse(args.formula_text);
    args.budget.validate();

    out << "formula " << print(f) << "\n";
    out << "semantics " << to_string(args.semantics) << "\n";
    out << "field " << to_string(field_traits<S>::tag) << "\n";
    out << "dim " << args.budget.dimension << "\n";

    std::optional<Certificate<S>> certificate;
    auto finish = [&](const auto& report) {
        out << "verdict " << to_string(report.verdict) << "\n";
        out << "method " << report.method << "\n";
        out << "trials " << report.trials_used << "\n";
        out << "seed " << report.seed << "\n";
    };

    if (args.semantics == Semantics::Std) {
        SearchReport<StdValuation<S>> report = search_std<S>(f, args.budget);
        finish(report);
        if (report.verdict == SearchVerdict::SatWithWitness)
            certificate = make_std_certificate(f, args.budget.dimension, *report.witness);
    } else if (args.semantics == Semantics::Com) {
        SearchReport<ProjValuation<S>> report = decide_com_sat<S>(f, args.budget.dimension);
        finish(report);
        if (report.verdict == SearchVerdict::SatWithWitness)
            certificate = make_com_certificate(f, args.budget.dimension, *report.witness);
    } else {
        SearchReport<ProjValuation<S>> report = search_pba<S>(f, args.budget);
        finish(report);
        if (report.verdict == SearchVerdict::SatWithWitness)
            certificate = make_pba_certificate(f, args.budget.dimension, *report.witness);
    }

    if (args.out_path) {
        if (certificate) {
            std::ofstream file(*args.out_path, std::ios::binary);
            if (!file) throw error("cannot open " + *args.out_path + " for writing");
            file << serialize_certificate(*certificate);
            out << "certificate written: " << *args.out_path << "\n";
        } else {
            out << "no certificate written (no witness)\n";
        }
    }
    return 0;
}

inline int cmd_decide(const DecideArgs& args, std::ostream& out) {
    return detail::dispatch_field(args.field,
                                  [&]<class S>() { return decide_typed<S>(args, out); });
}

// ---- explore ----------------------------------------------------------------

struct ExploreArgs {
    HuntBounds bounds;
    int dim = 2;
    FieldTag field = FieldTag::Rat;
    SearchBudget budget;
    bool rows = true;  // stream one JSON row per formula before the summary
};

template <class S>
int explore_typed(const ExploreArgs& args, std::ostream& out) {
    args.budget.validate();
    HuntSummary<S> summary = hunt_open_problem<S>(
        args.bounds, args.dim, args.budget,
        [&](const ClassificationRow<S>& row) {
            if (args.rows) out << row_to_json(row) << "\n";
        });
    out << summary_to_text(summary);
    return 0;
}

inline int cmd_explore(const ExploreArgs& args, std::ostream& out) {
    return detail::dispatch_field(args.field,
                                  [&]<class S>() { return explore_typed<S>(args, out); });
}

// ---- reproduce ---------------------------------------------------------------

struct ReproduceArgs {
    ReproduceOptions options;
};

inline int cmd_reproduce(const ReproduceArgs& args, std::ostream& out) {
    ReproduceReport report = run_reproduction(
        args.options, [&](const TheoremCheck& c) { out << check_to_text(c) << "\n"; });
    int failed = 0;
    for (const TheoremCheck& c : report.checks)
        failed += (c.status == TheoremCheck::Status::Fail);
    out << (failed == 0 ? "all checks passed"
                        : std::to_string(failed) + " check(s) FAILED")
        << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace qlsat::cli
