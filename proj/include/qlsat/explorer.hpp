#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qlsat/search.hpp"

namespace qlsat {

/// Verdict triple for one formula under one dimension and budget, with
/// the witnesses that back the SAT entries. Rows always satisfy the
/// satisfiability chain com => pba => std; classify() aborts otherwise.
template <class S = Rational>
struct ClassificationRow {
    Formula formula = Formula::atom(0);
    SearchVerdict com = SearchVerdict::Unknown;
    SearchVerdict pba = SearchVerdict::Unknown;
    SearchVerdict std_lattice = SearchVerdict::Unknown;
    std::string pba_method = "none";
    std::string std_method = "none";
    int dimension = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_trials = 0;
    std::optional<ProjValuation<S>> pba_witness;
    std::optional<StdValuation<S>> std_witness;

    /// A verified partial-Boolean witness for a formula with no
    /// commuting valuation would answer the open comparison question.
    bool open_problem_candidate() const {
        return com == SearchVerdict::UnsatProved && pba == SearchVerdict::SatWithWitness;
    }
};

/// Classify one formula under all three semantics. SAT entries carry
/// verified witnesses. The chain com => pba => std is enforced
/// constructively: a commuting witness lifts to the other two semantics,
/// and a partial-Boolean witness lifts to the subspace semantics; a lift
/// that fails exact verification is an internal soundness bug.
template <class S = Rational>
ClassificationRow<S> classify(const Formula& f, int d, SearchBudget budget) {
    budget.dimension = d;
    budget.validate();
    ClassificationRow<S> row;
    row.formula = f;
    row.dimension = d;
    row.seed = budget.seed;
    row.max_trials = budget.max_trials;

    SearchReport<ProjValuation<S>> com = decide_com_sat<S>(f, d);
    row.com = com.verdict;

    SearchReport<ProjValuation<S>> pba = search_pba<S>(f, budget);
    if (com.verdict == SearchVerdict::SatWithWitness &&
        pba.verdict != SearchVerdict::SatWithWitness) {
        // The commuting witness is one global family, so the partial
        // evaluation of it is total; reuse it rather than give up.
        if (!sat_verdict(eval_pba(f, *com.witness)))
            throw internal_soundness_error(
                "commuting witness does not survive partial-Boolean evaluation");
        pba.verdict = SearchVerdict::SatWithWitness;
        pba.witness = com.witness;
        pba.method = "com-lift";
    }
    row.pba = pba.verdict;
    row.pba_method = pba.method;
    row.pba_witness = pba.witness;

    SearchReport<StdValuation<S>> std_r = search_std<S>(f, budget);
    if (pba.verdict == SearchVerdict::SatWithWitness &&
        std_r.verdict != SearchVerdict::SatWithWitness) {
        StdValuation<S> lifted = pba_valuation_to_std(*pba.witness);
        if (!sat_verdict(eval_std(f, lifted, d)))
            throw internal_soundness_error(
                "partial-Boolean witness does not lift to a subspace witness");
        std_r.verdict = SearchVerdict::SatWithWitness;
        std_r.witness = std::move(lifted);
        std_r.method = "pba-lift";
    }
    row.std_lattice = std_r.verdict;
    row.std_method = std_r.method;
    row.std_witness = std_r.witness;

    if (row.com == SearchVerdict::SatWithWitness && row.pba != SearchVerdict::SatWithWitness)
        throw internal_soundness_error("classification breaks the com => pba chain");
    if (row.pba == SearchVerdict::SatWithWitness &&
        row.std_lattice != SearchVerdict::SatWithWitness)
        throw internal_soundness_error("classification breaks the pba => std chain");
    return row;
}

namespace detail {

inline void json_escape_into(std::string& out, const std::string& s) {
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
        } else {
            out += c;
        }
    }
}

}  // namespace detail

/// One row as a JSON line with fixed key order, so identical runs are
/// byte-identical.
template <class S>
std::string row_to_json(const ClassificationRow<S>& row) {
    std::string out = "{\"formula\":\"";
    detail::json_escape_into(out, print(row.formula));
    out += "\",\"com\":\"";
    out += to_string(row.com);
    out += "\",\"pba\":\"";
    out += to_string(row.pba);
    out += "\",\"pba_method\":\"";
    out += row.pba_method;
    out += "\",\"std\":\"";
    out += to_string(row.std_lattice);
    out += "\",\"std_method\":\"";
    out += row.std_method;
    out += "\",\"dim\":";
    out += std::to_string(row.dimension);
    out += ",\"seed\":";
    out += std::to_string(row.seed);
    out += ",\"max_trials\":";
    out += std::to_string(row.max_trials);
    out += ",\"candidate\":";
    out += row.open_problem_candidate() ? "true" : "false";
    out += "}";
    return out;
}

struct HuntBounds {
    int max_atoms = 2;
    int max_connectives = 3;
    EnumMode mode = EnumMode::RawTrees;
    /// Window into the enumeration order, for spot checks inside spaces
    /// too large to sweep. offset counts raw indices; limit = 0 means
    /// "to the end".
    std::uint64_t offset = 0;
    std::uint64_t limit = 0;
};

template <class S = Rational>
struct HuntSummary {
    std::map<std::tuple<SearchVerdict, SearchVerdict, SearchVerdict>, std::uint64_t> counts;
    std::vector<ClassificationRow<S>> candidates;
    std::uint64_t formulas_classified = 0;
    HuntBounds bounds;
    int dimension = 0;
    std::uint64_t seed = 0;
};

/// Sweep the bounded formula space hunting for a formula that separates
/// the partial-Boolean semantics from the commuting one: commuting-UNSAT
/// yet with a verified partial-Boolean witness. Reports every row to the
/// sink in enumeration order and tallies verdict triples. Any candidate
/// in the summary is a research-grade finding; nobody has one.
template <class S = Rational>
HuntSummary<S> hunt_open_problem(const HuntBounds& bounds, int d, const SearchBudget& budget,
                                 const std::function<void(const ClassificationRow<S>&)>& sink) {
    HuntSummary<S> summary;
    summary.bounds = bounds;
    summary.dimension = d;
    summary.seed = budget.seed;

    FormulaEnumerator e(bounds.max_atoms, bounds.max_connectives, bounds.mode);
    e.seek(bounds.offset);
    Formula f = Formula::atom(0);
    while (e.next(f)) {
        std::uint64_t at = e.cursor() - 1;
        if (bounds.limit != 0 && at >= bounds.offset + bounds.limit) break;
        ClassificationRow<S> row = classify<S>(f, d, budget);
        summary.counts[{row.com, row.pba, row.std_lattice}] += 1;
        summary.formulas_classified += 1;
        if (row.open_problem_candidate()) summary.candidates.push_back(row);
        if (sink) sink(row);
    }
    return summary;
}

/// Human-readable closing block for a hunt, deterministic given the
/// inputs.
template <class S>
std::string summary_to_text(const HuntSummary<S>& summary) {
    std::string out;
    out += "hunt summary: atoms <= " + std::to_string(summary.bounds.max_atoms) +
           ", connectives <= " + std::to_string(summary.bounds.max_connectives) +
           ", dim = " + std::to_string(summary.dimension) +
           ", seed = " + std::to_string(summary.seed) + "\n";
    out += "formulas classified: " + std::to_string(summary.formulas_classified) + "\n";
    for (const auto& [triple, count] : summary.counts) {
        out += "  com=" + std::string(to_string(std::get<0>(triple))) +
               " pba=" + to_string(std::get<1>(triple)) +
               " std=" + to_string(std::get<2>(triple)) + "  count=" + std::to_string(count) +
               "\n";
    }
    if (summary.candidates.empty()) {
        out += "open-problem candidates: none. Every commuting-UNSAT formula in range stayed "
               "UNKNOWN under partial-Boolean search; the comparison question stays open.\n";
    } else {
        out += "OPEN-PROBLEM CANDIDATES: " + std::to_string(summary.candidates.size()) +
               ". A verified partial-Boolean witness exists for a commuting-UNSAT formula. "
               "This would be a research-grade finding; re-verify the certificate and the "
               "commuting decision independently before believing it.\n";
        for (const auto& row : summary.candidates) out += "  " + print(row.formula) + "\n";
    }
    return out;
}

}  // namespace qlsat
