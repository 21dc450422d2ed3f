#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qlsat/enumerate.hpp"
#include "qlsat/explorer.hpp"
#include "qlsat/random.hpp"
#include "qlsat/search.hpp"
#include "qlsat/semantics.hpp"

namespace qlsat {

// The reproduction battery re-derives, in exact arithmetic, every
// mathematical claim this library is built around: the range behaviour
// of commuting projectors, the agreement of the global and local
// projector semantics on admissible valuations, the lift from local
// values to subspace ranges, the satisfiability chain, and the results
// about the separator formula that split the subspace semantics from
// both projector semantics. Each check recomputes its claim from
// scratch and pins exact expected objects, so a corrupted evaluation
// kernel fails loudly here.

struct TheoremCheck {
    enum class Status { Pass, Fail, Skipped };
    std::string name;
    Status status = Status::Fail;
    std::string detail;  // counts and dimensions, or the first counterexample
};

inline const char* to_string(TheoremCheck::Status s) {
    switch (s) {
        case TheoremCheck::Status::Pass: return "PASS";
        case TheoremCheck::Status::Fail: return "FAIL";
        default: return "SKIPPED";
    }
}

struct ReproduceReport {
    std::vector<TheoremCheck> checks;

    bool all_passed() const {
        for (const TheoremCheck& c : checks)
            if (c.status == TheoremCheck::Status::Fail) return false;
        return true;
    }
};

inline std::string check_to_text(const TheoremCheck& c) {
    std::string line = to_string(c.status);
    line.resize(8, ' ');
    line += c.name;
    if (!c.detail.empty()) line += " (" + c.detail + ")";
    return line;
}

inline std::string report_to_text(const ReproduceReport& r) {
    std::string out;
    int failed = 0;
    for (const TheoremCheck& c : r.checks) {
        out += check_to_text(c) + "\n";
        if (c.status == TheoremCheck::Status::Fail) ++failed;
    }
    out += failed == 0 ? "all checks passed\n"
                       : std::to_string(failed) + " check(s) FAILED\n";
    return out;
}

struct ReproduceOptions {
    std::vector<int> dims = {2, 3, 4};
    std::uint64_t seed = kDefaultSeed;
    int samples = 100;  // sampled valuations per dimension inside each battery

    void validate() const {
        if (dims.empty()) throw error("reproduction needs at least one dimension");
        for (int d : dims)
            if (d < 1) throw error("reproduction dimensions must be at least 1");
        if (samples < 1) throw error("reproduction needs at least one sample");
    }
};

// The three-atom separator: p0 and (p1 or p2) holds while the
// distributed form (p0 and p1) or (p0 and p2) is denied. Distributivity
// makes the two sides equal inside any commuting family, so only the
// subspace semantics can satisfy it.
inline Formula separator_formula() {
    return parse("(p0 & (p1 | p2)) & ~((p0 & p1) | (p0 & p2))");
}

// The explicit subspace witness: one line tilted across the two
// coordinate lines it is compared against.
inline StdValuation<Rational> separator_std_witness(int d) {
    if (d < 2) throw dimension_mismatch("separator witness needs dimension at least 2");
    auto unit_sum = Matrix<Rational>(d, 1), e1 = Matrix<Rational>(d, 1), e2 = Matrix<Rational>(d, 1);
    unit_sum.at(0, 0) = 1;
    unit_sum.at(1, 0) = 1;
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    return {{0, Subspace<Rational>::span_columns(unit_sum)},
            {1, Subspace<Rational>::span_columns(e1)},
            {2, Subspace<Rational>::span_columns(e2)}};
}

namespace detail {

inline std::string dim_list_text(const std::vector<int>& dims) {
    std::string out = "d=";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(dims[i]);
    }
    return out;
}

// Every subformula value under both projector semantics, compared
// exactly. Returns false on the first disagreement or undefined node.
inline bool nodewise_proj_agreement(const Formula& f, const ProjValuation<Rational>& v) {
    PbaOutcome<Rational> local = eval_pba(f, v);
    if (!local.is_defined()) return false;
    if (!(local.value().matrix() == eval_com_unchecked(f, v).matrix())) return false;
    switch (f.kind()) {
        case Formula::Kind::Atom: return true;
        case Formula::Kind::Neg: return nodewise_proj_agreement(f.child(), v);
        default:
            return nodewise_proj_agreement(f.left(), v) &&
                   nodewise_proj_agreement(f.right(), v);
    }
}

// Every subformula range under the lifted subspace valuation must equal
// the range of the local value, wherever the local value is defined.
// Children are visited even below an undefined node; they may still
// carry defined values of their own.
inline bool nodewise_range_agreement(const Formula& f, const ProjValuation<Rational>& v,
                                     const StdValuation<Rational>& u, int d) {
    PbaOutcome<Rational> local = eval_pba(f, v);
    if (local.is_defined() && !(range_of(local.value()) == eval_std(f, u, d))) return false;
    switch (f.kind()) {
        case Formula::Kind::Atom: return true;
        case Formula::Kind::Neg: return nodewise_range_agreement(f.child(), v, u, d);
        default:
            return nodewise_range_agreement(f.left(), v, u, d) &&
                   nodewise_range_agreement(f.right(), v, u, d);
    }
}

// A mixed bag of projector valuations: commuting families, block
// families, and fully independent draws, in equal parts.
inline ProjValuation<Rational> sampled_valuation(RandomSource& rs, int d,
                                                 const std::vector<int>& atom_list, int flavor) {
    if (flavor == 0) return random_commuting_valuation<Rational>(rs, d, atom_list);
    if (flavor == 1)
        return random_block_valuation<Rational>(rs, d, atom_list, rs.range(1, 3));
    ProjValuation<Rational> v;
    for (int a : atom_list) v.emplace(a, random_projector<Rational>(rs, d));
    return v;
}

}  // namespace detail

// ---- individual batteries ----------------------------------------------
// Each returns a finished TheoremCheck; run_reproduction stitches them
// together. They take their own substream index so adding samples to
// one battery never shifts another battery's draws.

inline TheoremCheck check_range_identities(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "commuting projectors: ranges of product, complement and join";
    std::uint64_t identities = 0;
    for (std::size_t k = 0; k < opt.dims.size(); ++k) {
        int d = opt.dims[k];
        RandomSource rs = RandomSource::substream(opt.seed, 100 + k);
        for (int t = 0; t < opt.samples; ++t) {
            ProjValuation<Rational> v = random_commuting_valuation<Rational>(rs, d, {0, 1});
            const Projector<Rational>&p = v.at(0), &q = v.at(1);
            Projector<Rational> product =
                Projector<Rational>::from_matrix(p.matrix() * q.matrix());
            Projector<Rational> join = Projector<Rational>::from_matrix(
                p.matrix() + q.matrix() - p.matrix() * q.matrix());

            if (!(range_of(product) == subspace_intersect(range_of(p), range_of(q)))) {
                c.detail = "product range broke at d=" + std::to_string(d);
                return c;
            }
            if (!(range_of(p.complement()) == orthocomplement(range_of(p)))) {
                c.detail = "complement range broke at d=" + std::to_string(d);
                return c;
            }
            if (!(range_of(join) == subspace_sum(range_of(p), range_of(q)))) {
                c.detail = "join range broke at d=" + std::to_string(d);
                return c;
            }
            identities += 3;
        }
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = std::to_string(identities) + " identities, " + detail::dim_list_text(opt.dims);
    return c;
}

inline TheoremCheck check_global_is_defined_local(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "admissible global evaluations are defined local evaluations, node by node";
    std::uint64_t formulas = 0, evaluations = 0;
    FormulaEnumerator e(2, 3);
    for (std::size_t k = 0; k < opt.dims.size(); ++k) {
        int d = opt.dims[k];
        RandomSource rs = RandomSource::substream(opt.seed, 200 + k);
        // Fresh commuting valuations, reused across the whole sweep at
        // this dimension; the claim is per-valuation, not per-pair.
        std::vector<ProjValuation<Rational>> vals;
        for (int i = 0; i < 3; ++i)
            vals.push_back(random_commuting_valuation<Rational>(rs, d, {0, 1}));

        e.reset();
        Formula f = Formula::atom(0);
        while (e.next(f)) {
            if (k == 0) ++formulas;
            for (const ProjValuation<Rational>& v : vals) {
                if (!com_admissible(f, v)) {
                    c.detail = "shared-basis valuation not admissible at d=" + std::to_string(d);
                    return c;
                }
                if (!detail::nodewise_proj_agreement(f, v)) {
                    c.detail = "disagreement on " + print(f) + " at d=" + std::to_string(d);
                    return c;
                }
                ++evaluations;
            }
        }
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = std::to_string(formulas) + " formulas, " + std::to_string(evaluations) +
               " evaluations, " + detail::dim_list_text(opt.dims);
    return c;
}

inline TheoremCheck check_local_lifts_to_subspaces(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "defined local values lift to subspace values through their ranges";
    std::uint64_t defined = 0, sampled = 0;
    FormulaEnumerator e(2, 3);
    for (std::size_t k = 0; k < opt.dims.size(); ++k) {
        int d = opt.dims[k];
        RandomSource rs = RandomSource::substream(opt.seed, 300 + k);
        std::vector<ProjValuation<Rational>> vals;
        for (int i = 0; i < 3; ++i)
            vals.push_back(detail::sampled_valuation(rs, d, {0, 1}, i % 3));
        // Random draws can land on degenerate projectors that commute
        // with everything; the tilted line against a coordinate line
        // guarantees a non-commuting pair, so the undefined branch of
        // the walker is exercised at every dimension with room for it.
        if (d >= 2) vals.push_back(std_valuation_to_proj(separator_std_witness(d)));

        e.reset();
        Formula f = Formula::atom(0);
        while (e.next(f)) {
            for (const ProjValuation<Rational>& v : vals) {
                ++sampled;
                StdValuation<Rational> u = pba_valuation_to_std(v);
                if (!detail::nodewise_range_agreement(f, v, u, d)) {
                    c.detail = "range lift broke on " + print(f) + " at d=" + std::to_string(d);
                    return c;
                }
                if (eval_pba(f, v).is_defined()) ++defined;
            }
        }
    }
    if (defined == 0) {
        c.detail = "no defined local evaluation was ever sampled; battery is vacuous";
        return c;
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = std::to_string(defined) + " defined evaluations of " + std::to_string(sampled) +
               " sampled, " + detail::dim_list_text(opt.dims);
    return c;
}

inline TheoremCheck check_satisfiability_chain(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "satisfiability chain: global implies local implies subspace";
    HuntBounds bounds;
    bounds.max_atoms = 2;
    bounds.max_connectives = 3;
    SearchBudget budget;
    budget.seed = opt.seed;
    budget.max_trials = 40;

    int d = opt.dims.front();
    std::uint64_t rows = 0;
    try {
        HuntSummary<Rational> summary = hunt_open_problem<Rational>(
            bounds, d, budget, [&rows](const ClassificationRow<Rational>& row) {
                ++rows;
                bool com_sat = row.com == SearchVerdict::SatWithWitness;
                bool pba_sat = row.pba == SearchVerdict::SatWithWitness;
                bool std_sat = row.std_lattice == SearchVerdict::SatWithWitness;
                if ((com_sat && !pba_sat) || (pba_sat && !std_sat))
                    throw internal_soundness_error("chain violated on " + print(row.formula));
            });
        c.status = TheoremCheck::Status::Pass;
        c.detail = std::to_string(rows) + " formulas classified at d=" + std::to_string(d) +
                   ", every verified witness respected the chain";
    } catch (const internal_soundness_error& err) {
        c.detail = err.what();
    }
    return c;
}

inline TheoremCheck check_separator_com_unsat(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "separator: no commuting family satisfies it, and the decision procedure proves it";
    Formula sep = separator_formula();
    Formula grouped = parse("p0 & (p1 | p2)");
    Formula distributed = parse("(p0 & p1) | (p0 & p2)");
    std::uint64_t zeros = 0;
    for (std::size_t k = 0; k < opt.dims.size(); ++k) {
        int d = opt.dims[k];
        SearchReport<ProjValuation<Rational>> rep = decide_com_sat<Rational>(sep, d);
        if (rep.verdict != SearchVerdict::UnsatProved) {
            c.detail = "decision procedure returned " + std::string(to_string(rep.verdict)) +
                       " at d=" + std::to_string(d);
            return c;
        }
        RandomSource rs = RandomSource::substream(opt.seed, 400 + k);
        for (int t = 0; t < opt.samples; ++t) {
            ProjValuation<Rational> v = random_commuting_valuation<Rational>(rs, d, {0, 1, 2});
            // The two distributed forms collapse to the same projector
            // inside a commuting family, so the conjunction with the
            // negation of one of them must vanish.
            Projector<Rational> lhs = eval_com(grouped, v);
            Projector<Rational> rhs = eval_com(distributed, v);
            if (!(lhs == rhs)) {
                c.detail = "distributed forms differ in a commuting family at d=" +
                           std::to_string(d);
                return c;
            }
            if (!eval_com(sep, v).is_zero()) {
                c.detail = "nonzero separator value in a commuting family at d=" +
                           std::to_string(d);
                return c;
            }
            ++zeros;
        }
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = "proved for " + detail::dim_list_text(opt.dims) + "; " + std::to_string(zeros) +
               " sampled commuting valuations all evaluate to zero";
    return c;
}

inline TheoremCheck check_separator_definedness(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "separator: a defined local value forces its three atoms to commute pairwise";
    Formula sep = separator_formula();
    std::uint64_t defined = 0, sampled = 0;
    for (std::size_t k = 0; k < opt.dims.size(); ++k) {
        int d = opt.dims[k];
        RandomSource rs = RandomSource::substream(opt.seed, 500 + k);
        for (int t = 0; t < opt.samples; ++t) {
            ProjValuation<Rational> v = detail::sampled_valuation(rs, d, {0, 1, 2}, t % 3);
            ++sampled;
            if (!eval_pba(sep, v).is_defined()) continue;
            ++defined;
            if (first_noncommuting_pair(sep, v)) {
                c.detail = "defined local value with non-commuting atoms at d=" +
                           std::to_string(d);
                return c;
            }
        }
    }
    if (defined == 0) {
        c.detail = "no defined local evaluation was ever sampled; battery is vacuous";
        return c;
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = std::to_string(defined) + " defined cases of " + std::to_string(sampled) +
               " sampled, " + detail::dim_list_text(opt.dims);
    return c;
}

inline TheoremCheck check_separator_pba_unsat(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "separator: every local evaluation is undefined or zero, and search finds no witness";
    Formula sep = separator_formula();
    std::uint64_t undefined_count = 0, zero_count = 0;
    for (std::size_t k = 0; k < opt.dims.size(); ++k) {
        int d = opt.dims[k];
        RandomSource rs = RandomSource::substream(opt.seed, 600 + k);
        for (int t = 0; t < opt.samples; ++t) {
            ProjValuation<Rational> v = detail::sampled_valuation(rs, d, {0, 1, 2}, t % 3);
            PbaOutcome<Rational> outcome = eval_pba(sep, v);
            if (!outcome.is_defined()) {
                ++undefined_count;
            } else if (outcome.value().is_zero()) {
                ++zero_count;
            } else {
                c.detail = "nonzero defined local value at d=" + std::to_string(d);
                return c;
            }
        }
        SearchBudget budget;
        budget.seed = opt.seed;
        budget.dimension = d;
        SearchReport<ProjValuation<Rational>> rep = search_pba<Rational>(sep, budget);
        if (rep.verdict == SearchVerdict::SatWithWitness) {
            c.detail = "search produced a verified local witness at d=" + std::to_string(d) +
                       "; this would be a research-grade surprise";
            return c;
        }
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = std::to_string(undefined_count) + " undefined and " + std::to_string(zero_count) +
               " zero-valued samples, no witness found, " + detail::dim_list_text(opt.dims);
    return c;
}

inline TheoremCheck check_separator_std_sat(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "separator: the tilted-line subspace witness evaluates to a nonzero value";
    Formula sep = separator_formula();
    std::vector<int> ran, skipped;
    for (int d : opt.dims) {
        if (d < 2) {
            skipped.push_back(d);
            continue;
        }
        StdValuation<Rational> v = separator_std_witness(d);
        const Subspace<Rational>&p = v.at(0), &q = v.at(1), &r = v.at(2);

        // The intermediate objects are pinned exactly, not just checked
        // for nonzero-ness, so a broken lattice operation cannot slip
        // through by accident.
        Subspace<Rational> q_plus_r = subspace_sum(q, r);
        bool ok = subspace_intersect(p, q_plus_r) == p &&
                  subspace_intersect(p, q).is_zero() && subspace_intersect(p, r).is_zero() &&
                  subspace_sum(subspace_intersect(p, q), subspace_intersect(p, r)).is_zero() &&
                  eval_std(sep, v, d) == p && !p.is_zero();
        if (!ok) {
            c.detail = "witness computation went wrong at d=" + std::to_string(d);
            return c;
        }
        ran.push_back(d);
    }
    if (ran.empty()) {
        c.status = TheoremCheck::Status::Skipped;
        c.detail = "needs dimension at least 2, none was requested";
        return c;
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = "witness verified for " + detail::dim_list_text(ran) +
               (skipped.empty() ? "" : "; smaller dimensions skipped");
    return c;
}

inline TheoremCheck check_separation_from_com(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "subspace satisfiability strictly exceeds global commuting satisfiability";
    Formula sep = separator_formula();
    std::vector<int> ran;
    for (int d : opt.dims) {
        if (d < 2) continue;
        bool std_sat = !eval_std(sep, separator_std_witness(d), d).is_zero();
        bool com_unsat =
            decide_com_sat<Rational>(sep, d).verdict == SearchVerdict::UnsatProved;
        if (!std_sat || !com_unsat) {
            c.detail = "separation failed at d=" + std::to_string(d);
            return c;
        }
        ran.push_back(d);
    }
    if (ran.empty()) {
        c.status = TheoremCheck::Status::Skipped;
        c.detail = "needs dimension at least 2, none was requested";
        return c;
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = "one explicit formula separates the two classes for " +
               detail::dim_list_text(ran);
    return c;
}

inline TheoremCheck check_separation_from_pba(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "subspace satisfiability strictly exceeds local partial-Boolean satisfiability";
    Formula sep = separator_formula();
    std::vector<int> ran;
    for (std::size_t k = 0; k < opt.dims.size(); ++k) {
        int d = opt.dims[k];
        if (d < 2) continue;
        bool std_sat = !eval_std(sep, separator_std_witness(d), d).is_zero();

        // Local unsatisfiability is certified by the reduction chain:
        // defined forces commuting atoms, commuting families give zero.
        RandomSource rs = RandomSource::substream(opt.seed, 700 + k);
        bool reduction_holds = true;
        for (int t = 0; t < opt.samples && reduction_holds; ++t) {
            ProjValuation<Rational> v = detail::sampled_valuation(rs, d, {0, 1, 2}, t % 3);
            PbaOutcome<Rational> outcome = eval_pba(sep, v);
            if (!outcome.is_defined()) continue;
            reduction_holds = !first_noncommuting_pair(sep, v).has_value() &&
                              outcome.value().matrix() == eval_com(sep, v).matrix() &&
                              outcome.value().is_zero();
        }
        if (!std_sat || !reduction_holds) {
            c.detail = "separation failed at d=" + std::to_string(d);
            return c;
        }
        ran.push_back(d);
    }
    if (ran.empty()) {
        c.status = TheoremCheck::Status::Skipped;
        c.detail = "needs dimension at least 2, none was requested";
        return c;
    }
    c.status = TheoremCheck::Status::Pass;
    c.detail = "one explicit formula separates the two classes for " +
               detail::dim_list_text(ran);
    return c;
}

inline TheoremCheck check_class_comparison(const ReproduceOptions& opt) {
    TheoremCheck c;
    c.name = "class comparison: both strict inclusions hold, local-vs-global stays open";
    HuntBounds bounds;
    bounds.max_atoms = 2;
    bounds.max_connectives = 3;
    SearchBudget budget;
    budget.seed = opt.seed;
    budget.max_trials = 40;

    int d = 0;
    for (int cand : opt.dims)
        if (cand >= 2) {
            d = cand;
            break;
        }
    if (d == 0) {
        c.status = TheoremCheck::Status::Skipped;
        c.detail = "needs dimension at least 2, none was requested";
        return c;
    }

    HuntSummary<Rational> summary = hunt_open_problem<Rational>(bounds, d, budget, nullptr);
    c.status = TheoremCheck::Status::Pass;
    if (summary.candidates.empty()) {
        c.detail = "sweep of " + std::to_string(summary.formulas_classified) +
                   " formulas found no formula satisfiable locally but not globally; "
                   "whether the two classes coincide remains open";
    } else {
        c.detail = std::to_string(summary.candidates.size()) +
                   " candidate(s) separating local from global satisfiability were found "
                   "and re-verified; the open question would be settled";
    }
    return c;
}

inline ReproduceReport run_reproduction(
    const ReproduceOptions& opt,
    const std::function<void(const TheoremCheck&)>& sink = nullptr) {
    opt.validate();
    ReproduceReport report;
    auto add = [&](TheoremCheck c) {
        if (sink) sink(c);
        report.checks.push_back(std::move(c));
    };
    add(check_range_identities(opt));
    add(check_global_is_defined_local(opt));
    add(check_local_lifts_to_subspaces(opt));
    add(check_satisfiability_chain(opt));
    add(check_separator_com_unsat(opt));
    add(check_separator_definedness(opt));
    add(check_separator_pba_unsat(opt));
    add(check_separator_std_sat(opt));
    add(check_separation_from_com(opt));
    add(check_separation_from_pba(opt));
    add(check_class_comparison(opt));
    return report;
}

}  // namespace qlsat
