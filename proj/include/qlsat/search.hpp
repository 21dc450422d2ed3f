#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qlsat/enumerate.hpp"
#include "qlsat/random.hpp"
#include "qlsat/semantics.hpp"

namespace qlsat {

/// Fixed default seed for every randomized command; reports always echo
/// the seed actually used.
constexpr std::uint64_t kDefaultSeed = 1729;

/// Candidate-promotion tolerances of the floating-point stage. They gate
/// which candidates reach exact verification, never a verdict.
constexpr double kFloatCommTolerance = 1e-9;
constexpr double kFloatValueThreshold = 1e-6;

struct SearchBudget {
    std::uint64_t max_trials = 200;
    std::uint64_t seed = kDefaultSeed;
    int dimension = 2;
    long denom_bound = 64;

    void validate() const {
        if (max_trials < 1) throw error("search budget needs max_trials >= 1");
        if (dimension < 1) throw error("search budget needs dimension >= 1");
        if (denom_bound < 1) throw error("search budget needs denom_bound >= 1");
    }
};

enum class SearchVerdict { SatWithWitness, UnsatProved, Unknown };

inline const char* to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::SatWithWitness: return "SAT";
        case SearchVerdict::UnsatProved: return "UNSAT";
        default: return "UNKNOWN";
    }
}

/// Outcome of a decision or search run. UNSAT only ever comes from the
/// exact Boolean-reduction decider; the heuristic searchers report
/// UNKNOWN when they come up empty.
template <class Valuation>
struct SearchReport {
    SearchVerdict verdict = SearchVerdict::Unknown;
    std::optional<Valuation> witness;
    std::uint64_t trials_used = 0;
    std::string method = "none";
    std::uint64_t seed = 0;
};

/// Exhaustive truth-table satisfiability. The explorer never goes past a
/// handful of atoms, so 20 is a generous ceiling.
inline std::optional<std::map<int, bool>> classical_sat(const Formula& f) {
    std::vector<int> as = atoms(f);
    if (as.size() > 20) throw error("truth-table satisfiability is capped at 20 atoms");
    std::map<int, int> slot;
    for (std::size_t i = 0; i < as.size(); ++i) slot[as[i]] = static_cast<int>(i);

    auto eval = [&](const Formula& g, std::uint32_t mask) {
        auto rec = [&](auto&& self, const Formula& h) -> bool {
            switch (h.kind()) {
                case Formula::Kind::Atom: return (mask >> slot.at(h.atom_index())) & 1;
                case Formula::Kind::Neg: return !self(self, h.child());
                case Formula::Kind::And: return self(self, h.left()) && self(self, h.right());
                default: return self(self, h.left()) || self(self, h.right());
            }
        };
        return rec(rec, g);
    };

    std::uint32_t total = std::uint32_t{1} << as.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (!eval(f, mask)) continue;
        std::map<int, bool> assignment;
        for (int a : as) assignment[a] = (mask >> slot.at(a)) & 1;
        return assignment;
    }
    return std::nullopt;
}

namespace detail {

template <class S>
void require_verified_com(const Formula& f, const ProjValuation<S>& w) {
    if (!sat_verdict(eval_com(f, w)))
        throw internal_soundness_error("commuting witness failed exact re-verification");
}

template <class S>
void require_verified_pba(const Formula& f, const ProjValuation<S>& w) {
    if (!sat_verdict(eval_pba(f, w)))
        throw internal_soundness_error("partial-Boolean witness failed exact re-verification");
}

template <class S>
void require_verified_std(const Formula& f, const StdValuation<S>& w, int d) {
    if (!sat_verdict(eval_std(f, w, d)))
        throw internal_soundness_error("subspace witness failed exact re-verification");
}

}  // namespace detail

/// Exact decision for the commuting semantics. A commuting projector
/// family is simultaneously diagonalizable, so the value of a formula is
/// the coordinatewise Boolean evaluation of its atoms' diagonal bits:
/// satisfiability collapses to classical satisfiability, with a 0/I
/// witness in any dimension. The finite-family brute-force oracle below
/// cross-validates this reduction in the test suite.
template <class S = Rational>
SearchReport<ProjValuation<S>> decide_com_sat(const Formula& f, int d) {
    if (d < 1) throw error("decide_com_sat needs dimension >= 1");
    SearchReport<ProjValuation<S>> report;
    report.method = "boolean-reduction";
    std::vector<int> as = atoms(f);
    report.trials_used = std::uint64_t{1} << as.size();
    std::optional<std::map<int, bool>> assignment = classical_sat(f);
    if (!assignment) {
        report.verdict = SearchVerdict::UnsatProved;
        return report;
    }
    ProjValuation<S> w;
    for (const auto& [atom, bit] : *assignment)
        w.emplace(atom, bit ? Projector<S>::identity(d) : Projector<S>::zero(d));
    detail::require_verified_com(f, w);
    report.verdict = SearchVerdict::SatWithWitness;
    report.witness = std::move(w);
    return report;
}

/// Brute-force satisfiability for the commuting semantics in d=2 over
/// the fixed six-projector family {0, I, diag(1,0), diag(0,1),
/// proj(e1+e2), proj(e1-e2)}: try every assignment, keep the admissible
/// ones, look for a nonzero value. Independent of decide_com_sat; exists
/// to validate the Boolean reduction empirically.
inline bool com_brute_force_finite_family(const Formula& f) {
    auto line2 = [](int x, int y) {
        Matrix<Rational> col(2, 1);
        col.at(0, 0) = x;
        col.at(1, 0) = y;
        return projector_of(Subspace<Rational>::span_columns(col));
    };
    const std::vector<Projector<Rational>> projs = {
        Projector<Rational>::zero(2), Projector<Rational>::identity(2),
        line2(1, 0), line2(0, 1), line2(1, 1), line2(1, -1)};

    std::vector<int> as = atoms(f);
    std::vector<std::size_t> pick(as.size(), 0);
    for (;;) {
        ProjValuation<Rational> v;
        for (std::size_t i = 0; i < as.size(); ++i) v.emplace(as[i], projs[pick[i]]);
        if (com_admissible(f, v) && sat_verdict(eval_com(f, v))) return true;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == projs.size()) pick[i++] = 0;
        if (i == pick.size()) return false;
    }
}

/// Best rational approximation with denominator <= bound, by continued
/// fractions on the exact binary value of the double. When the expansion
/// overshoots the bound, the closer of the last convergent and the best
/// semiconvergent wins; ties go to the convergent.
inline Rational reconstruct_rational(double x, long denominator_bound) {
    if (!std::isfinite(x)) throw error("reconstruct_rational: input is not finite");
    if (denominator_bound < 1) throw error("reconstruct_rational: bound must be >= 1");
    Rational target(x);  // doubles convert exactly
    mpz_class bound(denominator_bound);

    mpz_class num = target.get_num(), den = target.get_den();
    mpz_class h_prev(1), k_prev(0);  // convergent index -1
    mpz_class h_cur(0), k_cur(1);    // placeholder, overwritten by a0
    bool first = true;
    while (den != 0) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        mpz_class h_next = first ? a : a * h_cur + h_prev;
        mpz_class k_next = first ? mpz_class(1) : a * k_cur + k_prev;
        if (!first && k_next > bound) {
            // Semiconvergent with the largest in-bound coefficient.
            mpz_class coeff = (bound - k_prev) / k_cur;
            Rational convergent(h_cur, k_cur);
            convergent.canonicalize();
            if (coeff == 0) return convergent;
            Rational semi(coeff * h_cur + h_prev, coeff * k_cur + k_prev);
            semi.canonicalize();
            Rational err_conv = abs(target - convergent), err_semi = abs(target - semi);
            return err_semi < err_conv ? semi : convergent;
        }
        if (first) {
            h_prev = 1, k_prev = 0;
        } else {
            h_prev = h_cur, k_prev = k_cur;
        }
        h_cur = h_next, k_cur = k_next;
        first = false;
        num = den;
        den = r;
    }
    Rational exact(h_cur, k_cur);
    exact.canonicalize();
    return exact;
}

// Floating-point candidate generation. Everything in this block is
// heuristic: it proposes valuations, and only exact re-evaluation above
// promotes them into reports.
namespace fsearch {

struct FMat {
    int rows = 0, cols = 0;
    std::vector<double> e;
    FMat() = default;
    FMat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0.0) {}
    double& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
};

inline FMat fmul(const FMat& a, const FMat& b) {
    FMat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            double aik = a.at(i, k);
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

inline FMat ftranspose(const FMat& a) {
    FMat r(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

inline double fnorm(const FMat& a) {
    double s = 0;
    for (double x : a.e) s += x * x;
    return std::sqrt(s);
}

inline FMat fidentity(int d) {
    FMat r(d, d);
    for (int i = 0; i < d; ++i) r.at(i, i) = 1.0;
    return r;
}

/// Gram-Schmidt with column dropping: returns an orthonormal frame for
/// the numerical column span.
inline FMat orthonormal_frame(const FMat& m, double tol = 1e-10) {
    FMat out(m.rows, 0);
    std::vector<double> col(static_cast<std::size_t>(m.rows));
    for (int j = 0; j < m.cols; ++j) {
        for (int i = 0; i < m.rows; ++i) col[static_cast<std::size_t>(i)] = m.at(i, j);
        for (int p = 0; p < out.cols; ++p) {
            double dot = 0;
            for (int i = 0; i < m.rows; ++i) dot += out.at(i, p) * col[static_cast<std::size_t>(i)];
            for (int i = 0; i < m.rows; ++i) col[static_cast<std::size_t>(i)] -= dot * out.at(i, p);
        }
        double n = 0;
        for (double x : col) n += x * x;
        n = std::sqrt(n);
        if (n < tol) continue;
        FMat grown(m.rows, out.cols + 1);
        for (int i = 0; i < m.rows; ++i) {
            for (int p = 0; p < out.cols; ++p) grown.at(i, p) = out.at(i, p);
            grown.at(i, out.cols) = col[static_cast<std::size_t>(i)] / n;
        }
        out = std::move(grown);
    }
    return out;
}

/// Orthonormal frame of the orthogonal complement: extend the frame by
/// standard vectors and keep the extension.
inline FMat complement_frame(const FMat& frame, int d) {
    FMat ext(d, frame.cols + d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < frame.cols; ++j) ext.at(i, j) = frame.at(i, j);
        ext.at(i, frame.cols + i) = 1.0;
    }
    FMat full = orthonormal_frame(ext);
    FMat out(d, full.cols - frame.cols);
    for (int i = 0; i < d; ++i)
        for (int j = frame.cols; j < full.cols; ++j) out.at(i, j - frame.cols) = full.at(i, j);
    return out;
}

inline FMat hconcat(const FMat& a, const FMat& b) {
    FMat r(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

/// Float subspace evaluation on frames; mirrors eval_std.
inline FMat feval_std(const Formula& f, const std::map<int, FMat>& v, int d) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return v.at(f.atom_index());
        case Formula::Kind::Neg: return complement_frame(feval_std(f.child(), v, d), d);
        case Formula::Kind::And: {
            // A meet B = complement(complement(A) join complement(B))
            FMat ca = complement_frame(feval_std(f.left(), v, d), d);
            FMat cb = complement_frame(feval_std(f.right(), v, d), d);
            return complement_frame(orthonormal_frame(hconcat(ca, cb)), d);
        }
        default:
            return orthonormal_frame(
                hconcat(feval_std(f.left(), v, d), feval_std(f.right(), v, d)));
    }
}

/// Float projector evaluation; records the worst nodewise commutator.
struct FProjEval {
    FMat value;
    double worst_comm = 0.0;
};

inline FProjEval feval_proj(const Formula& f, const std::map<int, FMat>& projs, int d) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return {projs.at(f.atom_index()), 0.0};
        case Formula::Kind::Neg: {
            FProjEval c = feval_proj(f.child(), projs, d);
            FMat r = fidentity(d);
            for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= c.value.e[i];
            return {std::move(r), c.worst_comm};
        }
        default: {
            FProjEval l = feval_proj(f.left(), projs, d);
            FProjEval r = feval_proj(f.right(), projs, d);
            FMat lr = fmul(l.value, r.value);
            FMat rl = fmul(r.value, l.value);
            FMat comm(d, d);
            for (std::size_t i = 0; i < comm.e.size(); ++i) comm.e[i] = lr.e[i] - rl.e[i];
            double worst = std::max({l.worst_comm, r.worst_comm, fnorm(comm)});
            if (f.kind() == Formula::Kind::And) return {std::move(lr), worst};
            FMat sum(d, d);
            for (std::size_t i = 0; i < sum.e.size(); ++i)
                sum.e[i] = l.value.e[i] + r.value.e[i] - lr.e[i];
            return {std::move(sum), worst};
        }
    }
}

inline double rnd_unit(RandomSource& rs) {
    return static_cast<double>(rs.next() >> 11) / 9007199254740992.0;  // [0, 1)
}

inline double rnd_signed(RandomSource& rs) { return 2.0 * rnd_unit(rs) - 1.0; }

inline FMat rnd_frame(RandomSource& rs, int d, int k) {
    FMat raw(d, k);
    for (double& x : raw.e) x = rnd_signed(rs);
    return orthonormal_frame(raw);
}

/// Exact matrix recovered entrywise from a float frame.
inline Matrix<Rational> reconstruct_frame(const FMat& frame, long denom_bound) {
    Matrix<Rational> m(frame.rows, frame.cols);
    for (int i = 0; i < frame.rows; ++i)
        for (int j = 0; j < frame.cols; ++j)
            m.at(i, j) = reconstruct_rational(frame.at(i, j), denom_bound);
    return m;
}

}  // namespace fsearch

namespace detail {

/// Structured vector pool for the dimension-profile strategy: standard
/// basis vectors, pairwise sums and differences.
template <class S>
std::vector<Matrix<S>> structured_vectors(int d) {
    std::vector<Matrix<S>> pool;
    for (int i = 0; i < d; ++i) {
        Matrix<S> v(d, 1);
        v.at(i, 0) = S(1);
        pool.push_back(v);
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Matrix<S> v(d, 1);
            v.at(i, 0) = S(1);
            v.at(j, 0) = S(1);
            pool.push_back(v);
            v.at(j, 0) = S(-1);
            pool.push_back(v);
        }
    return pool;
}

/// One dimension-profile trial: ranks are the digits of `profile_index`
/// base d+1; columns come from the structured pool with an occasional
/// random rational vector mixed in.
template <class S>
StdValuation<S> profile_valuation(RandomSource& rs, const std::vector<int>& as, int d,
                                  std::uint64_t profile_index, long denom_bound) {
    const std::vector<Matrix<S>> pool = structured_vectors<S>(d);
    StdValuation<S> v;
    for (int a : as) {
        int k = static_cast<int>(profile_index % static_cast<std::uint64_t>(d + 1));
        profile_index /= static_cast<std::uint64_t>(d + 1);
        Matrix<S> cols(d, k);
        for (int c = 0; c < k; ++c) {
            if (rs.below(4) == 0) {
                for (int i = 0; i < d; ++i)
                    cols.at(i, c) = random_scalar<S>(rs, 3, static_cast<int>(
                                                                std::min<long>(denom_bound, 8)));
            } else {
                const Matrix<S>& pick = pool[rs.below(pool.size())];
                for (int i = 0; i < d; ++i) cols.at(i, c) = pick.at(i, 0);
            }
        }
        v.emplace(a, Subspace<S>::span_columns(cols));
    }
    return v;
}

}  // namespace detail

/// Heuristic satisfiability search under the subspace semantics. Never
/// returns UNSAT: a miss is UNKNOWN. Strategy order per trial budget:
/// (a) one Boolean-reduction lift, (b) dimension-profile enumeration
/// with structured bases, (c) floating-point rank search with rational
/// reconstruction. Every returned witness has been re-verified exactly.
template <class S = Rational>
SearchReport<StdValuation<S>> search_std(const Formula& f, const SearchBudget& budget) {
    budget.validate();
    const int d = budget.dimension;
    std::vector<int> as = atoms(f);
    SearchReport<StdValuation<S>> report;
    report.seed = budget.seed;

    auto finish = [&](StdValuation<S> w, const char* method, std::uint64_t trials) {
        detail::require_verified_std(f, w, d);
        report.verdict = SearchVerdict::SatWithWitness;
        report.witness = std::move(w);
        report.method = method;
        report.trials_used = trials;
        return report;
    };

    // (a) Boolean lift: a classical model, read as {0}/H subspaces.
    SearchReport<ProjValuation<S>> boolean = decide_com_sat<S>(f, d);
    if (boolean.verdict == SearchVerdict::SatWithWitness)
        return finish(pba_valuation_to_std(*boolean.witness), "boolean-lift", 1);

    std::uint64_t remaining = budget.max_trials - 1;
    std::uint64_t float_trials = remaining / 4;
    std::uint64_t profile_trials = remaining - float_trials;

    for (std::uint64_t t = 1; t <= profile_trials; ++t) {
        RandomSource rs = RandomSource::substream(budget.seed, t);
        StdValuation<S> v =
            detail::profile_valuation<S>(rs, as, d, t - 1, budget.denom_bound);
        if (sat_verdict(eval_std(f, v, d))) return finish(std::move(v), "dimension-profile", t);
    }

    if constexpr (std::is_same_v<S, Rational>) {
        for (std::uint64_t t = profile_trials + 1; t <= remaining; ++t) {
            RandomSource rs = RandomSource::substream(budget.seed, t);
            std::map<int, fsearch::FMat> frames;
            for (int a : as) frames[a] = fsearch::rnd_frame(rs, d, rs.range(0, d));
            // Local search: keep entrywise perturbations that do not
            // lower the rank of the float value.
            int rank = fsearch::feval_std(f, frames, d).cols;
            for (int step = 0; step < 40 && !as.empty(); ++step) {
                int a = as[rs.below(as.size())];
                fsearch::FMat& target = frames[a];
                if (target.cols == 0) continue;
                std::map<int, fsearch::FMat> trial_frames = frames;
                fsearch::FMat raw = target;
                raw.at(static_cast<int>(rs.below(static_cast<std::uint64_t>(raw.rows))),
                       static_cast<int>(rs.below(static_cast<std::uint64_t>(raw.cols)))) +=
                    0.25 * fsearch::rnd_signed(rs);
                trial_frames[a] = fsearch::orthonormal_frame(raw);
                int trial_rank = fsearch::feval_std(f, trial_frames, d).cols;
                if (trial_rank >= rank) {
                    frames = std::move(trial_frames);
                    rank = trial_rank;
                }
            }
            if (rank < 1) continue;
            StdValuation<S> v;
            for (int a : as)
                v.emplace(a, Subspace<S>::span_columns(
                                 fsearch::reconstruct_frame(frames[a], budget.denom_bound)));
            if (sat_verdict(eval_std(f, v, d)))
                return finish(std::move(v), "float-reconstruction", t);
        }
    }

    report.trials_used = budget.max_trials;
    return report;
}

/// Heuristic satisfiability search under the partial-Boolean semantics.
/// Never returns UNSAT. Strategies: (a) one Boolean-reduction lift,
/// (b) block-structured commuting valuations, (c) floating-point
/// annealing toward nodewise commutation, then rational reconstruction.
/// Every returned witness has been re-verified exactly.
template <class S = Rational>
SearchReport<ProjValuation<S>> search_pba(const Formula& f, const SearchBudget& budget) {
    budget.validate();
    const int d = budget.dimension;
    std::vector<int> as = atoms(f);
    SearchReport<ProjValuation<S>> report;
    report.seed = budget.seed;

    auto finish = [&](ProjValuation<S> w, const char* method, std::uint64_t trials) {
        detail::require_verified_pba(f, w);
        report.verdict = SearchVerdict::SatWithWitness;
        report.witness = std::move(w);
        report.method = method;
        report.trials_used = trials;
        return report;
    };

    SearchReport<ProjValuation<S>> boolean = decide_com_sat<S>(f, d);
    if (boolean.verdict == SearchVerdict::SatWithWitness)
        return finish(std::move(*boolean.witness), "boolean-lift", 1);

    std::uint64_t remaining = budget.max_trials - 1;
    std::uint64_t float_trials = remaining / 4;
    std::uint64_t block_trials = remaining - float_trials;

    for (std::uint64_t t = 1; t <= block_trials; ++t) {
        RandomSource rs = RandomSource::substream(budget.seed, t);
        if (as.empty()) break;
        int blocks = rs.range(1, static_cast<int>(as.size()));
        ProjValuation<S> v = random_block_valuation<S>(rs, d, as, blocks);
        if (sat_verdict(eval_pba(f, v))) return finish(std::move(v), "block-structured", t);
    }

    if constexpr (std::is_same_v<S, Rational>) {
        for (std::uint64_t t = block_trials + 1; t <= remaining; ++t) {
            RandomSource rs = RandomSource::substream(budget.seed, t);
            std::map<int, fsearch::FMat> frames;
            for (int a : as) frames[a] = fsearch::rnd_frame(rs, d, rs.range(0, d));
            auto projector = [&](const fsearch::FMat& fr) {
                return fsearch::fmul(fr, fsearch::ftranspose(fr));
            };
            auto objective = [&] {
                std::map<int, fsearch::FMat> projs;
                for (auto& [a, fr] : frames) projs[a] = projector(fr);
                fsearch::FProjEval ev = fsearch::feval_proj(f, projs, d);
                return std::pair(ev.worst_comm, fsearch::fnorm(ev.value));
            };
            auto [comm, norm] = objective();
            double temperature = 0.5;
            for (int step = 0; step < 120 && !as.empty(); ++step, temperature *= 0.95) {
                int a = as[rs.below(as.size())];
                fsearch::FMat saved = frames[a];
                if (saved.cols == 0) continue;
                fsearch::FMat raw = saved;
                raw.at(static_cast<int>(rs.below(static_cast<std::uint64_t>(raw.rows))),
                       static_cast<int>(rs.below(static_cast<std::uint64_t>(raw.cols)))) +=
                    temperature * fsearch::rnd_signed(rs);
                frames[a] = fsearch::orthonormal_frame(raw);
                auto [new_comm, new_norm] = objective();
                double delta = (new_comm - comm) + (std::min(norm, 1.0) - std::min(new_norm, 1.0));
                if (delta <= 0 || fsearch::rnd_unit(rs) < std::exp(-delta / temperature)) {
                    comm = new_comm;
                    norm = new_norm;
                } else {
                    frames[a] = std::move(saved);
                }
            }
            if (comm > kFloatCommTolerance || norm < kFloatValueThreshold) continue;
            ProjValuation<S> v;
            for (int a : as)
                v.emplace(a, projector_of(Subspace<S>::span_columns(
                                 fsearch::reconstruct_frame(frames[a], budget.denom_bound))));
            if (sat_verdict(eval_pba(f, v)))
                return finish(std::move(v), "float-reconstruction", t);
        }
    }

    report.trials_used = budget.max_trials;
    return report;
}

}  // namespace qlsat
