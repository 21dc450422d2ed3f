#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qlsat/formula.hpp"
#include "qlsat/projector.hpp"

namespace qlsat {

/// The three ways a formula is given meaning over F^d.
enum class Semantics { Std, Com, Pba };

inline std::string to_string(Semantics s) {
    switch (s) {
        case Semantics::Std: return "STD";
        case Semantics::Com: return "COM";
        default: return "PBA";
    }
}

inline Semantics semantics_from_string(const std::string& text) {
    if (text == "STD" || text == "std") return Semantics::Std;
    if (text == "COM" || text == "com") return Semantics::Com;
    if (text == "PBA" || text == "pba") return Semantics::Pba;
    throw error("unknown semantics \"" + text + "\", expected STD, COM or PBA");
}

/// Valuations are partial maps. An atom of the formula that is absent
/// from the map is an error, never a silent default: a default of {0}
/// would quietly turn search misses into fake UNSAT evidence.
template <class S>
using StdValuation = std::map<int, Subspace<S>>;

template <class S>
using ProjValuation = std::map<int, Projector<S>>;

namespace detail {

template <class V>
const auto& valuation_at(const V& v, int atom) {
    auto it = v.find(atom);
    if (it == v.end())
        throw missing_atom_error(atom, "valuation has no entry for p" + std::to_string(atom));
    return it->second;
}

}  // namespace detail

/// Ambient dimension shared by every entry, or nullopt for an empty map.
/// Throws when the entries disagree among themselves.
template <class S>
std::optional<int> valuation_dimension(const StdValuation<S>& v) {
    std::optional<int> d;
    for (const auto& [atom, sub] : v) {
        if (!d) d = sub.ambient();
        if (sub.ambient() != *d)
            throw dimension_mismatch("valuation mixes ambient dimensions " + std::to_string(*d) +
                                     " and " + std::to_string(sub.ambient()));
    }
    return d;
}

template <class S>
std::optional<int> valuation_dimension(const ProjValuation<S>& v) {
    std::optional<int> d;
    for (const auto& [atom, proj] : v) {
        if (!d) d = proj.dim();
        if (proj.dim() != *d)
            throw dimension_mismatch("valuation mixes dimensions " + std::to_string(*d) + " and " +
                                     std::to_string(proj.dim()));
    }
    return d;
}

namespace detail {

template <class S>
Subspace<S> eval_std_rec(const Formula& f, const StdValuation<S>& v) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return valuation_at(v, f.atom_index());
        case Formula::Kind::Neg: return orthocomplement(eval_std_rec(f.child(), v));
        case Formula::Kind::And:
            return subspace_intersect(eval_std_rec(f.left(), v), eval_std_rec(f.right(), v));
        default: return subspace_sum(eval_std_rec(f.left(), v), eval_std_rec(f.right(), v));
    }
}

}  // namespace detail

/// Subspace-lattice evaluation: negation is the orthocomplement,
/// conjunction the intersection, disjunction the sum of subspaces.
template <class S>
Subspace<S> eval_std(const Formula& f, const StdValuation<S>& v, int d) {
    if (auto vd = valuation_dimension(v); vd && *vd != d)
        throw dimension_mismatch("valuation lives in dimension " + std::to_string(*vd) +
                                 ", evaluation requested in " + std::to_string(d));
    return detail::eval_std_rec(f, v);
}

/// First pair of atoms of `f` (in ascending index order) whose projectors
/// fail to commute, or nullopt when the valuation is admissible for the
/// global commuting semantics.
template <class S>
std::optional<std::pair<int, int>> first_noncommuting_pair(const Formula& f,
                                                           const ProjValuation<S>& v) {
    std::vector<int> as = atoms(f);
    for (std::size_t i = 0; i < as.size(); ++i) {
        const Projector<S>& pi = detail::valuation_at(v, as[i]);
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            if (!commutes(pi, detail::valuation_at(v, as[j]))) return std::pair(as[i], as[j]);
        }
    }
    return std::nullopt;
}

template <class S>
bool com_admissible(const Formula& f, const ProjValuation<S>& v) {
    return !first_noncommuting_pair(f, v).has_value();
}

namespace detail {

// Shared clause recursion of the two projector semantics. Inside one
// commuting family every intermediate is self-adjoint idempotent, so the
// trusted wraps hold their proof; `validate` re-derives it per node as a
// runtime check of that argument.
template <class S>
Projector<S> eval_proj_clauses(const Formula& f, const ProjValuation<S>& v, bool validate) {
    auto wrap = [&](Matrix<S> m) {
        return validate ? Projector<S>::from_matrix(std::move(m))
                        : Projector<S>::trusted(std::move(m));
    };
    switch (f.kind()) {
        case Formula::Kind::Atom: return valuation_at(v, f.atom_index());
        case Formula::Kind::Neg: return eval_proj_clauses(f.child(), v, validate).complement();
        case Formula::Kind::And: {
            Projector<S> l = eval_proj_clauses(f.left(), v, validate);
            Projector<S> r = eval_proj_clauses(f.right(), v, validate);
            return wrap(l.matrix() * r.matrix());
        }
        default: {
            Projector<S> l = eval_proj_clauses(f.left(), v, validate);
            Projector<S> r = eval_proj_clauses(f.right(), v, validate);
            return wrap(l.matrix() + r.matrix() - l.matrix() * r.matrix());
        }
    }
}

}  // namespace detail

/// Global commuting-projector evaluation: ~ -> I-P, & -> PQ,
/// | -> P+Q-PQ, legal only when the atom projectors pairwise commute.
/// Every intermediate value is re-validated as a projector.
template <class S>
Projector<S> eval_com(const Formula& f, const ProjValuation<S>& v) {
    if (auto bad = first_noncommuting_pair(f, v))
        throw not_admissible_error(bad->first, bad->second,
                                   "atoms p" + std::to_string(bad->first) + " and p" +
                                       std::to_string(bad->second) + " do not commute");
    valuation_dimension(v);
    return detail::eval_proj_clauses(f, v, /*validate=*/true);
}

/// eval_com without the admissibility sweep and per-node validation, for
/// callers that checked the family once and evaluate it many times.
template <class S>
Projector<S> eval_com_unchecked(const Formula& f, const ProjValuation<S>& v) {
    return detail::eval_proj_clauses(f, v, /*validate=*/false);
}

/// Result of a partial-Boolean evaluation: either a value, or the
/// address of the first binary node (post-order, so leftmost-innermost)
/// whose child values fail to commute, with those two values as
/// evidence.
template <class S>
class PbaOutcome {
  public:
    static PbaOutcome defined(Projector<S> value) {
        PbaOutcome o;
        o.value_ = std::move(value);
        return o;
    }
    static PbaOutcome undefined(NodePath blame, Projector<S> left, Projector<S> right) {
        PbaOutcome o;
        o.blame_ = std::move(blame);
        o.left_ = std::move(left);
        o.right_ = std::move(right);
        return o;
    }

    bool is_defined() const { return value_.has_value(); }

    const Projector<S>& value() const {
        require(is_defined(), "value() on an Undefined outcome");
        return *value_;
    }
    const NodePath& blame() const {
        require(!is_defined(), "blame() on a Defined outcome");
        return blame_;
    }
    const Projector<S>& left_value() const {
        require(!is_defined(), "left_value() on a Defined outcome");
        return *left_;
    }
    const Projector<S>& right_value() const {
        require(!is_defined(), "right_value() on a Defined outcome");
        return *right_;
    }

  private:
    PbaOutcome() = default;
    static void require(bool ok, const char* what) {
        if (!ok) throw error(what);
    }

    std::optional<Projector<S>> value_;
    NodePath blame_;
    std::optional<Projector<S>> left_;
    std::optional<Projector<S>> right_;
};

namespace detail {

template <class S>
PbaOutcome<S> eval_pba_rec(const Formula& f, const ProjValuation<S>& v, NodePath& where) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return PbaOutcome<S>::defined(valuation_at(v, f.atom_index()));
        case Formula::Kind::Neg: {
            where.push_back(PathStep::Child);
            PbaOutcome<S> c = eval_pba_rec(f.child(), v, where);
            where.pop_back();
            if (!c.is_defined()) return c;
            return PbaOutcome<S>::defined(c.value().complement());
        }
        default: {
            where.push_back(PathStep::Left);
            PbaOutcome<S> l = eval_pba_rec(f.left(), v, where);
            where.pop_back();
            if (!l.is_defined()) return l;
            where.push_back(PathStep::Right);
            PbaOutcome<S> r = eval_pba_rec(f.right(), v, where);
            where.pop_back();
            if (!r.is_defined()) return r;
            if (!commutes(l.value(), r.value()))
                return PbaOutcome<S>::undefined(where, l.value(), r.value());
            Matrix<S> prod = l.value().matrix() * r.value().matrix();
            // Children commute, so both clause matrices are projectors.
            if (f.kind() == Formula::Kind::And)
                return PbaOutcome<S>::defined(Projector<S>::trusted(std::move(prod)));
            return PbaOutcome<S>::defined(
                Projector<S>::trusted(l.value().matrix() + r.value().matrix() - prod));
        }
    }
}

}  // namespace detail

/// Partial-Boolean evaluation on the parse tree: the same clauses as the
/// commuting semantics, but each binary node is defined only when its two
/// already-computed child values commute. Undefinedness is a result, not
/// an error.
template <class S>
PbaOutcome<S> eval_pba(const Formula& f, const ProjValuation<S>& v) {
    valuation_dimension(v);
    NodePath where;
    return detail::eval_pba_rec(f, v, where);
}

/// Atomwise range. Glues the projector semantics to the subspace one.
template <class S>
StdValuation<S> pba_valuation_to_std(const ProjValuation<S>& v) {
    StdValuation<S> out;
    for (const auto& [atom, proj] : v) out.emplace(atom, range_of(proj));
    return out;
}

/// Atomwise projector onto the subspace. Inverse of the range direction.
template <class S>
ProjValuation<S> std_valuation_to_proj(const StdValuation<S>& u) {
    ProjValuation<S> out;
    for (const auto& [atom, sub] : u) out.emplace(atom, projector_of(sub));
    return out;
}

/// Satisfaction readings of the three value kinds: nonzero subspace,
/// nonzero projector, defined-and-nonzero outcome.
template <class S>
bool sat_verdict(const Subspace<S>& value) {
    return !value.is_zero();
}

template <class S>
bool sat_verdict(const Projector<S>& value) {
    return !value.is_zero();
}

template <class S>
bool sat_verdict(const PbaOutcome<S>& outcome) {
    return outcome.is_defined() && !outcome.value().is_zero();
}

}  // namespace qlsat
