#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "qlsat/formula.hpp"

namespace qlsat {

/// Raw trees enumerate every parse tree once. SortedChildren additionally
/// drops trees with a binary node whose children are out of canonical
/// print order, quotienting by commutativity of & and | to shrink search
/// spaces. Raw trees are the default: the nodewise semantics is defined
/// on parse trees, so the quotient is only an explorer optimization.
enum class EnumMode { RawTrees, SortedChildren };

/// Deterministic enumeration of all formulas over atoms p0..p(A-1) with
/// at most C connectives. Order: by connective count, then negations,
/// then conjunctions, then disjunctions, children ordered recursively.
/// The raw-tree order is an indexable bijection: at() and rank() are
/// mutually inverse, so membership at large bounds is O(size of the
/// formula) instead of a full stream.
class FormulaEnumerator {
  public:
    FormulaEnumerator(int max_atoms, int max_connectives, EnumMode mode = EnumMode::RawTrees)
        : atoms_(max_atoms), conn_(max_connectives), mode_(mode) {
        if (max_atoms < 1) throw error("enumerate_formulas: max_atoms must be >= 1");
        if (max_connectives < 0) throw error("enumerate_formulas: max_connectives must be >= 0");
        counts_ = level_counts(max_atoms, max_connectives);
    }

    int max_atoms() const { return atoms_; }
    int max_connectives() const { return conn_; }
    EnumMode mode() const { return mode_; }

    /// Raw-tree formulas with exactly n connectives:
    ///   c(0) = A,  c(n) = c(n-1) + 2 * sum_{i+j=n-1} c(i) c(j).
    /// Throws if a count overflows 64 bits (far beyond desk scale).
    static std::vector<std::uint64_t> level_counts(int max_atoms, int max_connectives) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(max_connectives) + 1);
        c[0] = static_cast<std::uint64_t>(max_atoms);
        for (int n = 1; n <= max_connectives; ++n) {
            std::uint64_t total = c[n - 1];
            for (int i = 0; i < n; ++i) {
                std::uint64_t prod = checked_mul(c[i], c[n - 1 - i]);
                total = checked_add(total, checked_add(prod, prod));
            }
            c[n] = total;
        }
        return c;
    }

    /// Total number of raw trees within the bounds.
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (std::uint64_t c : counts_) t = checked_add(t, c);
        return t;
    }

    /// index -> formula in the raw-tree order.
    Formula at(std::uint64_t index) const {
        for (int n = 0; n <= conn_; ++n) {
            if (index < counts_[n]) return decode(n, index);
            index -= counts_[n];
        }
        throw error("enumeration index out of range");
    }

    /// formula -> index, or nullopt when the formula falls outside the
    /// bounds (too many connectives or an atom past p(A-1)).
    std::optional<std::uint64_t> rank(const Formula& f) const {
        int n = f.connective_count();
        if (n > conn_) return std::nullopt;
        std::optional<std::uint64_t> in_level = encode(n, f);
        if (!in_level) return std::nullopt;
        std::uint64_t base = 0;
        for (int m = 0; m < n; ++m) base += counts_[m];
        return base + *in_level;
    }

    /// Stream interface (single consumer). Returns false when exhausted.
    /// In SortedChildren mode, trees violating the child order are
    /// skipped.
    bool next(Formula& out) {
        std::uint64_t t = total();
        while (cursor_ < t) {
            Formula f = at(cursor_++);
            if (mode_ == EnumMode::SortedChildren && !children_sorted(f)) continue;
            out = f;
            return true;
        }
        return false;
    }

    void reset() { cursor_ = 0; }

    /// Jump the stream cursor to a raw index. The next call to next()
    /// decodes from there, so a windowed scan over a large space does
    /// not pay for the formulas below the window.
    void seek(std::uint64_t index) { cursor_ = index; }

    std::uint64_t cursor() const { return cursor_; }

    static bool children_sorted(const Formula& f) {
        switch (f.kind()) {
            case Formula::Kind::Atom: return true;
            case Formula::Kind::Neg: return children_sorted(f.child());
            default:
                return print(f.left()) <= print(f.right()) && children_sorted(f.left()) &&
                       children_sorted(f.right());
        }
    }

  private:
    Formula decode(int n, std::uint64_t idx) const {
        if (n == 0) return Formula::atom(static_cast<int>(idx));
        if (idx < counts_[n - 1]) return Formula::neg(decode(n - 1, idx));
        idx -= counts_[n - 1];
        std::uint64_t binary_block = (counts_[n] - counts_[n - 1]) / 2;
        bool is_and = idx < binary_block;
        if (!is_and) idx -= binary_block;
        for (int i = 0; i < n; ++i) {
            int j = n - 1 - i;
            std::uint64_t block = counts_[i] * counts_[j];
            if (idx < block) {
                Formula l = decode(i, idx / counts_[j]);
                Formula r = decode(j, idx % counts_[j]);
                return is_and ? Formula::conj(std::move(l), std::move(r))
                              : Formula::disj(std::move(l), std::move(r));
            }
            idx -= block;
        }
        throw error("enumeration decode: index out of range");  // unreachable
    }

    std::optional<std::uint64_t> encode(int n, const Formula& f) const {
        switch (f.kind()) {
            case Formula::Kind::Atom: {
                int a = f.atom_index();
                if (a >= atoms_) return std::nullopt;
                return static_cast<std::uint64_t>(a);
            }
            case Formula::Kind::Neg: return encode(n - 1, f.child());
            default: {
                std::uint64_t off = counts_[n - 1];
                if (f.kind() == Formula::Kind::Or) off += (counts_[n] - counts_[n - 1]) / 2;
                int i = f.left().connective_count();
                int j = n - 1 - i;
                for (int k = 0; k < i; ++k) off += counts_[k] * counts_[n - 1 - k];
                auto l = encode(i, f.left());
                auto r = encode(j, f.right());
                if (!l || !r) return std::nullopt;
                return off + *l * counts_[j] + *r;
            }
        }
    }

    static std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
        if (a > std::numeric_limits<std::uint64_t>::max() - b)
            throw error("enumeration bounds too large");
        return a + b;
    }
    static std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
        if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
            throw error("enumeration bounds too large");
        return a * b;
    }

    int atoms_;
    int conn_;
    EnumMode mode_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t cursor_ = 0;
};

}  // namespace qlsat
