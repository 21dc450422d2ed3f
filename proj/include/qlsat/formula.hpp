#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qlsat/errors.hpp"

namespace qlsat {

constexpr int kMaxAtomIndex = 2147483647;  // 2^31 - 1

enum class PathStep : uint8_t { Left, Right, Child };

/// Address of a subformula: the list of steps from the root. Empty path
/// is the root itself.
using NodePath = std::vector<PathStep>;

inline char to_char(PathStep s) {
    switch (s) {
        case PathStep::Left: return 'L';
        case PathStep::Right: return 'R';
        default: return 'C';
    }
}

/// "L.C.R" with "-" for the empty (root) path.
inline std::string path_to_text(const NodePath& p) {
    if (p.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += to_char(p[i]);
    }
    return s;
}

inline NodePath path_from_text(std::string_view text) {
    NodePath p;
    if (text == "-") return p;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'L': p.push_back(PathStep::Left); break;
            case 'R': p.push_back(PathStep::Right); break;
            case 'C': p.push_back(PathStep::Child); break;
            case '.': continue;
            default: throw error("bad path character in \"" + std::string(text) + "\"");
        }
    }
    return p;
}

/// Immutable propositional formula over atoms p0, p1, ... with the
/// connectives ~, &, |. Value type with shared structure, cheap to copy.
class Formula {
  public:
    enum class Kind : uint8_t { Atom, Neg, And, Or };

    static Formula atom(int index) {
        if (index < 0 || index > kMaxAtomIndex) throw error("atom index out of range");
        return Formula(std::make_shared<const Node>(Node{Kind::Atom, index, nullptr, nullptr}));
    }
    static Formula neg(Formula f) {
        return Formula(std::make_shared<const Node>(Node{Kind::Neg, -1, std::move(f.n_), nullptr}));
    }
    static Formula conj(Formula l, Formula r) {
        return Formula(
            std::make_shared<const Node>(Node{Kind::And, -1, std::move(l.n_), std::move(r.n_)}));
    }
    static Formula disj(Formula l, Formula r) {
        return Formula(
            std::make_shared<const Node>(Node{Kind::Or, -1, std::move(l.n_), std::move(r.n_)}));
    }

    Kind kind() const { return n_->kind; }
    bool is_atom() const { return n_->kind == Kind::Atom; }
    bool is_binary() const { return n_->kind == Kind::And || n_->kind == Kind::Or; }

    int atom_index() const {
        if (!is_atom()) throw error("atom_index on a non-atom node");
        return n_->atom;
    }
    Formula child() const {
        if (n_->kind != Kind::Neg) throw error("child on a non-negation node");
        return Formula(n_->a);
    }
    Formula left() const {
        if (!is_binary()) throw error("left on a non-binary node");
        return Formula(n_->a);
    }
    Formula right() const {
        if (!is_binary()) throw error("right on a non-binary node");
        return Formula(n_->b);
    }

    /// Structural equality.
    friend bool operator==(const Formula& x, const Formula& y) { return equal(x.n_, y.n_); }

    int connective_count() const { return count(n_, false); }
    int node_count() const { return count(n_, true); }

  private:
    struct Node {
        Kind kind;
        int atom;
        std::shared_ptr<const Node> a, b;
    };

    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    static bool equal(const std::shared_ptr<const Node>& x, const std::shared_ptr<const Node>& y) {
        if (x == y) return true;
        if (x->kind != y->kind) return false;
        switch (x->kind) {
            case Kind::Atom: return x->atom == y->atom;
            case Kind::Neg: return equal(x->a, y->a);
            default: return equal(x->a, y->a) && equal(x->b, y->b);
        }
    }

    static int count(const std::shared_ptr<const Node>& n, bool include_atoms) {
        switch (n->kind) {
            case Kind::Atom: return include_atoms ? 1 : 0;
            case Kind::Neg: return 1 + count(n->a, include_atoms);
            default: return 1 + count(n->a, include_atoms) + count(n->b, include_atoms);
        }
    }

    std::shared_ptr<const Node> n_;
};

namespace detail {

inline void print_rec(const Formula& f, std::string& out, bool parenthesize_binary) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            out += 'p';
            out += std::to_string(f.atom_index());
            return;
        case Formula::Kind::Neg:
            out += '~';
            print_rec(f.child(), out, /*parenthesize_binary=*/true);
            return;
        default: {
            if (parenthesize_binary) out += '(';
            print_rec(f.left(), out, true);
            out += f.kind() == Formula::Kind::And ? " & " : " | ";
            print_rec(f.right(), out, true);
            if (parenthesize_binary) out += ')';
        }
    }
}

}  // namespace detail

/// Canonical text: every binary node below the root is parenthesized, so
/// the tree shape is visible verbatim; parse(print(f)) == f.
inline std::string print(const Formula& f) {
    std::string out;
    detail::print_rec(f, out, /*parenthesize_binary=*/false);
    return out;
}

/// Sorted distinct atom indices occurring in the formula.
inline std::vector<int> atoms(const Formula& f) {
    std::set<int> seen;
    // Explicit stack; enumeration feeds deep-ish trees through here.
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
        Formula g = stack.back();
        stack.pop_back();
        switch (g.kind()) {
            case Formula::Kind::Atom: seen.insert(g.atom_index()); break;
            case Formula::Kind::Neg: stack.push_back(g.child()); break;
            default:
                stack.push_back(g.left());
                stack.push_back(g.right());
        }
    }
    return {seen.begin(), seen.end()};
}

/// The subtree addressed by `path`, or invalid_path_error naming the
/// first step that does not exist.
inline Formula subformula_at(const Formula& f, const NodePath& path) {
    Formula cur = f;
    for (std::size_t i = 0; i < path.size(); ++i) {
        PathStep s = path[i];
        bool ok = (s == PathStep::Child) ? cur.kind() == Formula::Kind::Neg : cur.is_binary();
        if (!ok)
            throw invalid_path_error(
                i, std::string("path step ") + std::to_string(i) + " ('" + to_char(s) +
                       "') does not exist at this node");
        cur = (s == PathStep::Child) ? cur.child() : (s == PathStep::Left ? cur.left() : cur.right());
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Parser. Grammar (whitespace insignificant between tokens):
//   formula := or
//   or      := and { "|" and }
//   and     := unary { "&" unary }
//   unary   := "~" unary | "(" formula ")" | atom
//   atom    := "p" digits
// Precedence ~ > & > |, with & and | left-associative.
// ---------------------------------------------------------------------------

namespace detail {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula run() {
        Formula f = parse_or();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input, '&', or '|'");
        return f;
    }

  private:
    Formula parse_or() {
        Formula f = parse_and();
        while (peek() == '|') {
            ++pos_;
            f = Formula::disj(std::move(f), parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (peek() == '&') {
            ++pos_;
            f = Formula::conj(std::move(f), parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        char c = peek();
        if (c == '~') {
            ++pos_;
            return Formula::neg(parse_unary());
        }
        if (c == '(') {
            ++pos_;
            Formula f = parse_or();
            if (peek() != ')') fail("')'");
            ++pos_;
            return f;
        }
        if (c == 'p') {
            ++pos_;
            return parse_atom_index();
        }
        fail("'~', '(', or an atom 'pN'");
    }

    Formula parse_atom_index() {
        std::size_t start = pos_;
        long long v = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            v = v * 10 + (text_[pos_] - '0');
            if (v > kMaxAtomIndex) {
                pos_ = start;
                fail("atom index up to 2147483647");
            }
            ++pos_;
        }
        if (pos_ == start) fail("digits after 'p'");
        return Formula::atom(static_cast<int>(v));
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw parse_error(pos_, expected,
                          "syntax error at byte " + std::to_string(pos_) + ": expected " + expected);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse(std::string_view text) { return detail::Parser(text).run(); }

}  // namespace qlsat
