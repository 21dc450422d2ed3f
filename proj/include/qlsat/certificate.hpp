#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlsat/matrix.hpp"
#include "qlsat/scalar.hpp"
#include "qlsat/semantics.hpp"

namespace qlsat {

// A certificate is a self-contained text document: formula, semantics
// tag, field tag, dimension, the full valuation, the claimed verdict
// and optionally the claimed value. Verification needs nothing beyond
// the file. No floating point appears anywhere; every scalar uses the
// exact text encodings from the scalar layer.
//
// Layout (one keyword per line, matrix entries row-major below their
// header, one row per line; a block with zero columns has no entry
// lines at all):
//
//   qlsat-certificate 1
//   formula (p0 & (p1 | p2)) & ~((p0 & p1) | (p0 & p2))
//   semantics STD
//   field RAT
//   dim 2
//   verdict SAT
//   atoms 3
//   atom 0 2 1
//   1
//   1
//   ...
//   value 2 1
//   1
//   1
//
// STD atom blocks are basis matrices (dim rows, rank columns); COM and
// PBA atom blocks are projector matrices (dim x dim). A PBA UNDEFINED
// certificate may carry "blame <path>" after the verdict and the two
// computed child values that fail to commute as "left"/"right" blocks.
//
// The serializer is canonical, so serialize -> parse -> serialize is
// byte-identical. The parser accepts extra whitespace between entry
// tokens but keeps keyword parsing line-based.

inline constexpr int kCertificateVersion = 1;

enum class CertVerdict { Sat, Unsat, Undefined };

inline std::string to_string(CertVerdict v) {
    switch (v) {
        case CertVerdict::Sat: return "SAT";
        case CertVerdict::Unsat: return "UNSAT";
        default: return "UNDEFINED";
    }
}

inline CertVerdict cert_verdict_from_string(const std::string& text) {
    if (text == "SAT") return CertVerdict::Sat;
    if (text == "UNSAT") return CertVerdict::Unsat;
    if (text == "UNDEFINED") return CertVerdict::Undefined;
    throw certificate_error("unknown verdict \"" + text + "\", expected SAT, UNSAT or UNDEFINED");
}

template <class S>
struct Certificate {
    Formula formula = Formula::atom(0);
    Semantics semantics = Semantics::Std;
    int dimension = 1;
    CertVerdict verdict = CertVerdict::Unsat;

    // Raw blocks; interpretation (basis vs projector) follows the
    // semantics tag. Invariants are checked by verify_certificate, not
    // here, so a corrupted file can be loaded and then failed cleanly.
    std::map<int, Matrix<S>> atom_blocks;
    std::optional<Matrix<S>> value_block;

    // PBA undefinedness evidence.
    std::optional<NodePath> blame;
    std::optional<Matrix<S>> left_block;
    std::optional<Matrix<S>> right_block;
};

namespace detail {

template <class S>
void append_matrix_block(std::string& out, const std::string& head, const Matrix<S>& m) {
    out += head + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        if (m.cols() == 0) continue;
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ' ';
            out += field_traits<S>::to_text(m.at(i, j));
        }
        out += '\n';
    }
}

}  // namespace detail

template <class S>
std::string serialize_certificate(const Certificate<S>& c) {
    std::string out;
    out += "qlsat-certificate " + std::to_string(kCertificateVersion) + "\n";
    out += "formula " + print(c.formula) + "\n";
    out += "semantics " + to_string(c.semantics) + "\n";
    out += "field " + std::string(to_string(field_traits<S>::tag)) + "\n";
    out += "dim " + std::to_string(c.dimension) + "\n";
    out += "verdict " + to_string(c.verdict) + "\n";
    if (c.blame) out += "blame " + path_to_text(*c.blame) + "\n";
    out += "atoms " + std::to_string(c.atom_blocks.size()) + "\n";
    for (const auto& [index, block] : c.atom_blocks)
        detail::append_matrix_block(out, "atom " + std::to_string(index), block);
    if (c.value_block) detail::append_matrix_block(out, "value", *c.value_block);
    if (c.left_block) detail::append_matrix_block(out, "left", *c.left_block);
    if (c.right_block) detail::append_matrix_block(out, "right", *c.right_block);
    return out;
}

namespace detail {

// Line-oriented reader with a token queue for matrix entries. Keyword
// lines may only be taken when the queue is drained, so entry counts
// that disagree with the block header are caught at the next keyword.
class CertReader {
  public:
    explicit CertReader(std::string_view text) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) {
                if (pos < text.size()) lines_.emplace_back(text.substr(pos));
                break;
            }
            lines_.emplace_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
    }

    bool at_end() {
        skip_blank();
        return tokens_.empty() && line_ >= lines_.size();
    }

    // Next non-blank line, split on spaces. Fails if matrix tokens are
    // still pending, which keeps blocks and keywords on separate lines.
    std::vector<std::string> keyword_line() {
        if (!tokens_.empty())
            throw certificate_error("line " + std::to_string(line_) +
                                    ": matrix block has more entries than its header declares");
        skip_blank();
        if (line_ >= lines_.size()) throw certificate_error("unexpected end of certificate");
        return split(lines_[line_++]);
    }

    // The raw text of the next non-blank line (formula text keeps its
    // internal spaces).
    std::string raw_line() {
        if (!tokens_.empty())
            throw certificate_error("line " + std::to_string(line_) +
                                    ": matrix block has more entries than its header declares");
        skip_blank();
        if (line_ >= lines_.size()) throw certificate_error("unexpected end of certificate");
        return lines_[line_++];
    }

    std::string next_token() {
        while (tokens_.empty()) {
            skip_blank();
            if (line_ >= lines_.size())
                throw certificate_error("unexpected end of certificate inside a matrix block");
            tokens_ = split(lines_[line_++]);
        }
        std::string t = std::move(tokens_.front());
        tokens_.erase(tokens_.begin());
        return t;
    }

  private:
    void skip_blank() {
        while (tokens_.empty() && line_ < lines_.size() && split(lines_[line_]).empty()) ++line_;
    }

    static std::vector<std::string> split(const std::string& line) {
        std::vector<std::string> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) out.push_back(line.substr(start, i - start));
        }
        return out;
    }

    std::vector<std::string> lines_;
    std::size_t line_ = 0;
    std::vector<std::string> tokens_;
};

inline int parse_nonneg_int(const std::string& tok, const char* what) {
    if (tok.empty() || tok.size() > 9) throw certificate_error(std::string("bad ") + what + " \"" + tok + "\"");
    int value = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9')
            throw certificate_error(std::string("bad ") + what + " \"" + tok + "\"");
        value = value * 10 + (ch - '0');
    }
    return value;
}

template <class S>
Matrix<S> read_matrix_block(CertReader& r, int rows, int cols) {
    Matrix<S> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::string tok = r.next_token();
            try {
                m.at(i, j) = field_traits<S>::from_text(tok);
            } catch (const error&) {
                throw certificate_error("bad scalar \"" + tok + "\" in matrix block");
            }
        }
    return m;
}

}  // namespace detail

// Field tag of a certificate document, read without committing to a
// scalar type. Lets a caller dispatch to parse_certificate<Rational>
// or parse_certificate<Gaussian>.
inline FieldTag certificate_field(std::string_view text) {
    detail::CertReader r(text);
    while (!r.at_end()) {
        std::vector<std::string> words = r.keyword_line();
        if (!words.empty() && words[0] == "field") {
            if (words.size() != 2) throw certificate_error("malformed field line");
            return field_from_string(words[1]);
        }
    }
    throw certificate_error("certificate has no field line");
}

template <class S>
Certificate<S> parse_certificate(std::string_view text) {
    detail::CertReader r(text);

    std::vector<std::string> head = r.keyword_line();
    if (head.size() != 2 || head[0] != "qlsat-certificate")
        throw certificate_error("missing \"qlsat-certificate <version>\" header");
    if (head[1] != std::to_string(kCertificateVersion))
        throw certificate_error("unsupported certificate version \"" + head[1] + "\"");

    Certificate<S> c;

    std::string formula_line = r.raw_line();
    if (formula_line.rfind("formula ", 0) != 0)
        throw certificate_error("expected \"formula <text>\" after the header");
    try {
        c.formula = parse(formula_line.substr(8));
    } catch (const parse_error& e) {
        throw certificate_error(std::string("formula does not parse: ") + e.what());
    }

    auto expect_pair = [&](const char* keyword) {
        std::vector<std::string> words = r.keyword_line();
        if (words.size() != 2 || words[0] != keyword)
            throw certificate_error(std::string("expected \"") + keyword + " <value>\" line");
        return words[1];
    };

    try {
        c.semantics = semantics_from_string(expect_pair("semantics"));
    } catch (const certificate_error&) {
        throw;
    } catch (const error& e) {
        throw certificate_error(e.what());
    }

    FieldTag declared = field_from_string(expect_pair("field"));
    if (declared != field_traits<S>::tag)
        throw field_mismatch("certificate declares field " + std::string(to_string(declared)) +
                             ", parser instantiated for " + to_string(field_traits<S>::tag));

    c.dimension = detail::parse_nonneg_int(expect_pair("dim"), "dimension");
    if (c.dimension < 1) throw certificate_error("dim must be at least 1");

    c.verdict = cert_verdict_from_string(expect_pair("verdict"));

    std::vector<std::string> words = r.keyword_line();
    if (!words.empty() && words[0] == "blame") {
        if (c.semantics != Semantics::Pba)
            throw certificate_error("blame is only meaningful under PBA");
        if (words.size() != 2) throw certificate_error("malformed blame line");
        try {
            c.blame = path_from_text(words[1]);
        } catch (const error& e) {
            throw certificate_error(std::string("bad blame path: ") + e.what());
        }
        words = r.keyword_line();
    }

    if (words.size() != 2 || words[0] != "atoms")
        throw certificate_error("expected \"atoms <count>\" line");
    int atom_count = detail::parse_nonneg_int(words[1], "atom count");

    for (int k = 0; k < atom_count; ++k) {
        std::vector<std::string> h = r.keyword_line();
        if (h.size() != 4 || h[0] != "atom")
            throw certificate_error("expected \"atom <index> <rows> <cols>\" block header");
        int index = detail::parse_nonneg_int(h[1], "atom index");
        int rows = detail::parse_nonneg_int(h[2], "row count");
        int cols = detail::parse_nonneg_int(h[3], "column count");
        if (c.atom_blocks.count(index))
            throw certificate_error("duplicate block for atom p" + std::to_string(index));
        c.atom_blocks.emplace(index, detail::read_matrix_block<S>(r, rows, cols));
    }

    auto read_optional_block = [&](const char* keyword, std::optional<Matrix<S>>& slot,
                                   std::vector<std::string>& h) {
        if (h.empty() || h[0] != keyword) return false;
        if (slot)
            throw certificate_error(std::string("duplicate ") + keyword + " block");
        if (h.size() != 3)
            throw certificate_error(std::string("expected \"") + keyword + " <rows> <cols>\"");
        int rows = detail::parse_nonneg_int(h[1], "row count");
        int cols = detail::parse_nonneg_int(h[2], "column count");
        slot = detail::read_matrix_block<S>(r, rows, cols);
        return true;
    };

    while (!r.at_end()) {
        std::vector<std::string> h = r.keyword_line();
        if (read_optional_block("value", c.value_block, h)) continue;
        if (read_optional_block("left", c.left_block, h)) continue;
        if (read_optional_block("right", c.right_block, h)) continue;
        throw certificate_error("unexpected line starting with \"" + (h.empty() ? "" : h[0]) +
                                "\" after the atom blocks");
    }

    if ((c.left_block || c.right_block) && c.semantics != Semantics::Pba)
        throw certificate_error("left/right evidence blocks are only meaningful under PBA");
    if (c.left_block.has_value() != c.right_block.has_value())
        throw certificate_error("left and right evidence blocks must appear together");

    return c;
}

// A bare valuation document: the same block syntax as a certificate,
// without formula or claims. Used by the eval command so a valuation
// can be written by hand:
//
//   qlsat-valuation 1
//   field RAT
//   dim 2
//   encoding basis
//   atoms 1
//   atom 0 2 1
//   1
//   0
//
// "encoding basis" blocks are subspace bases (dim rows, rank columns);
// "encoding matrix" blocks are projector matrices (dim x dim). Either
// encoding can serve either semantics; the conversions are exact.

enum class BlockEncoding { Basis, ProjectorMatrix };

inline std::string to_string(BlockEncoding e) {
    return e == BlockEncoding::Basis ? "basis" : "matrix";
}

inline BlockEncoding block_encoding_from_string(const std::string& text) {
    if (text == "basis") return BlockEncoding::Basis;
    if (text == "matrix") return BlockEncoding::ProjectorMatrix;
    throw certificate_error("unknown encoding \"" + text + "\", expected basis or matrix");
}

template <class S>
struct ValuationDoc {
    int dimension = 1;
    BlockEncoding encoding = BlockEncoding::Basis;
    std::map<int, Matrix<S>> atom_blocks;
};

template <class S>
std::string serialize_valuation(const ValuationDoc<S>& doc) {
    std::string out;
    out += "qlsat-valuation " + std::to_string(kCertificateVersion) + "\n";
    out += "field " + std::string(to_string(field_traits<S>::tag)) + "\n";
    out += "dim " + std::to_string(doc.dimension) + "\n";
    out += "encoding " + to_string(doc.encoding) + "\n";
    out += "atoms " + std::to_string(doc.atom_blocks.size()) + "\n";
    for (const auto& [index, block] : doc.atom_blocks)
        detail::append_matrix_block(out, "atom " + std::to_string(index), block);
    return out;
}

template <class S>
ValuationDoc<S> parse_valuation(std::string_view text) {
    detail::CertReader r(text);

    std::vector<std::string> head = r.keyword_line();
    if (head.size() != 2 || head[0] != "qlsat-valuation")
        throw certificate_error("missing \"qlsat-valuation <version>\" header");
    if (head[1] != std::to_string(kCertificateVersion))
        throw certificate_error("unsupported valuation version \"" + head[1] + "\"");

    ValuationDoc<S> doc;
    auto expect_pair = [&](const char* keyword) {
        std::vector<std::string> words = r.keyword_line();
        if (words.size() != 2 || words[0] != keyword)
            throw certificate_error(std::string("expected \"") + keyword + " <value>\" line");
        return words[1];
    };

    FieldTag declared = field_from_string(expect_pair("field"));
    if (declared != field_traits<S>::tag)
        throw field_mismatch("valuation declares field " + std::string(to_string(declared)) +
                             ", parser instantiated for " + to_string(field_traits<S>::tag));

    doc.dimension = detail::parse_nonneg_int(expect_pair("dim"), "dimension");
    if (doc.dimension < 1) throw certificate_error("dim must be at least 1");
    doc.encoding = block_encoding_from_string(expect_pair("encoding"));

    std::vector<std::string> words = r.keyword_line();
    if (words.size() != 2 || words[0] != "atoms")
        throw certificate_error("expected \"atoms <count>\" line");
    int atom_count = detail::parse_nonneg_int(words[1], "atom count");

    for (int k = 0; k < atom_count; ++k) {
        std::vector<std::string> h = r.keyword_line();
        if (h.size() != 4 || h[0] != "atom")
            throw certificate_error("expected \"atom <index> <rows> <cols>\" block header");
        int index = detail::parse_nonneg_int(h[1], "atom index");
        int rows = detail::parse_nonneg_int(h[2], "row count");
        int cols = detail::parse_nonneg_int(h[3], "column count");
        if (doc.atom_blocks.count(index))
            throw certificate_error("duplicate block for atom p" + std::to_string(index));
        doc.atom_blocks.emplace(index, detail::read_matrix_block<S>(r, rows, cols));
    }

    if (!r.at_end()) throw certificate_error("unexpected content after the atom blocks");
    return doc;
}

// First keyword of the document, to dispatch between the two formats.
inline bool is_certificate_document(std::string_view text) {
    detail::CertReader r(text);
    if (r.at_end()) throw certificate_error("empty document");
    std::vector<std::string> head = r.keyword_line();
    if (!head.empty() && head[0] == "qlsat-certificate") return true;
    if (!head.empty() && head[0] == "qlsat-valuation") return false;
    throw certificate_error("not a qlsat document (unknown header)");
}

// Materialize raw blocks into typed valuations. Both encodings convert
// exactly in both directions: a basis spans a subspace whose projector
// is rational in the basis entries, and a projector matrix carries its
// range. Shape errors throw; a matrix block that is not a projector
// throws projector_invariant_error.

template <class S>
StdValuation<S> as_std_valuation(int dim, BlockEncoding encoding,
                                 const std::map<int, Matrix<S>>& blocks) {
    StdValuation<S> v;
    for (const auto& [index, block] : blocks) {
        if (block.rows() != dim)
            throw dimension_mismatch("atom p" + std::to_string(index) + " block has " +
                                     std::to_string(block.rows()) + " rows, expected " +
                                     std::to_string(dim));
        if (encoding == BlockEncoding::Basis)
            v.emplace(index, Subspace<S>::span_columns(block));
        else
            v.emplace(index, range_of(Projector<S>::from_matrix(block)));
    }
    return v;
}

template <class S>
ProjValuation<S> as_proj_valuation(int dim, BlockEncoding encoding,
                                   const std::map<int, Matrix<S>>& blocks) {
    ProjValuation<S> v;
    for (const auto& [index, block] : blocks) {
        if (block.rows() != dim || (encoding == BlockEncoding::ProjectorMatrix &&
                                    block.cols() != dim))
            throw dimension_mismatch("atom p" + std::to_string(index) + " block is " +
                                     std::to_string(block.rows()) + "x" +
                                     std::to_string(block.cols()) + ", expected dim " +
                                     std::to_string(dim));
        if (encoding == BlockEncoding::Basis)
            v.emplace(index, projector_of(Subspace<S>::span_columns(block)));
        else
            v.emplace(index, Projector<S>::from_matrix(block));
    }
    return v;
}

struct VerifyReport {
    bool pass = false;
    std::string detail;  // "ok", or the first violated invariant
};

namespace detail {

template <class S>
void require_block_shape(const Certificate<S>& c, const Matrix<S>& m, const std::string& which,
                         bool square) {
    if (m.rows() != c.dimension || (square && m.cols() != c.dimension))
        throw dimension_mismatch(which + " block is " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()) + ", certificate declares dim " +
                                 std::to_string(c.dimension));
}

}  // namespace detail

// Recomputes everything the certificate claims and names the first
// violated invariant. Structural problems (missing atoms, blocks whose
// shape contradicts the declared dimension) throw instead of failing:
// they make the claims unreadable rather than false.
template <class S>
VerifyReport verify_certificate(const Certificate<S>& c) {
    auto fail = [](std::string why) { return VerifyReport{false, std::move(why)}; };

    for (int atom : atoms(c.formula))
        if (!c.atom_blocks.count(atom))
            throw missing_atom_error(atom,
                                     "certificate has no block for p" + std::to_string(atom));

    bool square = c.semantics != Semantics::Std;
    for (const auto& [index, block] : c.atom_blocks)
        detail::require_block_shape(c, block, "atom p" + std::to_string(index), square);
    if (c.value_block) detail::require_block_shape(c, *c.value_block, "value", square);
    if (c.left_block) detail::require_block_shape(c, *c.left_block, "left", true);
    if (c.right_block) detail::require_block_shape(c, *c.right_block, "right", true);

    if (c.semantics == Semantics::Std) {
        StdValuation<S> v;
        for (const auto& [index, block] : c.atom_blocks) {
            Subspace<S> sub = Subspace<S>::span_columns(block);
            if (sub.rank() != block.cols())
                return fail("basis columns dependent at atom p" + std::to_string(index));
            v.emplace(index, sub);
        }
        Subspace<S> value = eval_std(c.formula, v, c.dimension);
        if (c.value_block && Subspace<S>::span_columns(*c.value_block) != value)
            return fail("value mismatch");
        CertVerdict computed = sat_verdict(value) ? CertVerdict::Sat : CertVerdict::Unsat;
        if (computed != c.verdict) return fail("verdict mismatch");
        return {true, "ok"};
    }

    ProjValuation<S> v;
    for (const auto& [index, block] : c.atom_blocks) {
        try {
            v.emplace(index, Projector<S>::from_matrix(block));
        } catch (const projector_invariant_error&) {
            return fail("projector invariant violated at atom p" + std::to_string(index));
        }
    }

    if (c.semantics == Semantics::Com) {
        if (auto bad = first_noncommuting_pair(c.formula, v))
            return fail("atoms not admissible: p" + std::to_string(bad->first) + " and p" +
                        std::to_string(bad->second) + " do not commute");
        Projector<S> value = eval_com(c.formula, v);
        if (c.value_block && *c.value_block != value.matrix()) return fail("value mismatch");
        CertVerdict computed = sat_verdict(value) ? CertVerdict::Sat : CertVerdict::Unsat;
        if (computed != c.verdict) return fail("verdict mismatch");
        return {true, "ok"};
    }

    PbaOutcome<S> outcome = eval_pba(c.formula, v);
    if (outcome.is_defined()) {
        if (c.verdict == CertVerdict::Undefined || c.blame) return fail("verdict mismatch");
        if (c.left_block || c.right_block) return fail("evidence mismatch");
        if (c.value_block && *c.value_block != outcome.value().matrix())
            return fail("value mismatch");
        CertVerdict computed = sat_verdict(outcome) ? CertVerdict::Sat : CertVerdict::Unsat;
        if (computed != c.verdict) return fail("verdict mismatch");
    } else {
        if (c.verdict != CertVerdict::Undefined) return fail("verdict mismatch");
        if (c.blame && *c.blame != outcome.blame()) return fail("blame mismatch");
        if (c.value_block) return fail("value mismatch");
        if (c.left_block && !(*c.left_block == outcome.left_value().matrix()))
            return fail("evidence mismatch");
        if (c.right_block && !(*c.right_block == outcome.right_value().matrix()))
            return fail("evidence mismatch");
    }
    return {true, "ok"};
}

// Builders used by the decide command and the shipped golden files.
// They evaluate the formula under the witness, so the emitted claims
// are true by construction; verify_certificate stays the independent
// check.

template <class S>
Certificate<S> make_std_certificate(const Formula& f, int d, const StdValuation<S>& v,
                                    bool include_value = true) {
    Certificate<S> c;
    c.formula = f;
    c.semantics = Semantics::Std;
    c.dimension = d;
    for (const auto& [index, sub] : v) c.atom_blocks.emplace(index, sub.basis());
    Subspace<S> value = eval_std(f, v, d);
    if (include_value) c.value_block = value.basis();
    c.verdict = sat_verdict(value) ? CertVerdict::Sat : CertVerdict::Unsat;
    return c;
}

template <class S>
Certificate<S> make_com_certificate(const Formula& f, int d, const ProjValuation<S>& v,
                                    bool include_value = true) {
    Certificate<S> c;
    c.formula = f;
    c.semantics = Semantics::Com;
    c.dimension = d;
    for (const auto& [index, proj] : v) c.atom_blocks.emplace(index, proj.matrix());
    Projector<S> value = eval_com(f, v);
    if (include_value) c.value_block = value.matrix();
    c.verdict = sat_verdict(value) ? CertVerdict::Sat : CertVerdict::Unsat;
    return c;
}

template <class S>
Certificate<S> make_pba_certificate(const Formula& f, int d, const ProjValuation<S>& v,
                                    bool include_value = true) {
    Certificate<S> c;
    c.formula = f;
    c.semantics = Semantics::Pba;
    c.dimension = d;
    for (const auto& [index, proj] : v) c.atom_blocks.emplace(index, proj.matrix());
    PbaOutcome<S> outcome = eval_pba(f, v);
    if (outcome.is_defined()) {
        if (include_value) c.value_block = outcome.value().matrix();
        c.verdict = sat_verdict(outcome) ? CertVerdict::Sat : CertVerdict::Unsat;
    } else {
        c.verdict = CertVerdict::Undefined;
        c.blame = outcome.blame();
        c.left_block = outcome.left_value().matrix();
        c.right_block = outcome.right_value().matrix();
    }
    return c;
}

}  // namespace qlsat
