#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qlsat {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Formula text rejected by the parser. Carries the byte offset of the
/// failure and a description of what would have been accepted there.
struct parse_error : error {
    parse_error(std::size_t offset, std::string expected_tokens, const std::string& what)
        : error(what), offset(offset), expected(std::move(expected_tokens)) {}
    std::size_t offset;
    std::string expected;
};

/// A NodePath step that does not exist in the addressed formula.
struct invalid_path_error : error {
    invalid_path_error(std::size_t step_index, const std::string& what)
        : error(what), step_index(step_index) {}
    std::size_t step_index;
};

struct dimension_mismatch : error {
    using error::error;
};

struct field_mismatch : error {
    using error::error;
};

/// A formula atom has no entry in the valuation. Valuations are partial
/// maps; absent atoms are an error, never a default value.
struct missing_atom_error : error {
    missing_atom_error(int atom, const std::string& what) : error(what), atom(atom) {}
    int atom;
};

/// Valuation fails global commutativity for the formula under evaluation.
struct not_admissible_error : error {
    not_admissible_error(int atom_a, int atom_b, const std::string& what)
        : error(what), pair(atom_a, atom_b) {}
    std::pair<int, int> pair;
};

/// A matrix claimed to be a projector is not self-adjoint idempotent.
struct projector_invariant_error : error {
    using error::error;
};

struct certificate_error : error {
    using error::error;
};

/// A verified result contradicts an invariant the library itself
/// guarantees (e.g. a satisfiability chain violation). Always a bug.
struct internal_soundness_error : error {
    using error::error;
};

}  // namespace qlsat
