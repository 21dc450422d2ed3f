#pragma once

#include <utility>
#include <vector>

#include "qlsat/matrix.hpp"

namespace qlsat {

/// Linear subspace of F^d in canonical form: the basis vectors, read as
/// the rows of an r x d matrix, are the nonzero rows of a reduced
/// row-echelon form. That form is unique per subspace, so equality of
/// subspaces is entry-identity of the stored bases. The zero subspace
/// keeps a d x 0 basis.
template <class S>
class Subspace {
  public:
    /// Span of the columns of `vectors` (d x k, k arbitrary).
    static Subspace span_columns(const Matrix<S>& vectors) {
        return Subspace(canonical_basis(vectors), vectors.rows());
    }

    static Subspace zero(int dim_ambient) { return Subspace(Matrix<S>(dim_ambient, 0), dim_ambient); }

    static Subspace full(int dim_ambient) {
        return Subspace(Matrix<S>::identity(dim_ambient), dim_ambient);
    }

    int ambient() const { return ambient_; }
    int rank() const { return basis_.cols(); }
    bool is_zero() const { return rank() == 0; }
    bool is_full() const { return rank() == ambient_; }

    /// Canonical basis, one vector per column (d x rank).
    const Matrix<S>& basis() const { return basis_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

  private:
    Subspace(Matrix<S> basis, int ambient) : basis_(std::move(basis)), ambient_(ambient) {}

    // Unique representative: RREF the spanning vectors as rows, keep the
    // nonzero rows, store them back as columns.
    static Matrix<S> canonical_basis(const Matrix<S>& vectors) {
        int d = vectors.rows();
        Matrix<S> rows(vectors.cols(), d);
        for (int i = 0; i < vectors.cols(); ++i)
            for (int j = 0; j < d; ++j) rows.at(i, j) = vectors.at(j, i);
        RrefResult<S> r = rref(std::move(rows));
        Matrix<S> basis(d, r.rank());
        for (int c = 0; c < r.rank(); ++c)
            for (int j = 0; j < d; ++j) basis.at(j, c) = r.mat.at(c, j);
        return basis;
    }

    Matrix<S> basis_;
    int ambient_ = 0;
};

namespace detail {
template <class S>
void require_same_ambient(const Subspace<S>& a, const Subspace<S>& b, const char* op) {
    if (a.ambient() != b.ambient())
        throw dimension_mismatch(std::string(op) + ": ambient dimensions disagree");
}
}  // namespace detail

/// A + B, the lattice join: span of the united bases.
template <class S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
    detail::require_same_ambient(a, b, "subspace_sum");
    return Subspace<S>::span_columns(Matrix<S>::hconcat(a.basis(), b.basis()));
}

/// A ∩ B, the lattice meet. Any intersection vector is B_a x = B_b y;
/// the pairs (x, y) form the kernel of [B_a | -B_b], so pushing the x
/// parts through B_a spans exactly the intersection.
template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& a, const Subspace<S>& b) {
    detail::require_same_ambient(a, b, "subspace_intersect");
    if (a.is_zero() || b.is_zero()) return Subspace<S>::zero(a.ambient());
    Matrix<S> neg_b = Matrix<S>(a.ambient(), b.rank()) - b.basis();
    Matrix<S> k = kernel(Matrix<S>::hconcat(a.basis(), neg_b));
    Matrix<S> xs(a.rank(), k.cols());
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < k.cols(); ++j) xs.at(i, j) = k.at(i, j);
    return Subspace<S>::span_columns(a.basis() * xs);
}

/// A⊥ with respect to the standard inner product (conjugate-linear in the
/// first argument): the kernel of B*.
template <class S>
Subspace<S> orthocomplement(const Subspace<S>& a) {
    return Subspace<S>::span_columns(kernel(a.basis().conj_transpose()));
}

}  // namespace qlsat
