#pragma once

#include <utility>

#include "qlsat/matrix.hpp"
#include "qlsat/subspace.hpp"

namespace qlsat {

/// Orthogonal projector: a square matrix that is exactly self-adjoint and
/// idempotent. Construction always validates, so holding a Projector is
/// holding the proof.
template <class S>
class Projector {
  public:
    static Projector from_matrix(Matrix<S> m) {
        if (!m.is_square()) throw projector_invariant_error("projector matrix is not square");
        if (!(m.conj_transpose() == m))
            throw projector_invariant_error("projector matrix is not self-adjoint");
        if (!(m * m == m)) throw projector_invariant_error("projector matrix is not idempotent");
        return Projector(std::move(m));
    }

    static Projector zero(int dim) { return Projector(Matrix<S>(dim, dim)); }
    static Projector identity(int dim) { return Projector(Matrix<S>::identity(dim)); }

    /// Wrap without re-validating. Only for callers that hold a proof the
    /// matrix is a projector (e.g. products of commuting projectors).
    static Projector trusted(Matrix<S> m) { return Projector(std::move(m)); }

    int dim() const { return m_.rows(); }
    bool is_zero() const { return m_.is_zero(); }
    const Matrix<S>& matrix() const { return m_; }

    /// I - P, the projector onto the orthocomplement of the range.
    Projector complement() const { return Projector(Matrix<S>::identity(dim()) - m_); }

    friend bool operator==(const Projector& a, const Projector& b) { return a.m_ == b.m_; }

  private:
    explicit Projector(Matrix<S> m) : m_(std::move(m)) {}

    Matrix<S> m_;
};

/// The unique orthogonal projector with range A: P = B (B*B)^(-1) B* on
/// any basis B. B*B is invertible whenever the columns are independent
/// (x*B*Bx is the squared norm of Bx), so the formula is total.
template <class S>
Projector<S> projector_of(const Subspace<S>& a) {
    if (a.is_zero()) return Projector<S>::zero(a.ambient());
    const Matrix<S>& b = a.basis();
    Matrix<S> bstar = b.conj_transpose();
    Matrix<S> gram_inv = inverse(bstar * b);
    return Projector<S>::from_matrix(b * gram_inv * bstar);
}

/// Column space of P in canonical form. Inverse of projector_of.
template <class S>
Subspace<S> range_of(const Projector<S>& p) {
    return Subspace<S>::span_columns(p.matrix());
}

/// Exact commutation test PQ = QP.
template <class S>
bool commutes(const Projector<S>& p, const Projector<S>& q) {
    if (p.dim() != q.dim()) throw dimension_mismatch("commutes: projector dimensions disagree");
    return p.matrix() * q.matrix() == q.matrix() * p.matrix();
}

}  // namespace qlsat
