#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qlsat/projector.hpp"
#include "qlsat/scalar.hpp"
#include "qlsat/semantics.hpp"

namespace qlsat {

/// One splitmix64 step. Used to derive independent per-trial substreams
/// from (seed, index) without consuming the main stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seedable portable randomness: mt19937_64 is pinned by the standard,
/// and range reduction uses rejection sampling instead of
/// std::uniform_int_distribution, whose output is implementation-defined.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    /// Independent stream for trial `index` under a run-level seed.
    static RandomSource substream(std::uint64_t seed, std::uint64_t index) {
        return RandomSource(splitmix64(splitmix64(seed) ^ index));
    }

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, n). n = 0 is a caller bug.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw error("below(0) requested");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    int range(int lo, int hi) {  // inclusive ends
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1) != 0; }

    /// Canonical rational with numerator in [-max_num, max_num] and
    /// denominator in [1, max_den].
    Rational rational(int max_num, int max_den) {
        Rational r(range(-max_num, max_num), range(1, max_den));
        r.canonicalize();
        return r;
    }

  private:
    std::mt19937_64 eng_;
};

template <class S>
S random_scalar(RandomSource& rs, int max_num, int max_den);

template <>
inline Rational random_scalar<Rational>(RandomSource& rs, int max_num, int max_den) {
    return rs.rational(max_num, max_den);
}

template <>
inline Gaussian random_scalar<Gaussian>(RandomSource& rs, int max_num, int max_den) {
    return {rs.rational(max_num, max_den), rs.rational(max_num, max_den)};
}

template <class S>
Matrix<S> random_matrix(RandomSource& rs, int rows, int cols, int max_num = 3, int max_den = 3) {
    Matrix<S> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar<S>(rs, max_num, max_den);
    return m;
}

namespace detail {

template <class S>
S column_dot(const Matrix<S>& m, int a, int b) {
    S acc(0);
    for (int i = 0; i < m.rows(); ++i) acc += field_traits<S>::conj(m.at(i, a)) * m.at(i, b);
    return acc;
}

}  // namespace detail

/// Exact Gram-Schmidt without normalization (unit lengths would need
/// square roots, which the fields lack). Returns pairwise-orthogonal
/// columns spanning the same space, or a d x 0 matrix on dependent input.
template <class S>
Matrix<S> orthogonalize_columns(Matrix<S> m) {
    for (int k = 0; k < m.cols(); ++k) {
        for (int p = 0; p < k; ++p) {
            S coeff = detail::column_dot(m, p, k) / detail::column_dot(m, p, p);
            for (int i = 0; i < m.rows(); ++i) m.at(i, k) -= coeff * m.at(i, p);
        }
        if (is_zero(detail::column_dot(m, k, k))) return Matrix<S>(m.rows(), 0);
    }
    return m;
}

/// d pairwise-orthogonal columns spanning F^d, with small rational
/// coordinates. Retries until the random sample is a basis (dependence
/// has tiny probability at these sizes).
template <class S>
Matrix<S> random_orthogonal_basis(RandomSource& rs, int d) {
    for (;;) {
        Matrix<S> b = orthogonalize_columns(random_matrix<S>(rs, d, d));
        if (b.cols() == d) return b;
    }
}

/// Uniform-rank random subspace: span of k random columns, k uniform in
/// [0, d]. Canonicalization absorbs dependent picks into a lower rank.
template <class S>
Subspace<S> random_subspace(RandomSource& rs, int d) {
    int k = rs.range(0, d);
    return Subspace<S>::span_columns(random_matrix<S>(rs, d, k));
}

template <class S>
Projector<S> random_projector(RandomSource& rs, int d) {
    return projector_of(random_subspace<S>(rs, d));
}

/// Valuation on `atom_list` from one shared orthogonal eigenbasis: each
/// atom projects onto the span of a random subset of the basis columns,
/// so all values pairwise commute by construction.
template <class S>
ProjValuation<S> random_commuting_valuation(RandomSource& rs, int d,
                                            const std::vector<int>& atom_list) {
    Matrix<S> basis = random_orthogonal_basis<S>(rs, d);
    ProjValuation<S> v;
    for (int a : atom_list) {
        std::vector<int> keep;
        for (int i = 0; i < d; ++i)
            if (rs.coin()) keep.push_back(i);
        v.emplace(a, projector_of(Subspace<S>::span_columns(basis.select_columns(keep))));
    }
    return v;
}

/// Valuation whose atoms are partitioned into blocks, each block diagonal
/// in its own random orthogonal basis. Within a block values commute;
/// across blocks they usually do not.
template <class S>
ProjValuation<S> random_block_valuation(RandomSource& rs, int d, const std::vector<int>& atom_list,
                                        int num_blocks) {
    if (num_blocks < 1) throw error("random_block_valuation needs at least one block");
    std::vector<Matrix<S>> bases;
    bases.reserve(static_cast<std::size_t>(num_blocks));
    for (int b = 0; b < num_blocks; ++b) bases.push_back(random_orthogonal_basis<S>(rs, d));
    ProjValuation<S> v;
    for (int a : atom_list) {
        const Matrix<S>& basis = bases[rs.below(static_cast<std::uint64_t>(num_blocks))];
        std::vector<int> keep;
        for (int i = 0; i < d; ++i)
            if (rs.coin()) keep.push_back(i);
        v.emplace(a, projector_of(Subspace<S>::span_columns(basis.select_columns(keep))));
    }
    return v;
}

}  // namespace qlsat
