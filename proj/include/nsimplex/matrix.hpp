#ifndef NSIMPLEX_MATRIX_HPP
#define NSIMPLEX_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nsimplex {

/// Sparse integer matrix in coordinate form, entries sorted by (col, row).
struct SparseIntMatrix {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    struct Entry {
        std::int64_t row;
        std::int64_t col;
        std::int64_t value;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    /// Sorts by (col, row), merges duplicates, drops zeros.
    void normalize();
    bool is_zero() const { return entries.empty(); }
    std::uint64_t nnz() const { return entries.size(); }
    SparseIntMatrix transposed() const;
    bool is_zero_mod(std::int64_t p) const;

    /// Coordinate text format: "rows cols nnz" header, then "r c v" lines
    /// (0-based indices).
    std::string serialize_coord() const;
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// Rank over the rationals by fraction-free (Bareiss) elimination on exact
/// integers.
std::int64_t rank_fraction_free(const SparseIntMatrix& m);

/// Rank over the rationals by incremental echelon reduction with exact
/// rational pivoting. Independent of the fraction-free route.
std::int64_t rank_rational(const SparseIntMatrix& m);

/// Rank over the prime field F_p.
std::int64_t rank_mod_p(const SparseIntMatrix& m, std::int64_t p);

/// Basis of the right kernel of m over F_p, as dense column vectors.
std::vector<std::vector<std::int64_t>> kernel_basis_mod_p(const SparseIntMatrix& m,
                                                          std::int64_t p);

/// True iff v lies in the span of the given vectors over F_p.
bool in_span_mod_p(const std::vector<std::vector<std::int64_t>>& span,
                   const std::vector<std::int64_t>& v, std::int64_t p);

} // namespace nsimplex

#endif
