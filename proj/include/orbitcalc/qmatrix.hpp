#pragma once

#include "orbitcalc/matroid.hpp"
#include "orbitcalc/prng.hpp"

#include <vector>

namespace orbitcalc {

// Dense exact rational matrix; rows x cols, row-major.
class QMatrix {
  public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool column_is_zero(int c) const;
    int rank() const;
    QMatrix columns(const std::vector<int>& idx) const;  // 0-indexed column selection

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Exact rank via fraction-free elimination.
int rational_rank(QMatrix m);

// Bases = all d-subsets of columns with nonsingular submatrix. Throws
// UsageError carrying the actual rank when rank(M) < d.
Matroid matroid_from_matrix(const QMatrix& m);

enum class ConnectMode { Parallel, Series };

// The block constructions along the last column of m1 and the first column
// of m2: parallel identifies the two glued columns (a quotient by their
// difference, realized by eliminating one coordinate), series replaces them
// by their sum in the direct sum of the row spaces.
QMatrix connect_matrices(const QMatrix& m1, const QMatrix& m2, ConnectMode mode);

// Seeded integer matrix with |entry| <= 10^6; certified against an expected
// basis set with bounded retry (16 attempts, then a hard error). Genericity
// over Q is a certificate here, not an assumption.
QMatrix realize_generic(int d, int n, Prng& rng);
QMatrix realize_with_expected(int d, int n, const std::vector<Mask>& expected,
                              const std::vector<std::vector<bool>>& support, Prng& rng);

// Certified-generic constructors.
Matroid schubert_matroid(const std::vector<int>& ranks, const std::vector<std::vector<int>>& chain,
                         int n, Prng& rng);
Matroid partition_matroid(const std::vector<std::vector<int>>& blocks, int n, Prng& rng);

}  // namespace orbitcalc
