#pragma once

#include "orbitcalc/matroid.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbitcalc {

// Univariate polynomial in t over Q, dense coefficient vector.
using TPoly = std::vector<Rat>;

TPoly tpoly_parse(const std::string& text);   // e.g. "3 - 2*t + t^2"
std::string tpoly_to_string(const TPoly& p);
int tpoly_ord(const TPoly& p);                // lowest t-degree with nonzero coeff; -1 if zero

// d x n matrix with entries in Q[t]: a one-parameter family of matrices.
class PathMatrix {
  public:
    PathMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    TPoly& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const TPoly& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    // Exact determinant of the column submatrix, by Leibniz expansion
    // (d is tiny here).
    TPoly det_of_columns(const std::vector<int>& cols0) const;

    // The matroid at generic t; throws if the generic rank is below d.
    Matroid generic_matroid() const;

  private:
    int rows_, cols_;
    std::vector<TPoly> a_;
};

// h(v) = ord_t det(M^v) for every basis v of the generic-t matroid.
std::map<Mask, int> path_heights(const PathMatrix& m);

}  // namespace orbitcalc
