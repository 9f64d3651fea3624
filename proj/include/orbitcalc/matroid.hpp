#pragma once

#include "orbitcalc/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbitcalc {

// Ground sets are 1-indexed toward the user and bitmask-encoded internally
// (bit i-1 <-> element i). Practical bound n <= 12 or so; everything
// downstream does repeated rank queries, which the eager subset-rank table
// serves in O(1).
using Mask = uint32_t;

int popcount(Mask m);
std::vector<int> mask_to_elems(Mask m);          // 1-indexed, ascending
Mask elems_to_mask(const std::vector<int>& v, int n);

class Matroid {
  public:
    // Bases are checked for the exchange axiom on construction (exhaustively
    // for n <= 8, as large n never occurs at desk scale).
    Matroid(int n, int d, std::vector<Mask> bases);

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<Mask>& bases() const { return bases_; }
    bool is_basis(Mask m) const;

    int rank(Mask subset) const;
    int rank_elems(const std::vector<int>& elems) const;
    bool independent(Mask subset) const { return rank(subset) == popcount(subset); }
    bool is_connected() const;

    // Greedy basis in sigma-order (sigma is a 1-indexed permutation of the
    // ground set); the sigma-lex first basis by Gale maximality.
    Mask gale_first_basis(const std::vector<int>& sigma) const;

    // Relabel element i as perm[i-1] (perm a 1-indexed permutation).
    Matroid permuted(const std::vector<int>& perm) const;

    bool operator==(const Matroid& o) const {
        return n_ == o.n_ && d_ == o.d_ && bases_ == o.bases_;
    }
    bool operator!=(const Matroid& o) const { return !(*this == o); }

    // Deterministic key for caching and set membership.
    std::string key() const;

  private:
    int n_;
    int d_;
    std::vector<Mask> bases_;        // sorted
    std::vector<uint8_t> rank_tab_;  // size 1<<n
};

Matroid uniform_matroid(int d, int n);
Matroid truncate(const Matroid& m, int k);
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Basis sets defined combinatorially (used both to build matroids directly
// and as the expected sets certified-generic realizations must match).
std::vector<Mask> schubert_bases(const std::vector<int>& ranks, const std::vector<Mask>& chain, int n);
std::vector<Mask> partition_bases(const std::vector<Mask>& blocks, int n);

}  // namespace orbitcalc
