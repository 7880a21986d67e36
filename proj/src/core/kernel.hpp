#ifndef MROOT_KERNEL_HPP
#define MROOT_KERNEL_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "poly.hpp"

namespace mroot {

// Permutations bringing a well-conditioned r x r block to the leading
// position. Complete pivoting by magnitude; at each step the first entry
// (row-major) within a factor 1/2 of the submatrix maximum is taken, which
// keeps the choice stable under tiny perturbations of near-tied entries.
std::pair<std::vector<int>, std::vector<int>> pivot_block(const Eigen::MatrixXcd& J0, int r,
                                                          double thresh = 0.5);

// D - C A^{-1} B of the permuted series matrix, entries truncated at `order`.
// r = 0 returns the permuted matrix unchanged.
std::vector<std::vector<Poly>> schur_complement(const std::vector<std::vector<Poly>>& J, int r,
                                                const std::vector<int>& row_perm,
                                                const std::vector<int>& col_perm, int order);

struct KernelingResult {
    SeriesSystem system;
    std::vector<int> row_perm;
    std::vector<int> col_perm;
};

// K(F): first r equations (after the pivot row permutation) followed by the
// row-major vectorized Schur complement of DF. r = 0 keeps all s*n partials.
// The output order is order_out = F.order - 1.
KernelingResult kerneling(const SeriesSystem& F, int r, int order_out, double thresh = 0.5);

}  // namespace mroot

#endif
