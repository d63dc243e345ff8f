#ifndef SKA_LINALG_HPP
#define SKA_LINALG_HPP

#include <vector>

#include "ska/scalar.hpp"

namespace ska {

// Dense exact matrix with row-major storage.
struct Mat {
    Field field;
    size_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat(Field f, size_t r, size_t c) : field(f), rows(r), cols(c), a(r * c, f.zero()) {}
    Scalar& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Scalar& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// In-place reduced row echelon form; columns are processed in the order given
// by col_order (defaults to 0..cols-1). Returns pivot columns in elimination
// order.
std::vector<size_t> rref(Mat& M);
std::vector<size_t> rref(Mat& M, const std::vector<size_t>& col_order);

size_t rank(Mat M);

// Kernel basis from an RREF computed with ascending col_order: one vector per
// non-pivot column j, with entry 1 at j and the negated RREF column elsewhere.
// Each vector's support beyond j lies in pivot columns processed before j.
std::vector<std::vector<Scalar>> kernel_basis(const Mat& M_rref,
                                              const std::vector<size_t>& pivots,
                                              const std::vector<size_t>& col_order);

}  // namespace ska

#endif
