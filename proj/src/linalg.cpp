#include "ska/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace ska {

std::vector<size_t> rref(Mat& M) {
    std::vector<size_t> order(M.cols);
    std::iota(order.begin(), order.end(), 0);
    return rref(M, order);
}

std::vector<size_t> rref(Mat& M, const std::vector<size_t>& col_order) {
    const Field& F = M.field;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t oc = 0; oc < col_order.size() && row < M.rows; ++oc) {
        size_t c = col_order[oc];
        size_t pr = row;
        while (pr < M.rows && F.is_zero(M.at(pr, c))) ++pr;
        if (pr == M.rows) continue;
        if (pr != row)
            for (size_t j = 0; j < M.cols; ++j) std::swap(M.at(pr, j), M.at(row, j));
        Scalar inv = F.inv(M.at(row, c));
        for (size_t j = 0; j < M.cols; ++j) M.at(row, j) = F.mul(M.at(row, j), inv);
        for (size_t i = 0; i < M.rows; ++i) {
            if (i == row || F.is_zero(M.at(i, c))) continue;
            Scalar f = M.at(i, c);
            for (size_t j = 0; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(row, j)));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

size_t rank(Mat M) { return rref(M).size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Mat& M,
                                              const std::vector<size_t>& pivots,
                                              const std::vector<size_t>& col_order) {
    const Field& F = M.field;
    std::vector<char> is_pivot(M.cols, 0);
    std::vector<size_t> pivot_row(M.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = 1;
        pivot_row[pivots[r]] = r;
    }
    std::vector<std::vector<Scalar>> out;
    for (size_t oc = 0; oc < col_order.size(); ++oc) {
        size_t j = col_order[oc];
        if (is_pivot[j]) continue;
        std::vector<Scalar> v(M.cols, F.zero());
        v[j] = F.one();
        for (size_t p : pivots) v[p] = F.neg(M.at(pivot_row[p], j));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ska
