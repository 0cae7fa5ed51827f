#ifndef CA_LINALG_HPP
#define CA_LINALG_HPP

#include <vector>

#include "ca/scalar.hpp"

namespace ca {

// Dense matrix over the active field, row major. Exact Gaussian elimination
// only; sizes here are small (graded pieces).
class ScalarMatrix {
public:
    ScalarMatrix(int rows, int cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    // Rank via row echelon on a copy.
    int rank() const;

    // Treat columns as vectors; decide whether `target` lies in their span.
    static bool in_column_span(const ScalarMatrix& cols, const std::vector<Scalar>& target);

private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

long binomial(long n, long k);

}  // namespace ca

#endif
