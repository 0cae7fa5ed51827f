#include "ca/linalg.hpp"

namespace ca {

namespace {

// Row echelon in place; returns rank. Processes columns left to right with
// the first nonzero row as pivot.
int echelon(ScalarMatrix& m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int cc = c; cc < m.cols(); ++cc) std::swap(m.at(pivot, cc), m.at(rank, cc));
        Scalar inv = m.at(rank, c).inverse();
        for (int cc = c; cc < m.cols(); ++cc) m.at(rank, cc) = m.at(rank, cc) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, c).is_zero()) continue;
            Scalar f = m.at(r, c);
            for (int cc = c; cc < m.cols(); ++cc)
                m.at(r, cc) = m.at(r, cc) - f * m.at(rank, cc);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int ScalarMatrix::rank() const {
    ScalarMatrix copy(*this);
    return echelon(copy);
}

bool ScalarMatrix::in_column_span(const ScalarMatrix& cols, const std::vector<Scalar>& target) {
    if (static_cast<int>(target.size()) != cols.rows()) throw Error("in_column_span: size mismatch");
    ScalarMatrix aug(cols.rows(), cols.cols() + 1, cols.field_);
    for (int r = 0; r < cols.rows(); ++r) {
        for (int c = 0; c < cols.cols(); ++c) aug.at(r, c) = cols.at(r, c);
        aug.at(r, cols.cols()) = target[r];
    }
    return cols.rank() == aug.rank();
}

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace ca
