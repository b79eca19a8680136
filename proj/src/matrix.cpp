#include "matrix.hpp"

namespace hensel {

ScalarMatrix::ScalarMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols), Scalar(ring_)) {}

ScalarMatrix ScalarMatrix::identity(RingPtr ring, int n) {
    ScalarMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(ring, 1);
    return m;
}

ScalarMatrix ScalarMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    ScalarMatrix m(ring_, int(rows.size()), int(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m.at(int(i), int(j)) = at(rows[i], cols[j]);
    return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) raise(errc::non_square, "matrix product: inner dimensions differ");
    ScalarMatrix r(a.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            Scalar acc(a.ring_);
            for (int k = 0; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.data_.size(); ++k)
        if (a.data_[k] != b.data_[k]) return false;
    return true;
}

namespace {

Scalar det_cofactor(const ScalarMatrix& m) {
    int n = m.rows();
    if (n == 0) return Scalar(m.ring(), 1);
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Scalar acc(m.ring());
    std::vector<int> all_cols;
    for (int j = 0; j < n; ++j) all_cols.push_back(j);
    std::vector<int> rows;
    for (int i = 1; i < n; ++i) rows.push_back(i);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<int> cols;
        for (int c : all_cols)
            if (c != j) cols.push_back(c);
        Scalar minor = det_cofactor(m.submatrix(rows, cols));
        Scalar term = m.at(0, j) * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// One-step fraction-free elimination. Returns the determinant for square
// input; general shape used for rank.
struct BareissResult {
    int rank;
    Scalar determinant; // valid for square full-rank runs only
    bool singular;
};

BareissResult bareiss(ScalarMatrix m) {
    int rows = m.rows(), cols = m.cols();
    RingPtr ring = m.ring();
    Scalar prev(ring, 1);
    int sign = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            sign = -sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m.at(i, j) = divexact(m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j), prev);
            m.at(i, c) = Scalar(ring);
        }
        prev = m.at(r, c);
        ++r;
    }
    BareissResult res;
    res.rank = r;
    res.singular = (rows != cols) || (r < rows);
    if (!res.singular) {
        res.determinant = sign > 0 ? m.at(rows - 1, cols - 1) : -m.at(rows - 1, cols - 1);
    } else {
        res.determinant = Scalar(ring);
    }
    return res;
}

} // namespace

Scalar det(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::non_square, "determinant of non-square matrix");
    if (m.rows() < 4) return det_cofactor(m);
    return bareiss(m).determinant;
}

ScalarMatrix adjugate(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) raise(errc::non_square, "adjugate of non-square matrix");
    int n = m.rows();
    ScalarMatrix adj(m.ring(), n, n);
    if (n == 1) {
        adj.at(0, 0) = Scalar(m.ring(), 1);
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < n; ++k) {
                if (k != j) rows.push_back(k); // delete row j
                if (k != i) cols.push_back(k); // delete col i
            }
            Scalar minor = det(m.submatrix(rows, cols));
            adj.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return adj;
}

int rank(const ScalarMatrix& m) { return bareiss(m).rank; }

std::vector<Elem> mat_vec(const ScalarMatrix& m, const std::vector<Elem>& v) {
    if (size_t(m.cols()) != v.size()) raise(errc::non_square, "mat_vec: dimension mismatch");
    std::vector<Elem> r;
    r.reserve(size_t(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Elem acc = Elem::zero(m.ring());
        for (int j = 0; j < m.cols(); ++j) acc = acc + Elem::from_scalar(m.at(i, j)) * v[size_t(j)];
        r.push_back(acc);
    }
    return r;
}

namespace {

std::vector<std::vector<Elem>> erase_row_col(const std::vector<std::vector<Elem>>& m, int row, int col) {
    std::vector<std::vector<Elem>> sub;
    for (size_t i = 0; i < m.size(); ++i) {
        if (int(i) == row) continue;
        std::vector<Elem> r;
        for (size_t j = 0; j < m.size(); ++j)
            if (int(j) != col) r.push_back(m[i][j]);
        sub.push_back(std::move(r));
    }
    return sub;
}

} // namespace

Elem det_elem(const std::vector<std::vector<Elem>>& m) {
    size_t n = m.size();
    if (n == 0) raise(errc::non_square, "det of empty matrix");
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Elem acc = Elem::zero(m[0][0].ring());
    for (size_t j = 0; j < n; ++j) {
        Elem term = m[0][j] * det_elem(erase_row_col(m, 0, int(j)));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::vector<Elem>> adjugate_elem(const std::vector<std::vector<Elem>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Elem>> adj(n, std::vector<Elem>(n));
    if (n == 1) {
        adj[0][0] = Elem::one(m[0][0].ring());
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Elem minor = det_elem(erase_row_col(m, int(j), int(i)));
            adj[i][j] = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return adj;
}

} // namespace hensel
