#pragma once

#include "elem.hpp"

namespace hensel {

/// Dense matrix of exact scalars. Row-major; small n only.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(RingPtr ring, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    Scalar& at(int i, int j) { return data_[size_t(i) * size_t(cols_) + size_t(j)]; }
    const Scalar& at(int i, int j) const { return data_[size_t(i) * size_t(cols_) + size_t(j)]; }

    static ScalarMatrix identity(RingPtr ring, int n);
    ScalarMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

private:
    RingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// Cofactor expansion below 4x4, fraction-free Bareiss elimination from 4x4 up.
Scalar det(const ScalarMatrix& m);

// Transposed cofactor matrix: adjugate(m) * m = det(m) * I.
ScalarMatrix adjugate(const ScalarMatrix& m);

// Rank over the fraction field of the coefficient ring (Q, resp. F_p(t)).
int rank(const ScalarMatrix& m);

std::vector<Elem> mat_vec(const ScalarMatrix& m, const std::vector<Elem>& v);

// Determinant and adjugate over valued elements (cofactor expansion; used in
// the Newton step where the determinant is a unit).
Elem det_elem(const std::vector<std::vector<Elem>>& m);
std::vector<std::vector<Elem>> adjugate_elem(const std::vector<std::vector<Elem>>& m);

} // namespace hensel
