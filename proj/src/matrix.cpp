#include "neo/matrix.hpp"

#include "neo/errors.hpp"

namespace neo {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        return {};
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) {
            throw RuntimeError("ragged rows passed to Matrix::from_rows");
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

void matvec(const Matrix& a, const double* x, double* y) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const double* row = a.row(r);
        double acc = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            acc += row[c] * x[c];
        }
        y[r] = acc;
    }
}

void matvec_add(const Matrix& a, const double* x, double* y) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const double* row = a.row(r);
        double acc = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            acc += row[c] * x[c];
        }
        y[r] += acc;
    }
}

void matvec_transpose_add(const Matrix& a, const double* x, double* y) {
    // accumulate row by row so the inner loop stays contiguous
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const double* row = a.row(r);
        const double xr = x[r];
        for (std::size_t c = 0; c < a.cols(); ++c) {
            y[c] += row[c] * xr;
        }
    }
}

void outer_add(Matrix& a, const double* u, const double* v) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        double* row = a.row(r);
        const double ur = u[r];
        for (std::size_t c = 0; c < a.cols(); ++c) {
            row[c] += ur * v[c];
        }
    }
}

}  // namespace neo
