#include "cat2vect/linalg.hpp"

namespace cat2vect {

ScalarMat ScalarMat::identity(int n, const FieldSpec& f) {
    ScalarMat m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ScalarMat ScalarMat::operator*(const ScalarMat& o) const {
    if (cols_ != o.rows_) throw Error("ShapeMismatch", "matrix product shape");
    ScalarMat r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
        }
    return r;
}

ScalarMat ScalarMat::operator+(const ScalarMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("ShapeMismatch", "matrix sum shape");
    ScalarMat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
    return r;
}

ScalarMat ScalarMat::operator-(const ScalarMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("ShapeMismatch", "matrix diff shape");
    ScalarMat r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
    return r;
}

bool ScalarMat::operator==(const ScalarMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<Scalar> ScalarMat::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("ShapeMismatch", "matrix apply shape");
    std::vector<Scalar> r(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

ScalarMat ScalarMat::transpose() const {
    ScalarMat r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Row-reduces m in place; returns pivot column per eliminated row.
std::vector<int> rref_inplace(ScalarMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int ScalarMat::rank() const {
    ScalarMat copy = *this;
    return static_cast<int>(rref_inplace(copy).size());
}

std::optional<ScalarMat> ScalarMat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    ScalarMat aug(rows_, 2 * cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one(field_);
    }
    auto pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
    for (int i = 0; i < rows_; ++i)
        if (pivots[i] != i) return std::nullopt;
    ScalarMat inv(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

LinearSolution solve_linear(const ScalarMat& a, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw Error("ShapeMismatch", "solve rhs size");
    ScalarMat aug(a.rows(), a.cols() + 1, a.field());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = rref_inplace(aug);
    LinearSolution sol;
    // inconsistent iff a pivot lands in the rhs column
    for (int p : pivots)
        if (p == a.cols()) return sol;
    sol.solvable = true;
    sol.particular.assign(a.cols(), Scalar::zero(a.field()));
    for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    for (int free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(a.cols(), Scalar::zero(a.field()));
        v[free_col] = Scalar::one(a.field());
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug.at(static_cast<int>(r), free_col);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::vector<std::vector<Scalar>> nullspace(const ScalarMat& a) {
    std::vector<Scalar> zero(a.rows(), Scalar::zero(a.field()));
    return solve_linear(a, zero).nullspace;
}

}  // namespace cat2vect
