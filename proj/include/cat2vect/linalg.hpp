/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over Scalar (F_p or Q).
 *
 * Everything here is plain Gaussian elimination with exact pivoting; there is
 * no numerical tolerance anywhere. Dimensions in this project stay tiny
 * (hom-space solves, group algebras up to |G| = 24), so no sparsity is needed.
 */

#pragma once

#include <optional>
#include <vector>

#include "cat2vect/scalar.hpp"

namespace cat2vect {

class ScalarMat {
  public:
    ScalarMat() = default;
    ScalarMat(int rows, int cols, const FieldSpec& f)
        : rows_(rows), cols_(cols), field_(f), data_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

    static ScalarMat identity(int n, const FieldSpec& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    ScalarMat operator*(const ScalarMat& o) const;
    ScalarMat operator+(const ScalarMat& o) const;
    ScalarMat operator-(const ScalarMat& o) const;
    bool operator==(const ScalarMat& o) const;
    bool operator!=(const ScalarMat& o) const { return !(*this == o); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    ScalarMat transpose() const;
    int rank() const;
    std::optional<ScalarMat> inverse() const;

  private:
    int rows_ = 0, cols_ = 0;
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<Scalar> data_;
};

struct LinearSolution {
    bool solvable = false;
    std::vector<Scalar> particular;               // one solution when solvable
    std::vector<std::vector<Scalar>> nullspace;   // basis of the homogeneous solutions
};

/// Solves A x = b exactly; also reports the nullspace of A.
LinearSolution solve_linear(const ScalarMat& a, const std::vector<Scalar>& b);

/// Basis of { x : A x = 0 }.
std::vector<std::vector<Scalar>> nullspace(const ScalarMat& a);

}  // namespace cat2vect
