#pragma once

#include <optional>
#include <vector>

#include "spencer/scalar.hpp"

namespace spencer {

using Vec = std::vector<Scalar>;

/// Dense matrix over the exact field. Every operation is exact; the
/// elimination kernels use a fixed deterministic pivot rule (first nonzero
/// column, first nonzero row in it) so results are byte-stable across runs
/// and thread counts.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static ExactMatrix identity(int n);
    static ExactMatrix from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);
    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool is_zero() const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    ExactMatrix eval_alpha(const Rat& x) const;

  private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    int rank = 0;
    std::vector<int> pivots;  // pivot column per pivot row
    ExactMatrix reduced;
};

/// Reduced row echelon form. The OpenMP variant eliminates rows of each
/// pivot step in parallel; row updates are independent so the result is
/// bit-identical to rref_serial (asserted in tests and in the benchmark).
RrefResult rref(const ExactMatrix& m);
RrefResult rref_serial(const ExactMatrix& m);

int rank(const ExactMatrix& m);

/// Basis of the right null space {v : m v = 0}, deterministic: one vector
/// per free column in ascending column order, free coordinate set to 1.
std::vector<Vec> kernel_basis(const ExactMatrix& m);

/// Row-space basis (the nonzero rows of the rref).
std::vector<Vec> row_space_basis(const ExactMatrix& m);

/// Intersection of two subspaces given by spanning vectors in a common
/// ambient dimension.
std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, int ambient);

/// Solve basis-matrix^T * x = v, i.e. express v as a combination of the
/// given (independent) vectors; returns false when v is outside the span.
bool solve_in_span(const std::vector<Vec>& basis, const Vec& v, Vec* coords = nullptr);

bool vec_is_zero(const Vec& v);
Vec vec_scale(const Vec& v, const Scalar& c);
void vec_axpy(Vec& y, const Scalar& c, const Vec& x);  // y += c*x

/// Span with coordinate tracking: each inserted vector is remembered as a
/// combination of the original generators, so arbitrary vectors can be
/// expressed back in generator coordinates.
class CoordSpan {
  public:
    explicit CoordSpan(int ambient) : ambient_(ambient) {}

    /// Returns true when v added a new direction.
    bool add(const Vec& v);
    /// Coordinates of v in terms of the added generators (by insertion
    /// index), or nullopt when v is outside the span.
    std::optional<Vec> express(const Vec& v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int generators() const { return ngen_; }

  private:
    int ambient_;
    int ngen_ = 0;
    std::vector<Vec> rows_;    // rref rows over ambient coords
    std::vector<Vec> combo_;   // same rows as generator combinations
    std::vector<int> pivots_;
};

/// Incrementally maintained rref basis of a growing span; used by the
/// closure computations (generated subalgebras and submodules).
class SpanBuilder {
  public:
    explicit SpanBuilder(int ambient) : ambient_(ambient) {}

    /// Reduces v against the current basis; if a new direction remains it
    /// is added (normalized to pivot 1) and true is returned.
    bool add(Vec v);
    /// Reduce without inserting.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

  private:
    int ambient_;
    std::vector<Vec> rows_;    // rref rows
    std::vector<int> pivots_;  // pivot column of each row, increasing set
};

}  // namespace spencer
