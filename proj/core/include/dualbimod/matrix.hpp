#ifndef DUALBIMOD_MATRIX_HPP
#define DUALBIMOD_MATRIX_HPP

#include <optional>
#include <vector>

#include "dualbimod/rational.hpp"

namespace dualbimod {

/*
  Dense row-major matrix over Rat. Deterministic exact linear algebra:
  the elimination always pivots on the first nonzero entry scanning
  top-to-bottom within each column, columns left-to-right, so every basis
  produced downstream is reproducible bit for bit.
*/
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat zeros(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Rat& c) const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat col(int j) const;
  void set_col(int j, const Mat& column);
  Mat cols_subset(const std::vector<int>& idx) const;

  // Stacks o to the right of *this; row counts must agree.
  Mat hjoin(const Mat& o) const;
  // Stacks o below *this; column counts must agree.
  Mat vjoin(const Mat& o) const;

  // Column vector of length rows*cols listing entries column-major
  // (vec of the matrix, used to flatten morphism equations).
  Mat vec() const;
  static Mat unvec(const Mat& v, int rows, int cols);

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

struct RrefResult {
  Mat m;
  std::vector<int> pivots;  // strictly increasing pivot column indices
};

// Unique reduced row echelon form.
RrefResult rref(const Mat& a);

int rank(const Mat& a);

// Columns form the deterministic basis of the null space: free variables in
// increasing column order, each in turn set to 1 with the others 0.
Mat kernel_basis(const Mat& a);

// Particular solution of A x = b with all free variables set to 0; empty if
// inconsistent. b may have several columns (solved simultaneously).
std::optional<Mat> solve(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& a);

// Basis of the column space: the columns of a at the rref pivot positions.
Mat column_space_basis(const Mat& a);

// dim(span(a) ∩ span(b)) for column spans.
int intersection_dim(const Mat& a, const Mat& b);

// true iff every column of v lies in the column span of basis.
bool spans_contain(const Mat& basis, const Mat& v);

// Monic characteristic polynomial coefficients c_0..c_n (c_n = 1) of a
// square matrix, by the Faddeev–LeVerrier recurrence.
std::vector<Rat> char_poly(const Mat& a);

// Rational roots of the polynomial with the given coefficients (index =
// degree). Complete whenever the integer parts factor within the trial
// division bound; desk-scale inputs here stay far below it.
std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs);

}  // namespace dualbimod

#endif
