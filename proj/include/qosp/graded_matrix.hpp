#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qosp/qring.hpp"

namespace qosp {

/// Square sparse matrix over LaurentPoly on a Z2-graded space. Rows are
/// stored as column-sorted lists without explicit zeros.
class GradedMatrix {
 public:
  using Entry = std::pair<int, LaurentPoly>;
  using Row = std::vector<Entry>;

  GradedMatrix() = default;
  explicit GradedMatrix(std::vector<int> grading);

  static GradedMatrix identity(const std::vector<int>& grading);
  static GradedMatrix diagonal(const std::vector<int>& grading, const std::vector<LaurentPoly>& d);
  static GradedMatrix unit(const std::vector<int>& grading, int r, int c,
                           const LaurentPoly& v = LaurentPoly(1));

  int dim() const { return static_cast<int>(grading_.size()); }
  const std::vector<int>& grading() const { return grading_; }
  const Row& row(int r) const { return rows_[static_cast<size_t>(r)]; }
  Row& mutable_row(int r) { return rows_[static_cast<size_t>(r)]; }

  LaurentPoly get(int r, int c) const;
  void set(int r, int c, const LaurentPoly& v);
  void add(int r, int c, const LaurentPoly& v);

  size_t nnz() const;
  bool is_zero() const;
  /// Common parity [row]+[col] of all entries; nullopt if mixed. The zero
  /// matrix counts as even.
  std::optional<int> parity() const;
  /// Like parity() but throws NotHomogeneous.
  int homogeneous_parity() const;

  GradedMatrix& operator+=(const GradedMatrix& o);
  GradedMatrix& operator-=(const GradedMatrix& o);
  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  GradedMatrix operator-() const;
  GradedMatrix scaled(const LaurentPoly& c) const;
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

  GradedMatrix transform(const std::function<LaurentPoly(int, int, const LaurentPoly&)>& f) const;
  /// First (row, col) where the two matrices differ, if any.
  friend std::optional<std::pair<int, int>> first_difference(const GradedMatrix& a,
                                                             const GradedMatrix& b);

 private:
  std::vector<int> grading_;
  std::vector<Row> rows_;
};

void check_same_space(const GradedMatrix& a, const GradedMatrix& b);

}  // namespace qosp
