#pragma once

#include <string>
#include <vector>

#include "arithdyn/common.hpp"
#include "arithdyn/polynomial.hpp"

namespace arithdyn {

// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n);
  IntMatrix(int n, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  int size() const { return n_; }
  Integer& operator()(int i, int j) { return a_[index(i, j)]; }
  const Integer& operator()(int i, int j) const { return a_[index(i, j)]; }

  Integer trace() const;
  Integer determinant() const;
  bool is_identity() const;
  bool is_zero() const;
  bool in_sl() const { return determinant() == 1; }
  bool is_unimodular() const { return abs(determinant()) == 1; }
  IntMatrix transposed() const;
  std::vector<std::vector<Integer>> rows() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }
  int n_ = 0;
  std::vector<Integer> a_;
};

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_power(const IntMatrix& m, unsigned e);

// det(T I - M)
IntPolynomial char_poly(const IntMatrix& m);

// Companion matrix with ones on the subdiagonal and -p_k in the last column,
// so that char_poly(companion(p)) == p.
IntMatrix companion(const IntPolynomial& p);

}  // namespace arithdyn
