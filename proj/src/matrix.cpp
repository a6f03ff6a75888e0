#include "arithdyn/matrix.hpp"

#include <sstream>

namespace arithdyn {

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Integer(0)) {
  if (n < 0) throw DomainError("DimensionMismatch", "negative matrix size");
}

IntMatrix::IntMatrix(int n, std::vector<Integer> entries) : n_(n), a_(std::move(entries)) {
  if (n < 0 || a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DomainError("DimensionMismatch", "matrix entries do not form a square");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(static_cast<int>(rows.size())) {
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DomainError("DimensionMismatch", "matrix is not square");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Integer> entries;
  entries.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw DomainError("DimensionMismatch", "matrix is not square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IntMatrix(n, std::move(entries));
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  // Bareiss fraction-free elimination
  std::vector<Integer> a = a_;
  auto at = [&](int i, int j) -> Integer& { return a[index(i, j)]; };
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Integer d = at(n_ - 1, n_ - 1);
  return sign > 0 ? d : Integer(-d);
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

bool IntMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<Integer>> IntMatrix::rows() const {
  std::vector<std::vector<Integer>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("DimensionMismatch", "matrix product of different sizes");
  IntMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("DimensionMismatch", "matrix sum of different sizes");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
  return c;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  const int m = a.size();
  const int n = b.size();
  IntMatrix c(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c(i, j) = a(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(m + i, m + j) = b(i, j);
  return c;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned e) {
  IntMatrix result = IntMatrix::identity(m.size());
  IntMatrix base = m;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

IntPolynomial char_poly(const IntMatrix& m) {
  // Faddeev-LeVerrier; every division by k is exact over Z.
  const int n = m.size();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix aux(n);
  for (int k = 1; k <= n; ++k) {
    IntMatrix next = m * aux;
    for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    aux = std::move(next);
    Integer t = (m * aux).trace();
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    c[static_cast<std::size_t>(n - k)] = -q;
  }
  return IntPolynomial(std::move(c));
}

IntMatrix companion(const IntPolynomial& p) {
  if (p.degree() < 1) throw DomainError("NotMonic", "companion matrix needs degree >= 1");
  if (!p.is_monic()) throw DomainError("NotMonic", "companion matrix needs a monic polynomial, got " + p.to_string());
  const int n = p.degree();
  IntMatrix c(n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p[i];
  return c;
}

}  // namespace arithdyn
