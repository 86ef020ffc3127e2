#include "treecycles/determinant.hpp"

#include <stdexcept>
#include <utility>

#include "treecycles/error.hpp"

namespace treecycles {

SquareMatrix::SquareMatrix(int size) : size_(size) {
  if (size < 0) throw DomainError("negative matrix size");
  cells_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : SquareMatrix(static_cast<int>(rows.size())) {
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != size_) throw DomainError("matrix is not square");
    int c = 0;
    for (std::int64_t v : row) at(r, c++) = v;
    ++r;
  }
}

SquareMatrix SquareMatrix::identity(int size) {
  SquareMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::vector<std::int64_t>> SquareMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(size_));
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) out[static_cast<std::size_t>(r)].push_back(at(r, c));
  }
  return out;
}

std::string SquareMatrix::to_string() const {
  std::string out = "[";
  for (int r = 0; r < size_; ++r) {
    out += r == 0 ? "[" : ",[";
    for (int c = 0; c < size_; ++c) {
      if (c > 0) out += ",";
      out += std::to_string(at(r, c));
    }
    out += "]";
  }
  return out + "]";
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("determinant overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("determinant overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("determinant overflow");
  return out;
}

// Laplace expansion along the first remaining row; `cols` lists live columns.
std::int64_t cofactor(const SquareMatrix& m, int row, std::vector<int>& cols) {
  if (cols.empty()) return 1;
  if (cols.size() == 1) return m.at(row, cols.front());
  std::int64_t sum = 0;
  for (std::size_t p = 0; p < cols.size(); ++p) {
    const std::int64_t entry = m.at(row, cols[p]);
    if (entry == 0) continue;
    const int col = cols[p];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(p));
    const std::int64_t minor = cofactor(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(p), col);
    const std::int64_t term = checked_mul(entry, minor);
    sum = p % 2 == 0 ? checked_add(sum, term) : checked_sub(sum, term);
  }
  return sum;
}

std::int64_t bareiss(SquareMatrix a) {
  const int n = a.size();
  std::int64_t sign = 1;
  std::int64_t previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap_row = k + 1;
      while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const std::int64_t num =
            checked_sub(checked_mul(a.at(i, j), a.at(k, k)), checked_mul(a.at(i, k), a.at(k, j)));
        a.at(i, j) = num / previous;  // exact by Sylvester's identity
      }
    }
    previous = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace

std::int64_t det(const SquareMatrix& m) {
  if (m.size() == 0) return 1;
  if (m.size() < 5) {
    std::vector<int> cols;
    for (int c = 0; c < m.size(); ++c) cols.push_back(c);
    return cofactor(m, 0, cols);
  }
  return bareiss(m);
}

bool is_lower_unitriangular(const SquareMatrix& m) {
  for (int r = 0; r < m.size(); ++r) {
    if (m.at(r, r) != 1) return false;
    for (int c = r + 1; c < m.size(); ++c) {
      if (m.at(r, c) != 0) return false;
    }
  }
  return true;
}

}  // namespace treecycles
