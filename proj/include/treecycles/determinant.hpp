#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace treecycles {

// Dense square integer matrix, row-major.
class SquareMatrix {
 public:
  explicit SquareMatrix(int size);
  SquareMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static SquareMatrix identity(int size);

  int size() const { return size_; }
  std::int64_t& at(int row, int col) { return cells_[index(row, col)]; }
  std::int64_t at(int row, int col) const { return cells_[index(row, col)]; }

  std::vector<std::vector<std::int64_t>> rows() const;
  std::string to_string() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(col);
  }

  int size_;
  std::vector<std::int64_t> cells_;
};

// Exact determinant: cofactor expansion below size 5, fraction-free
// (Bareiss) elimination from size 5 on. Throws std::overflow_error if an
// intermediate leaves the 64-bit range.
std::int64_t det(const SquareMatrix& m);

// True iff every entry above the diagonal is 0 and every diagonal entry is 1.
bool is_lower_unitriangular(const SquareMatrix& m);

}  // namespace treecycles
