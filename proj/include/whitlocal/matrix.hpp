#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "whitlocal/laurent.hpp"

namespace whitlocal {

/// Square matrix over the Laurent ring. Entries are indexed from 0.
class SymbolicMatrix {
 public:
  explicit SymbolicMatrix(std::size_t size);

  static SymbolicMatrix identity(std::size_t size);
  static SymbolicMatrix diagonal(const std::vector<LaurentPoly>& entries);
  /// Block diagonal with the blocks placed along the diagonal in order.
  static SymbolicMatrix block_diagonal(const std::vector<SymbolicMatrix>& blocks);

  std::size_t size() const noexcept { return size_; }
  const LaurentPoly& at(std::size_t row, std::size_t col) const { return entries_.at(row * size_ + col); }
  LaurentPoly& at(std::size_t row, std::size_t col) { return entries_.at(row * size_ + col); }

  SymbolicMatrix operator*(const SymbolicMatrix& other) const;
  SymbolicMatrix scaled(const LaurentPoly& factor) const;
  SymbolicMatrix transpose() const;
  SymbolicMatrix substitute(const std::string& name, const LaurentPoly& value) const;
  bool is_diagonal() const;

  friend bool operator==(const SymbolicMatrix& a, const SymbolicMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

  nlohmann::json to_json() const;

 private:
  std::size_t size_;
  std::vector<LaurentPoly> entries_;
};

/// Division-free determinant by Laplace expansion with memoized minors
/// (O(2^n n) ring multiplications); zero entries are skipped.
LaurentPoly determinant(const SymbolicMatrix& m);

/// Entrywise comparison; returns a description of the first differing entry,
/// or an empty string when the matrices agree.
std::string first_difference(const SymbolicMatrix& a, const SymbolicMatrix& b);

}  // namespace whitlocal
