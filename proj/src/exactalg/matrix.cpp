#include "whitlocal/matrix.hpp"

#include "whitlocal/error.hpp"

namespace whitlocal {

SymbolicMatrix::SymbolicMatrix(std::size_t size) : size_(size), entries_(size * size) {}

SymbolicMatrix SymbolicMatrix::identity(std::size_t size) {
  SymbolicMatrix out(size);
  for (std::size_t i = 0; i < size; ++i) out.at(i, i) = LaurentPoly(1);
  return out;
}

SymbolicMatrix SymbolicMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  SymbolicMatrix out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out.at(i, i) = entries[i];
  return out;
}

SymbolicMatrix SymbolicMatrix::block_diagonal(const std::vector<SymbolicMatrix>& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  SymbolicMatrix out(total);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out.at(offset + i, offset + j) = b.at(i, j);
    offset += b.size();
  }
  return out;
}

SymbolicMatrix SymbolicMatrix::operator*(const SymbolicMatrix& other) const {
  if (size_ != other.size_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
  SymbolicMatrix out(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t k = 0; k < size_; ++k) {
      const auto& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < size_; ++j)
        if (!other.at(k, j).is_zero()) out.at(i, j).add_product(a, other.at(k, j));
    }
  return out;
}

SymbolicMatrix SymbolicMatrix::scaled(const LaurentPoly& factor) const {
  SymbolicMatrix out(*this);
  for (auto& e : out.entries_) e = e * factor;
  return out;
}

SymbolicMatrix SymbolicMatrix::transpose() const {
  SymbolicMatrix out(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) out.at(j, i) = at(i, j);
  return out;
}

SymbolicMatrix SymbolicMatrix::substitute(const std::string& name, const LaurentPoly& value) const {
  SymbolicMatrix out(size_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].substitute(name, value);
  return out;
}

bool SymbolicMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

nlohmann::json SymbolicMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < size_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < size_; ++j) row.push_back(at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

LaurentPoly determinant(const SymbolicMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "determinant size too large for Laplace expansion");
  // minors[mask] = determinant of the bottom rows (popcount(mask) of them)
  // restricted to the columns in mask.
  std::vector<LaurentPoly> minors(std::size_t{1} << n);
  minors[0] = LaurentPoly(1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    auto count = static_cast<std::size_t>(__builtin_popcountll(mask));
    std::size_t row = n - count;
    LaurentPoly acc;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if ((mask >> col & 1U) == 0) continue;
      const auto& entry = m.at(row, col);
      const auto& minor = minors[mask & ~(std::size_t{1} << col)];
      if (!entry.is_zero() && !minor.is_zero()) {
        if (sign > 0) {
          acc.add_product(entry, minor);
        } else {
          acc.add_product(-entry, minor);
        }
      }
      sign = -sign;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

std::string first_difference(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  if (a.size() != b.size()) return "sizes differ";
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a.at(i, j) == b.at(i, j)))
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + a.at(i, j).to_string() +
               " vs " + b.at(i, j).to_string();
  return {};
}

}  // namespace whitlocal
