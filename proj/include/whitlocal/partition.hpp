#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace whitlocal {

/// Weakly decreasing tuple of non-negative integers; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Part i (0-based), zero past the length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Parts padded with zeros to exactly n entries; n must be >= length().
  std::vector<int> padded(int n) const;

  /// All partitions obtained by adding one box.
  std::vector<Partition> add_box() const;

  nlohmann::json to_json() const { return parts_; }
  static Partition from_json(const nlohmann::json& j);
  std::string to_string() const;

  auto operator<=>(const Partition& other) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Partitions of exactly `weight` with at most `max_length` parts, in
/// lexicographically descending order.
std::vector<Partition> partitions_of(int weight, int max_length);

/// All partitions of weight 0..max_weight (ascending weight, each weight in
/// lexicographically descending order).
std::vector<Partition> partitions_up_to(int max_weight, int max_length);

}  // namespace whitlocal
