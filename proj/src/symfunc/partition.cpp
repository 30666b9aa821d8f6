#include "whitlocal/partition.hpp"

#include <numeric>

#include "whitlocal/error.hpp"

namespace whitlocal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorCode::InvalidArgument, "partition parts must not increase");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
  if (n < length()) throw Error(ErrorCode::InvalidArgument, "cannot pad a partition to fewer parts than its length");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

std::vector<Partition> Partition::add_box() const {
  std::vector<Partition> out;
  for (std::size_t i = 0; i <= parts_.size(); ++i) {
    if (i > 0 && (*this)[i] + 1 > (*this)[i - 1]) continue;
    std::vector<int> p(parts_);
    if (i == p.size()) p.push_back(0);
    ++p[i];
    out.emplace_back(std::move(p));
  }
  return out;
}

Partition Partition::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "partition JSON must be an integer array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const { return to_json().dump(); }

namespace {

void generate(int remaining, int max_part, int slots, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_length) {
  if (weight < 0) throw Error(ErrorCode::InvalidArgument, "negative partition weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(weight, weight, max_length, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_length) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto part = partitions_of(w, max_length);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace whitlocal
