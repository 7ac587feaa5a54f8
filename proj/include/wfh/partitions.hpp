#pragma once

#include "wfh/core.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wfh {

class Partition {
 public:
  Partition() = default;
  // Parts must be positive and non-increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int multiplicity(int i) const;
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct BorderStrip {
  std::vector<std::pair<int, int>> boxes;  // (row, column), 0-based
  int height = 0;
  Partition result;
};

std::vector<int> contents(const Partition& lambda);
Partition p_core(const Partition& lambda, int p);
std::vector<BorderStrip> border_strips(const Partition& lambda, int k);
Partition reduce_cycle_type(const Partition& lambda);
std::optional<Partition> unreduce_cycle_type(const Partition& mu, int n);
std::vector<Partition> partitions_of(int n);  // reverse lexicographic: (n) first
BigInt sym_class_size(const Partition& mu, int n);

std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

// A map from class (or irrep) index to partition; empty components are not stored.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::map<int, Partition> comps);
  static Multipartition concentrated(int c, Partition p);

  const Partition& operator[](int c) const;
  void set(int c, Partition p);
  const std::map<int, Partition>& components() const { return comps_; }
  int size() const;
  int length() const;
  bool empty() const { return comps_.empty(); }
  // Number of points touched by an element of this partially-reduced type.
  int affected() const;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  // Canonical order: size, then length, then component-wise lexicographic.
  friend std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b);

 private:
  std::map<int, Partition> comps_;
};

Multipartition partially_reduce(const Multipartition& mu);
Multipartition fully_reduce(const Multipartition& mu);
Multipartition hat(const Multipartition& mu);
// Reduce the non-identity components of a partially-reduced label.
Multipartition reduce_partial_label(const Multipartition& mu);
// Inverse of partially_reduce at a given n; absent when n < affected().
std::optional<Multipartition> unreduce_partial(const Multipartition& mu, int n);
Multipartition multipartition_union(const Multipartition& a, const Multipartition& b);
std::vector<Multipartition> multipartitions_of(int k, int l);

// "[(2,1)@0;(1)@1]"; "(2,1)" is shorthand for a multipartition concentrated at 0.
std::string to_string(const Multipartition& m);
// Uses the shorthand when every part sits in component 0 and short_form is set.
std::string to_string(const Multipartition& m, bool short_form);
Multipartition parse_multipartition(std::string_view text);

}  // namespace wfh
