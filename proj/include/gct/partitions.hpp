#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gct {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// legal and labels the trivial representation.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Accepts trailing zeros and drops them; anything else non-decreasing
  /// or negative throws std::invalid_argument.
  static Partition from_padded(std::span<const int> parts);

  /// Parses "4,2,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Part i, or 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  Partition scaled(int k) const;
  /// Row-wise containment of Young diagrams.
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

bool is_even(const Partition& p);

/// All partitions of n, optionally with at most max_length parts, in
/// decreasing lexicographic order (so (n) comes first).
std::vector<Partition> partitions_of(int n, std::size_t max_length = SIZE_MAX);

/// Filling of a Young diagram by positive integers, stored row by row.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

  /// Entries of column c from top to bottom.
  std::vector<int> column(std::size_t c) const;

  bool is_semistandard() const;
  /// Multiplicity of each entry 1..max_entry.
  std::vector<int> content(int max_entry) const;

  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Semistandard tableaux of the given shape with entries in 1..max_entry,
/// ordered lexicographically by row-major reading word.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

/// Number of semistandard tableaux of shape lambda with the given content.
/// Throws std::invalid_argument when the sizes differ or content is negative.
std::uint64_t kostka(const Partition& lambda, std::span<const int> content);

/// Dimension of the GL_n Weyl module V_lambda (hook-content formula).
std::uint64_t dim_weyl(const Partition& lambda, int n);

/// Number of standard Young tableaux of the given shape (hook length formula).
std::uint64_t count_standard_tableaux(const Partition& lambda);

}  // namespace gct
