#include "gct/partitions.hpp"

#include "gct/rational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gct {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::uint64_t to_u64(const Integer& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw std::overflow_error("count does not fit in 64 bits");
  return std::stoull(v.get_str());
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(parts_); }

Partition Partition::from_padded(std::span<const int> parts) {
  std::vector<int> v(parts.begin(), parts.end());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
    parts.push_back(std::stoi(std::string(token)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> cols(parts_.empty() ? 0 : parts_.front(), 0);
  for (int row : parts_)
    for (int c = 0; c < row; ++c) ++cols[c];
  return Partition(std::move(cols));
}

Partition Partition::scaled(int k) const {
  if (k < 0) throw std::invalid_argument("negative scale factor");
  if (k == 0) return Partition();
  std::vector<int> v = parts_;
  for (int& x : v) x *= k;
  return Partition(std::move(v));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool is_even(const Partition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
}

std::vector<Partition> partitions_of(int n, std::size_t max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (current.size() == max_length) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.length()) throw std::invalid_argument("tableau row count differs from shape");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_[r])
      throw std::invalid_argument("tableau row length differs from shape");
    for (int x : rows_[r])
      if (x < 1) throw std::invalid_argument("tableau entries must be positive");
  }
}

std::vector<int> Tableau::column(std::size_t c) const {
  std::vector<int> col;
  for (const auto& row : rows_) {
    if (c < row.size()) col.push_back(row[c]);
  }
  return col;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c - 1] > rows_[r][c]) return false;
      if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::content(int max_entry) const {
  std::vector<int> out(static_cast<std::size_t>(std::max(max_entry, 0)), 0);
  for (const auto& row : rows_)
    for (int x : row) {
      if (x > max_entry) throw std::invalid_argument("tableau entry exceeds alphabet");
      ++out[static_cast<std::size_t>(x - 1)];
    }
  return out;
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) s += '/';
    for (int x : rows_[r]) {
      if (x >= 10) s += '(' + std::to_string(x) + ')';
      else s += static_cast<char>('0' + x);
    }
  }
  return s;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  if (shape.length() > static_cast<std::size_t>(std::max(max_entry, 0))) return out;
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  const std::size_t nrows = rows.size();
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == nrows) {
      out.emplace_back(shape, rows);
      return;
    }
    if (c == rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    // Entries below need room: row r at column c leaves (nrows_in_col - r - 1) cells.
    int col_height = 0;
    for (std::size_t rr = 0; rr < nrows; ++rr)
      if (rows[rr].size() > c) ++col_height;
    const int hi = max_entry - (col_height - static_cast<int>(r) - 1);
    for (int v = lo; v <= hi; ++v) {
      rows[r][c] = v;
      fill(r, c + 1);
    }
    rows[r][c] = 0;
  };
  fill(0, 0);
  return out;
}

std::uint64_t kostka(const Partition& lambda, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("content entries must be nonnegative");
    total += c;
  }
  if (total != lambda.size()) throw std::invalid_argument("content size differs from shape size");

  // Peel horizontal strips of the largest entry off the shape.
  std::function<std::uint64_t(const std::vector<int>&, std::size_t)> rec =
      [&](const std::vector<int>& shape, std::size_t letters) -> std::uint64_t {
    if (letters == 0) {
      return std::all_of(shape.begin(), shape.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    // A column of height h needs h distinct letters.
    std::size_t height = 0;
    while (height < shape.size() && shape[height] > 0) ++height;
    if (height > letters) return 0;
    const int strip = content[letters - 1];
    std::uint64_t sum = 0;
    std::vector<int> inner = shape;
    std::function<void(std::size_t, int)> choose = [&](std::size_t row, int left) {
      if (row == shape.size()) {
        if (left == 0) sum += rec(inner, letters - 1);
        return;
      }
      const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
      const int max_take = std::min(left, shape[row] - below);
      for (int take = 0; take <= max_take; ++take) {
        inner[row] = shape[row] - take;
        choose(row + 1, left - take);
      }
      inner[row] = shape[row];
    };
    choose(0, strip);
    return sum;
  };
  return rec(lambda.parts(), content.size());
}

std::uint64_t dim_weyl(const Partition& lambda, int n) {
  if (lambda.length() > static_cast<std::size_t>(std::max(n, 0))) return 0;
  const Partition conj = lambda.conjugate();
  Integer num = 1;
  Integer den = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int content = j - static_cast<int>(i);
      const int hook = (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
      num *= n + content;
      den *= hook;
    }
  }
  return to_u64(num / den);
}

std::uint64_t count_standard_tableaux(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer num = 1;
  Integer den = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      den *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
  return to_u64(num / den);
}

}  // namespace gct
