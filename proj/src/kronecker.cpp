#include "gct/kronecker.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gct {

namespace {

// Beta-set of lambda with `beads` beads: lambda_i + (beads - 1 - i).
std::vector<int> beta_set(const Partition& p, int beads) {
  std::vector<int> b(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i) b[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] + (beads - 1 - i);
  return b;
}

Partition from_beta_set(const std::vector<int>& b) {
  const int beads = static_cast<int>(b.size());
  std::vector<int> parts(b.size());
  for (int i = 0; i < beads; ++i) parts[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] - (beads - 1 - i);
  return Partition::from_padded(parts);
}

// Column chi_.(mu): start from the empty shape and add one rim hook per part
// of mu; each hook of height h contributes (-1)^h.
std::map<Partition, std::int64_t> character_column(const Partition& mu, int n) {
  const int beads = std::max(n, 1);
  std::map<std::vector<int>, std::int64_t> states{{beta_set(Partition(), beads), 1}};
  for (int r : mu.parts()) {
    std::map<std::vector<int>, std::int64_t> next;
    for (const auto& [beta, value] : states) {
      // Beads are stored in decreasing order.
      for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] + r;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta) between += (b > beta[i] && b < target) ? 1 : 0;
        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        next[moved] += (between % 2 == 0) ? value : -value;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    states = std::move(next);
  }
  std::map<Partition, std::int64_t> out;
  for (const auto& [beta, value] : states) out[from_beta_set(beta)] = value;
  return out;
}

Integer centralizer_order(const Partition& mu) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int part : mu.parts()) ++mult[part];
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n), partitions_(partitions_of(n)), order_(1) {
  if (n < 0) throw std::invalid_argument("negative symmetric group degree");
  for (int i = 2; i <= n; ++i) order_ *= i;
  values_.assign(partitions_.size(), std::vector<std::int64_t>(partitions_.size(), 0));
  for (std::size_t c = 0; c < partitions_.size(); ++c) {
    class_sizes_.push_back(order_ / centralizer_order(partitions_[c]));
    const auto column = character_column(partitions_[c], n);
    for (std::size_t r = 0; r < partitions_.size(); ++r) {
      const auto it = column.find(partitions_[r]);
      if (it != column.end()) values_[r][c] = it->second;
    }
  }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  // partitions_ is in decreasing lexicographic order.
  const auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p, std::greater<>());
  if (it == partitions_.end() || *it != p) throw std::invalid_argument("partition " + p.to_string() + " is not of size " + std::to_string(n_));
  return static_cast<std::size_t>(it - partitions_.begin());
}

std::shared_ptr<const CharacterTable> character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CharacterTable>(n);
  return slot;
}

std::int64_t sym_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character: |lambda| = " + std::to_string(lambda.size()) +
                                " differs from |mu| = " + std::to_string(mu.size()));
  const auto table = character_table(lambda.size());
  return table->value(table->index_of(lambda), table->index_of(mu));
}

std::uint64_t kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size())
    throw std::invalid_argument("kronecker: partitions of different sizes");
  const auto table = character_table(lambda.size());
  const auto a = table->index_of(lambda), b = table->index_of(mu), c = table->index_of(nu);
  Integer sum = 0;
  for (std::size_t k = 0; k < table->partitions().size(); ++k) {
    Integer term = table->class_size(k);
    term *= static_cast<long>(table->value(a, k));
    term *= static_cast<long>(table->value(b, k));
    term *= static_cast<long>(table->value(c, k));
    sum += term;
  }
  if (!mpz_divisible_p(sum.get_mpz_t(), table->group_order().get_mpz_t()) || sum < 0)
    throw std::logic_error("kronecker: character sum is not a nonnegative multiple of n!");
  const Integer g = sum / table->group_order();
  return std::stoull(g.get_str());
}

std::uint64_t det_stabilizer_invariant_mult(const Partition& lambda, int m, int table_cap) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (lambda.length() > static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
    throw std::invalid_argument("length of " + lambda.to_string() + " exceeds m^2 = " + std::to_string(m * m));
  if (lambda.size() % m != 0) return 0;
  if (lambda.size() > table_cap)
    throw std::invalid_argument("|lambda| = " + std::to_string(lambda.size()) + " exceeds character table budget " +
                                std::to_string(table_cap));
  const int width = lambda.size() / m;
  const Partition rect = width == 0 ? Partition() : Partition(std::vector<int>(static_cast<std::size_t>(m), width));
  return kronecker(lambda, rect, rect);
}

GStretchSeries g_stretch(const Partition& lambda, int m, int max_k, int table_cap, const FitOptions& options) {
  if (max_k < 1) throw std::invalid_argument("max_k must be positive");
  for (int k = 1; k <= max_k; ++k) {
    if (k * lambda.size() > table_cap)
      throw std::invalid_argument("character table budget " + std::to_string(table_cap) + " exceeded at k=" +
                                  std::to_string(k) + " (|k lambda| = " + std::to_string(k * lambda.size()) + ")");
  }
  GStretchSeries series{lambda, m, {}, std::nullopt};
  for (int k = 1; k <= max_k; ++k)
    series.values.push_back(det_stabilizer_invariant_mult(lambda.scaled(k), m, table_cap));
  if (max_k > options.holdout + options.skip_prefix) {
    try {
      series.fit = fit_quasipolynomial(series.values, options);
    } catch (const std::domain_error&) {
      // No fit within bounds; the raw values are still reported.
    }
  }
  return series;
}

}  // namespace gct
