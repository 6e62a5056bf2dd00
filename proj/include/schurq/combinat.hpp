#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schurq {

/// Nonnegative integer sequence of fixed length; element of Lambda(n, d).
using Composition = std::vector<int>;
/// Weakly decreasing positive parts, no trailing zeros.
using Partition = std::vector<int>;

class CombinatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int weight(const Composition& c);
bool is_partition(const std::vector<int>& p);
/// Drop trailing zeros; throws unless the result is a partition.
Partition to_partition(const Composition& c);
/// Pad with zeros to length n; throws if c has nonzero entries past n.
Composition pad(const Composition& c, std::size_t n);
/// Parse "3,2,1" or "[3,2,1]".
std::vector<int> parse_parts(std::string_view text);
std::string format_parts(const std::vector<int>& p);

/// Lambda(n, d) in lexicographically descending order.
std::vector<Composition> compositions(int n, int d);
/// Partitions of d in lexicographically descending order, (d) first.
std::vector<Partition> partitions(int d);
/// Partitions of d with at most n parts, lexicographically descending.
std::vector<Partition> partitions(int d, int max_parts);

Partition conjugate(const Partition& lambda);
/// One-based images sigma(1), ..., sigma(d).
std::vector<int> sigma_perm(const Partition& lambda);
std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> inverse_perm(const std::vector<int>& a);
int perm_sign(const std::vector<int>& a);

bool dominance_leq(const Composition& mu, const Composition& lambda);
std::strong_ordering lex_compare(const Composition& mu, const Composition& lambda);
/// Next partition in lex order, or nullopt for +infinity.
std::optional<Partition> lex_successor(const Partition& lambda);
/// Previous partition in lex order, or nullopt for -infinity.
std::optional<Partition> lex_predecessor(const Partition& lambda);

struct Filling {
  Partition shape;
  std::vector<std::vector<int>> rows;  // entries are 1-based
  bool is_semistandard() const;
  Composition content(std::size_t n) const;
  friend bool operator==(const Filling&, const Filling&) = default;
};

/// Semistandard tableaux of shape lambda and the given content, in a fixed order.
std::vector<Filling> tableaux(const Partition& lambda, const Composition& content);
std::int64_t kostka(const Partition& lambda, const Composition& mu);
/// All semistandard tableaux of shape lambda with entries at most n.
std::vector<Filling> semistandard_tableaux(const Partition& lambda, int n);

struct MarginMatrix {
  int rows = 0, cols = 0;
  std::vector<int> a;  // row-major

  MarginMatrix() = default;
  MarginMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
  MarginMatrix(int r, int c, std::vector<int> entries);

  int& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
  Composition row_sums() const;
  Composition col_sums() const;
  int total() const;
  MarginMatrix transpose() const;
  static MarginMatrix diagonal(const Composition& c);
  /// Zero-extended to r x c; throws if that would drop a nonzero entry.
  MarginMatrix padded(int r, int c) const;

  friend bool operator==(const MarginMatrix&, const MarginMatrix&) = default;
  friend auto operator<=>(const MarginMatrix&, const MarginMatrix&) = default;
};

/// Nonnegative matrices with row sums lambda and column sums mu, in
/// lexicographically descending row-major order.
std::vector<MarginMatrix> margin_matrices(const Composition& lambda, const Composition& mu);

std::int64_t binomial(std::int64_t n, std::int64_t k);
std::int64_t factorial(int n);

/// Index lookup for the canonical enumeration of Lambda(n, d).
class CompositionIndex {
 public:
  CompositionIndex() = default;
  CompositionIndex(int n, int d);
  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Composition>& all() const { return all_; }
  std::size_t size() const { return all_.size(); }
  std::size_t index(const Composition& c) const;
  const Composition& operator[](std::size_t i) const { return all_[i]; }

 private:
  int n_ = 0, d_ = 0;
  std::vector<Composition> all_;
  std::map<Composition, std::size_t> idx_;
};

}  // namespace schurq
