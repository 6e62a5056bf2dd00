#include "schurq/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace schurq {

int weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool is_partition(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition to_partition(const Composition& c) {
  Partition p = c;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!is_partition(p)) throw CombinatError("not a partition: " + format_parts(c));
  return p;
}

Composition pad(const Composition& c, std::size_t n) {
  Composition out(n, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < n)
      out[i] = c[i];
    else if (c[i] != 0)
      throw CombinatError(format_parts(c) + " has more than " + std::to_string(n) + " nonzero parts");
  }
  return out;
}

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> out;
  std::string_view s = text;
  if (!s.empty() && s.front() == '[') s.remove_prefix(1);
  if (!s.empty() && s.back() == ']') s.remove_suffix(1);
  if (s.empty()) return out;
  while (true) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || v < 0) throw CombinatError("malformed part list '" + std::string(text) + "'");
    out.push_back(v);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    if (s.empty()) break;
    if (s.front() != ',') throw CombinatError("malformed part list '" + std::string(text) + "'");
    s.remove_prefix(1);
  }
  return out;
}

std::string format_parts(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::vector<Composition> compositions(int n, int d) {
  if (n < 1 || d < 0) throw CombinatError("compositions need n >= 1 and d >= 0");
  std::vector<Composition> out;
  Composition cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

std::vector<Partition> partitions(int d, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Partition> partitions(int d) { return partitions(d, std::max(d, 1)); }

Partition conjugate(const Partition& lambda) {
  Partition c;
  if (lambda.empty()) return c;
  for (int i = 1; i <= lambda[0]; ++i) {
    int cnt = 0;
    for (int p : lambda)
      if (p >= i) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

std::vector<int> sigma_perm(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  std::vector<int> col_start(conj.size() + 1, 0);
  for (std::size_t j = 0; j < conj.size(); ++j) col_start[j + 1] = col_start[j] + conj[j];
  std::vector<int> sigma;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) sigma.push_back(col_start[static_cast<std::size_t>(j)] + static_cast<int>(i) + 1);
  return sigma;
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(b.size());
  for (std::size_t r = 0; r < b.size(); ++r) c[r] = a[static_cast<std::size_t>(b[r] - 1)];
  return c;
}

std::vector<int> inverse_perm(const std::vector<int>& a) {
  std::vector<int> inv(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) inv[static_cast<std::size_t>(a[r] - 1)] = static_cast<int>(r) + 1;
  return inv;
}

int perm_sign(const std::vector<int>& a) {
  int s = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) s = -s;
  return s;
}

bool dominance_leq(const Composition& mu, const Composition& lambda) {
  if (weight(mu) != weight(lambda)) throw CombinatError("dominance_leq: weights differ");
  int sm = 0, sl = 0;
  std::size_t len = std::max(mu.size(), lambda.size());
  for (std::size_t r = 0; r < len; ++r) {
    sm += r < mu.size() ? mu[r] : 0;
    sl += r < lambda.size() ? lambda[r] : 0;
    if (sm > sl) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const Composition& mu, const Composition& lambda) {
  std::size_t len = std::max(mu.size(), lambda.size());
  for (std::size_t r = 0; r < len; ++r) {
    int a = r < mu.size() ? mu[r] : 0;
    int b = r < lambda.size() ? lambda[r] : 0;
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::optional<Partition> lex_successor(const Partition& lambda) {
  auto all = partitions(weight(lambda));
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == lambda) return i == 0 ? std::nullopt : std::optional<Partition>(all[i - 1]);
  throw CombinatError("lex_successor: not a partition");
}

std::optional<Partition> lex_predecessor(const Partition& lambda) {
  auto all = partitions(weight(lambda));
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == lambda) return i + 1 == all.size() ? std::nullopt : std::optional<Partition>(all[i + 1]);
  throw CombinatError("lex_predecessor: not a partition");
}

bool Filling::is_semistandard() const {
  if (rows.size() != shape.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape[i]) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j && rows[i][j] < rows[i][j - 1]) return false;
      if (i && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

Composition Filling::content(std::size_t n) const {
  Composition c(n, 0);
  for (const auto& r : rows)
    for (int v : r) {
      if (v < 1 || static_cast<std::size_t>(v) > n) throw CombinatError("tableau entry out of range");
      ++c[static_cast<std::size_t>(v - 1)];
    }
  return c;
}

std::vector<Filling> tableaux(const Partition& lambda, const Composition& content) {
  if (weight(lambda) != weight(content)) throw CombinatError("tableaux: weights differ");
  if (!is_partition(lambda)) throw CombinatError("tableaux: shape is not a partition");
  std::vector<Filling> out;
  const std::size_t L = lambda.size();
  Filling cur{lambda, std::vector<std::vector<int>>(L)};
  // Place value v as a horizontal strip on top of the current shape.
  std::function<void(std::size_t)> place_value;
  std::function<void(std::size_t, std::size_t, int, const std::vector<int>&)> strip;
  strip = [&](std::size_t v, std::size_t row, int left, const std::vector<int>& old) {
    if (row == L) {
      if (left == 0) place_value(v + 1);
      return;
    }
    int have = static_cast<int>(cur.rows[row].size());
    int cap = lambda[row] - have;
    if (row > 0) cap = std::min(cap, old[row - 1] - have);
    cap = std::min(cap, left);
    for (int k = cap; k >= 0; --k) {
      for (int t = 0; t < k; ++t) cur.rows[row].push_back(static_cast<int>(v) + 1);
      strip(v, row + 1, left - k, old);
      for (int t = 0; t < k; ++t) cur.rows[row].pop_back();
    }
  };
  place_value = [&](std::size_t v) {
    if (v == content.size()) {
      out.push_back(cur);
      return;
    }
    std::vector<int> old(L);
    for (std::size_t i = 0; i < L; ++i) old[i] = static_cast<int>(cur.rows[i].size());
    strip(v, 0, content[v], old);
  };
  place_value(0);
  return out;
}

std::int64_t kostka(const Partition& lambda, const Composition& mu) {
  return static_cast<std::int64_t>(tableaux(lambda, mu).size());
}

std::vector<Filling> semistandard_tableaux(const Partition& lambda, int n) {
  std::vector<Filling> out;
  for (const auto& mu : compositions(n, weight(lambda))) {
    auto t = tableaux(lambda, mu);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

MarginMatrix::MarginMatrix(int r, int c, std::vector<int> entries) : rows(r), cols(c), a(std::move(entries)) {
  if (a.size() != static_cast<std::size_t>(r * c)) throw CombinatError("margin matrix entry count");
}

Composition MarginMatrix::row_sums() const {
  Composition s(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) s[static_cast<std::size_t>(i)] += (*this)(i, j);
  return s;
}

Composition MarginMatrix::col_sums() const {
  Composition s(static_cast<std::size_t>(cols), 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) s[static_cast<std::size_t>(j)] += (*this)(i, j);
  return s;
}

int MarginMatrix::total() const { return std::accumulate(a.begin(), a.end(), 0); }

MarginMatrix MarginMatrix::transpose() const {
  MarginMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MarginMatrix MarginMatrix::diagonal(const Composition& c) {
  int n = static_cast<int>(c.size());
  MarginMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c[static_cast<std::size_t>(i)];
  return m;
}

MarginMatrix MarginMatrix::padded(int r, int c) const {
  MarginMatrix out(r, c);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if ((*this)(i, j) == 0) continue;
      if (i >= r || j >= c) throw CombinatError("padded: nonzero entry outside the new shape");
      out(i, j) = (*this)(i, j);
    }
  return out;
}

std::vector<MarginMatrix> margin_matrices(const Composition& lambda, const Composition& mu) {
  if (weight(lambda) != weight(mu)) throw CombinatError("margin_matrices: weights differ");
  const int R = static_cast<int>(lambda.size()), C = static_cast<int>(mu.size());
  std::vector<MarginMatrix> out;
  MarginMatrix cur(R, C);
  std::vector<int> colleft(mu.begin(), mu.end());
  std::function<void(int, int, int)> rec = [&](int i, int j, int rowleft) {
    if (i == R) {
      out.push_back(cur);
      return;
    }
    if (j == C - 1) {
      if (rowleft > colleft[static_cast<std::size_t>(j)]) return;
      cur(i, j) = rowleft;
      colleft[static_cast<std::size_t>(j)] -= rowleft;
      if (i + 1 < R)
        rec(i + 1, 0, lambda[static_cast<std::size_t>(i + 1)]);
      else if (colleft[static_cast<std::size_t>(j)] == 0)
        rec(R, 0, 0);
      colleft[static_cast<std::size_t>(j)] += rowleft;
      cur(i, j) = 0;
      return;
    }
    int cap = std::min(rowleft, colleft[static_cast<std::size_t>(j)]);
    for (int v = cap; v >= 0; --v) {
      cur(i, j) = v;
      colleft[static_cast<std::size_t>(j)] -= v;
      rec(i, j + 1, rowleft - v);
      colleft[static_cast<std::size_t>(j)] += v;
    }
    cur(i, j) = 0;
  };
  if (R == 0 || C == 0) {
    if (weight(lambda) == 0) out.push_back(cur);
    return out;
  }
  rec(0, 0, lambda[0]);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

CompositionIndex::CompositionIndex(int n, int d) : n_(n), d_(d), all_(compositions(n, d)) {
  for (std::size_t i = 0; i < all_.size(); ++i) idx_.emplace(all_[i], i);
}

std::size_t CompositionIndex::index(const Composition& c) const {
  auto it = idx_.find(c);
  if (it == idx_.end()) throw CombinatError("composition " + format_parts(c) + " not in Lambda(n,d)");
  return it->second;
}

}  // namespace schurq
