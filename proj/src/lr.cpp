#include "a3res/lr.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace a3res {

void RepSum::add(const Weight& w, long long mult) {
  if (mult == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }
}

long long RepSum::total_mult() const {
  long long s = 0;
  for (const auto& [w, m] : terms) s += m;
  return s;
}

Int RepSum::dimension() const {
  Int s = 0;
  for (const auto& [w, m] : terms) s += Int(m) * weyl_dimension(w);
  return s;
}

RepSum RepSum::single(const Weight& w, long long mult) {
  RepSum r;
  r.add(w, mult);
  return r;
}

Int weyl_dimension(const Weight& w) {
  const int n = static_cast<int>(w.size());
  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= w[i] - w[j] + j - i;
      den *= j - i;
    }
  if (den == 0) throw std::logic_error("weyl_dimension: zero denominator");
  Int q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dimension: non-integer result");
  return q;
}

namespace {

std::string key_of(const Partition& p) {
  std::string s;
  for (int x : p) {
    s += std::to_string(x);
    s += '.';
  }
  return s;
}

std::mutex g_cache_mutex;
std::unordered_map<std::string, long long> g_lr_cache;
std::unordered_map<std::string, long long> g_kostka_cache;

/// Counts Littlewood-Richardson skew tableaux of shape lambda/mu with content nu:
/// semistandard filling whose reverse reading word (rows top to bottom, each row
/// right to left) is a lattice word.
long long count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int R = static_cast<int>(lambda.size());
  const int K = static_cast<int>(nu.size());
  // cells in reverse reading order
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < R; ++r) {
    int lo = r < static_cast<int>(mu.size()) ? mu[r] : 0;
    for (int c = lambda[r] - 1; c >= lo; --c) cells.push_back({r, c});
  }
  std::vector<std::vector<int>> grid(R);
  for (int r = 0; r < R; ++r) grid[r].assign(lambda[r], 0);  // 0 = unfilled; values 1..K
  std::vector<int> counts(K + 1, 0);
  std::vector<int> remaining(K + 1, 0);
  for (int v = 1; v <= K; ++v) remaining[v] = nu[v - 1];

  long long total = 0;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[idx];
    // row constraint: value <= right neighbour (already filled, since rows go right to left)
    int hi = K;
    if (c + 1 < static_cast<int>(lambda[r])) hi = grid[r][c + 1];
    // column constraint: value > cell above (above cells fill in earlier rows)
    int lo = 1;
    if (r > 0) {
      int above_lo = r - 1 < static_cast<int>(mu.size()) ? mu[r - 1] : 0;
      if (c >= above_lo && c < lambda[r - 1]) lo = grid[r - 1][c] + 1;
    }
    for (int v = lo; v <= hi; ++v) {
      if (remaining[v] == 0) continue;
      if (v > 1 && counts[v] >= counts[v - 1]) continue;  // lattice word prefix condition
      grid[r][c] = v;
      ++counts[v];
      --remaining[v];
      rec(idx + 1);
      grid[r][c] = 0;
      --counts[v];
      ++remaining[v];
    }
  };
  rec(0);
  return total;
}

/// Number of semistandard tableaux of the given shape with content alpha
/// (alpha weakly decreasing); consumes the last content entry as a horizontal strip.
long long kostka_sorted(const Partition& lambda, Partition alpha) {
  while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
  if (alpha.empty()) return lambda.empty() ? 1 : 0;
  if (partition_size(lambda) != partition_size(alpha)) return 0;
  std::string key = key_of(lambda) + "|" + key_of(alpha);
  {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    auto it = g_kostka_cache.find(key);
    if (it != g_kostka_cache.end()) return it->second;
  }
  const int strip = alpha.back();
  Partition head(alpha.begin(), alpha.end() - 1);
  long long total = 0;
  // enumerate partitions inner with inner ⊆ lambda, lambda/inner a horizontal strip of size `strip`
  const int R = static_cast<int>(lambda.size());
  Partition inner(R, 0);
  std::function<void(int, int)> rec = [&](int row, int removed) {
    if (removed > strip) return;
    if (row == R) {
      if (removed == strip) {
        Partition in2 = inner;
        while (!in2.empty() && in2.back() == 0) in2.pop_back();
        total += kostka_sorted(in2, head);
      }
      return;
    }
    // inner[row] ranges: inner must stay a partition contained in lambda with
    // horizontal-strip condition: lambda[row+1] <= inner[row] <= lambda[row]
    int lo = row + 1 < R ? lambda[row + 1] : 0;
    int hi = lambda[row];
    if (row > 0) hi = std::min(hi, inner[row - 1]);
    for (int v = hi; v >= lo; --v) {
      inner[row] = v;
      rec(row + 1, removed + lambda[row] - v);
    }
    inner[row] = 0;
  };
  rec(0, 0);
  {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    g_kostka_cache.emplace(key, total);
  }
  return total;
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (partition_size(mu) + partition_size(nu) != partition_size(lambda)) return 0;
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  const Partition* a = &mu;
  const Partition* b = &nu;
  if (*b < *a) std::swap(a, b);  // c is symmetric in (mu, nu); canonicalize the key
  std::string key = key_of(lambda) + "|" + key_of(*a) + "|" + key_of(*b);
  {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    auto it = g_lr_cache.find(key);
    if (it != g_lr_cache.end()) return it->second;
  }
  long long v = count_lr_tableaux(lambda, *a, *b);
  {
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    g_lr_cache.emplace(key, v);
  }
  return v;
}

std::vector<std::tuple<Partition, Partition, long long>> schur_of_direct_sum(
    const Partition& lambda, int dimB, int dimC) {
  std::vector<std::tuple<Partition, Partition, long long>> out;
  const int size = partition_size(lambda);
  for (int i = 0; i <= size; ++i) {
    std::vector<std::tuple<Partition, Partition, long long>> layer;
    for (const Partition& mu : subpartitions_of_size(lambda, size - i)) {
      if (partition_rows(mu) > dimB) continue;
      for (const Partition& nu : subpartitions_of_size(lambda, i)) {
        if (partition_rows(nu) > dimC) continue;
        long long c = lr_coefficient(lambda, mu, nu);
        if (c > 0) layer.emplace_back(mu, nu, c);
      }
    }
    std::sort(layer.begin(), layer.end(), [](const auto& x, const auto& y) {
      if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
      return std::get<1>(x) > std::get<1>(y);
    });
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Partition> cauchy_exterior(int t, int dimV, int dimQ) {
  return partitions_of(t, dimV, dimQ);
}

long long kostka(const Partition& lambda, const std::vector<int>& content) {
  for (int x : content)
    if (x < 0) throw std::invalid_argument("kostka: negative content entry");
  std::vector<int> sorted = content;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
  return kostka_sorted(lambda, sorted);
}

long long weight_multiplicity(const Weight& gamma, const Weight& w) {
  if (gamma.size() != w.size()) throw std::invalid_argument("weight_multiplicity: length mismatch");
  if (!is_dominant(gamma)) throw std::invalid_argument("weight_multiplicity: gamma not dominant");
  int shift = 0;
  for (int x : gamma) shift = std::min(shift, x);
  for (int x : w) shift = std::min(shift, x);
  shift = -shift;
  Partition shape;
  std::vector<int> content;
  for (int x : gamma) shape.push_back(x + shift);
  for (int x : w) content.push_back(x + shift);
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  return kostka(shape, content);
}

RepSum tensor_decompose(const Weight& alpha, const Weight& beta, int n) {
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
    throw std::invalid_argument("tensor_decompose: weights must have length n");
  if (!is_dominant(alpha) || !is_dominant(beta))
    throw std::invalid_argument("tensor_decompose: weights must be dominant");
  if (n == 0) return RepSum::single(Weight{}, 1);
  const int ka = std::max(0, -alpha[n - 1]);
  const int kb = std::max(0, -beta[n - 1]);
  Partition A, B;
  for (int x : alpha) A.push_back(x + ka);
  for (int x : beta) B.push_back(x + kb);
  while (!A.empty() && A.back() == 0) A.pop_back();
  while (!B.empty() && B.back() == 0) B.pop_back();

  RepSum out;
  const int total = partition_size(A) + partition_size(B);
  // candidates: partitions λ of `total` with at most n rows, A ⊆ λ, λ_1 ≤ A_1 + B_1
  std::function<void(int, int, Partition&)> rec = [&](int row, int placed, Partition& cur) {
    const int rem = total - placed;
    if (rem == 0) {
      if (contains(cur, A)) {
        long long c = lr_coefficient(cur, A, B);
        if (c > 0) {
          Weight w = pad_to(cur, n);
          for (int& x : w) x -= ka + kb;
          out.add(w, c);
        }
      }
      return;
    }
    if (row == n) return;
    int hi = row == 0 ? (A.empty() ? 0 : A[0]) + (B.empty() ? 0 : B[0]) : cur[row - 1];
    hi = std::min(hi, rem);
    const int minA = row < static_cast<int>(A.size()) ? A[row] : 0;
    for (int v = hi; v >= std::max(minA, 1); --v) {
      if (static_cast<long long>(v) * (n - row) < rem) break;  // cannot absorb the rest
      cur.push_back(v);
      rec(row + 1, placed + v, cur);
      cur.pop_back();
    }
  };
  Partition cur;
  rec(0, 0, cur);
  return out;
}

RepSum tensor_decompose(const RepSum& a, const RepSum& b) {
  RepSum out;
  for (const auto& [wa, ma] : a.terms)
    for (const auto& [wb, mb] : b.terms) {
      if (wa.size() != wb.size())
        throw std::invalid_argument("tensor_decompose: mixed weight lengths");
      RepSum prod = tensor_decompose(wa, wb, static_cast<int>(wa.size()));
      for (const auto& [w, m] : prod.terms) out.add(w, m * ma * mb);
    }
  return out;
}

bool load_combinatorics_cache(const std::string& path, std::string& err) {
  std::ifstream in(path);
  if (!in) {
    err = "cannot open cache file: " + path;
    return false;
  }
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind, key;
    long long value;
    if (!(ss >> kind >> key >> value) || value < 0 ||
        (kind != "lr" && kind != "kostka")) {
      err = "malformed cache record at line " + std::to_string(lineno);
      return false;
    }
    // validate the key shape: dot-separated non-negative ints with '|' separators
    int bars = 0;
    for (char ch : key) {
      if (ch == '|') ++bars;
      else if (ch != '.' && !isdigit(static_cast<unsigned char>(ch))) {
        err = "malformed cache key at line " + std::to_string(lineno);
        return false;
      }
    }
    if ((kind == "lr" && bars != 2) || (kind == "kostka" && bars != 1)) {
      err = "malformed cache key at line " + std::to_string(lineno);
      return false;
    }
    if (kind == "lr") g_lr_cache.emplace(key, value);
    else g_kostka_cache.emplace(key, value);
  }
  return true;
}

bool save_combinatorics_cache(const std::string& path, std::string& err) {
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    err = "cannot write cache file: " + path;
    return false;
  }
  for (const auto& [k, v] : g_lr_cache) out << "lr " << k << " " << v << "\n";
  for (const auto& [k, v] : g_kostka_cache) out << "kostka " << k << " " << v << "\n";
  return static_cast<bool>(out);
}

size_t combinatorics_cache_size() {
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  return g_lr_cache.size() + g_kostka_cache.size();
}

}  // namespace a3res
