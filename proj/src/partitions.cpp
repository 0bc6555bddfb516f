#include "a3res/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace a3res {

bool is_partition_vec(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition make_partition(std::vector<int> parts) {
  if (!is_partition_vec(parts)) {
    throw std::invalid_argument("not a partition: entries must be weakly decreasing and non-negative");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

int part_at(const Partition& p, int i) {
  if (i < 1) throw std::invalid_argument("part index is 1-based");
  return i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

int partition_rows(const Partition& p) {
  int r = 0;
  for (int x : p)
    if (x > 0) ++r;
  return r;
}

Partition conjugate(const Partition& p) {
  Partition q;
  int rows = partition_rows(p);
  if (rows == 0) return q;
  q.resize(p[0], 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < p[i]; ++j) ++q[j];
  return q;
}

int durfee(const Partition& p) {
  int u = 0;
  while (u < static_cast<int>(p.size()) && p[u] >= u + 1) ++u;
  return u;
}

DurfeeSplit durfee_split(const Partition& p) {
  DurfeeSplit d;
  d.u = durfee(p);
  for (int i = 0; i < d.u; ++i)
    if (p[i] - d.u > 0) d.arms.push_back(p[i] - d.u);
  for (size_t i = d.u; i < p.size(); ++i)
    if (p[i] > 0) d.legs.push_back(p[i]);
  return d;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == 0) continue;
    if (i >= outer.size() || outer[i] < inner[i]) return false;
  }
  return true;
}

bool fits_in_box(const Partition& p, int rows, int cols) {
  if (partition_rows(p) > rows) return false;
  return p.empty() || p[0] <= cols;
}

namespace {
void partitions_of_rec(int t, int rows, int maxPart, Partition& cur,
                       std::vector<Partition>& out) {
  if (t == 0) {
    out.push_back(cur);
    return;
  }
  if (rows == 0) return;
  for (int first = std::min(maxPart, t); first >= 1; --first) {
    if (static_cast<long long>(first) * rows < t) break;
    cur.push_back(first);
    partitions_of_rec(t - first, rows - 1, first, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int t, int rows, int cols) {
  std::vector<Partition> out;
  if (t < 0) return out;
  Partition cur;
  partitions_of_rec(t, rows, cols, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int t = 0; t <= rows * cols; ++t) {
    auto part = partitions_of(t, rows, cols);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {
void subparts_rec(const Partition& p, int row, int t, int prev, Partition& cur,
                  std::vector<Partition>& out) {
  if (t == 0) {
    out.push_back(cur);
    return;
  }
  if (row >= static_cast<int>(p.size())) return;
  int hi = std::min({prev, p[row], t});
  for (int x = hi; x >= 1; --x) {
    cur.push_back(x);
    subparts_rec(p, row + 1, t - x, x, cur, out);
    cur.pop_back();
  }
  // skipping this row entirely means all later rows are skipped too (parts would be 0)
}
}  // namespace

std::vector<Partition> subpartitions_of_size(const Partition& p, int t) {
  std::vector<Partition> out;
  if (t < 0 || t > partition_size(p)) return out;
  Partition cur;
  subparts_rec(p, 0, t, t == 0 ? 0 : p.empty() ? 0 : p[0], cur, out);
  return out;
}

std::optional<BottResult> bott_normalize(const std::vector<int>& delta) {
  const int m = static_cast<int>(delta.size());
  std::vector<int> s(m);
  for (int i = 0; i < m; ++i) s[i] = delta[i] + (m - 1 - i);
  int inversions = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (s[i] == s[j]) return std::nullopt;
      if (s[i] < s[j]) ++inversions;
    }
  }
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  Weight tau(m);
  for (int i = 0; i < m; ++i) tau[i] = sorted[i] - (m - 1 - i);
  return BottResult{inversions, tau};
}

bool is_dominant(const Weight& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

Weight pad_to(const Partition& p, int n) {
  if (static_cast<int>(p.size()) > n) {
    // allow stored trailing zeros beyond n
    for (size_t i = n; i < p.size(); ++i)
      if (p[i] != 0) throw std::invalid_argument("partition has more than n rows");
  }
  Weight w(n, 0);
  for (size_t i = 0; i < p.size() && i < static_cast<size_t>(n); ++i) w[i] = p[i];
  return w;
}

Weight dual_weight(const Weight& w) {
  Weight d(w.rbegin(), w.rend());
  for (int& x : d) x = -x;
  return d;
}

std::string join_csv(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::optional<std::vector<int>> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) return std::nullopt;
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) return std::nullopt;
      out.push_back(v);
    } catch (...) {
      return std::nullopt;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace a3res
