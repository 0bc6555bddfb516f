#include "a3res/schurcx.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "a3res/bott.hpp"
#include "a3res/lr.hpp"

namespace a3res {
namespace {

// ===========================================================================
// Monomial words.
//
// A basis monomial of the graded tensor power is a word of letters, one per
// cell of the shapes involved. Each letter is a pair (index in 1..n, parity);
// parity 1 marks the letters belonging to the odd space. A word is packed
// into a 128-bit key, 5 bits per slot: (index << 1) | parity. Index 0 is a
// hole (used for contraction residues only).
// ===========================================================================

using Key = unsigned __int128;
using WordVec = std::vector<uint8_t>;

constexpr int kMaxSlots = 25;
constexpr int kMaxLetters = 15;

Key pack_word(const WordVec& w) {
  Key k = 0;
  for (int s = static_cast<int>(w.size()) - 1; s >= 0; --s) k = (k << 5) | w[s];
  return k;
}

WordVec unpack_word(Key k, int slots) {
  WordVec w(slots);
  for (int s = 0; s < slots; ++s) {
    w[s] = static_cast<uint8_t>(k & 0x1f);
    k >>= 5;
  }
  return w;
}

// Sparse vectors over the monomial basis, sorted by key, zero-free.
using SV = std::vector<std::pair<Key, Int>>;
using SVR = std::vector<std::pair<Key, Rat>>;

template <typename C>
std::vector<std::pair<Key, C>> flatten(std::map<Key, C>& acc) {
  std::vector<std::pair<Key, C>> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!(c == 0)) out.emplace_back(k, std::move(c));
  return out;
}

// Sorts an unmerged list of (key, coefficient) contributions, merges equal
// keys, and prunes zeros. Cheaper than accumulating through a std::map.
SV flatten_vec(std::vector<std::pair<Key, Int>>&& acc) {
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SV out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.emplace_back(k, std::move(c));
  }
  std::erase_if(out, [](const auto& p) { return p.second == 0; });
  return out;
}

SVR to_rational(const SV& v) {
  SVR r;
  r.reserve(v.size());
  for (const auto& [k, c] : v) r.emplace_back(k, Rat(c));
  return r;
}

// Clears denominators and divides by the content, yielding a primitive
// integer vector spanning the same line.
SV scale_to_int(const SVR& v) {
  Int l = 1;
  for (const auto& [k, c] : v) l = lcm(l, Int(denominator(c)));
  SV out;
  out.reserve(v.size());
  Int g = 0;
  for (const auto& [k, c] : v) {
    Int x = Int(numerator(c)) * (l / Int(denominator(c)));
    g = gcd(g, x);
    out.emplace_back(k, std::move(x));
  }
  if (g > 1)
    for (auto& [k, x] : out) x /= g;
  return out;
}

// fa*a - fb*b for sorted sparse integer vectors.
SV combine_int(const SV& a, const Int& fa, const SV& b, const Int& fb) {
  SV out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, fa * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -fb * b[j].second);
      ++j;
    } else {
      Int c = fa * a[i].second - fb * b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i, ++j;
    }
  }
  return out;
}

// Divides a sparse integer vector by the gcd of its entries.
void reduce_content(SV& v) {
  Int g = 0;
  for (const auto& [k, c] : v) {
    g = gcd(g, c);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [k, c] : v) c /= g;
}

Int dot(const SV& a, const SV& b) {
  Int s = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (b[j].first < a[i].first)
      ++j;
    else {
      s += a[i].second * b[j].second;
      ++i, ++j;
    }
  }
  return s;
}

// Row echelon over monomial keys; pivots are the smallest keys. Rows are
// primitive integer vectors (content 1, positive leading coefficient);
// elimination cross-multiplies by the cofactors of the leading coefficients
// and reduces the content once per step, avoiding rational normalization.
struct KeyEchelon {
  std::map<Key, SV> rows;

  bool insert(SV v) {
    while (!v.empty()) {
      auto it = rows.find(v.front().first);
      if (it == rows.end()) break;
      const SV& p = it->second;
      Int g = gcd(v.front().second, p.front().second);
      v = combine_int(v, p.front().second / g, p, v.front().second / g);
      reduce_content(v);
    }
    if (v.empty()) return false;
    reduce_content(v);
    if (v.front().second < 0)
      for (auto& [k, c] : v) c = -c;
    Key pivot = v.front().first;
    rows.emplace(pivot, std::move(v));
    return true;
  }
};

// Row echelon over integer-indexed variables, used for constraint kernels.
// Rows are primitive integer vectors with positive leading coefficient,
// eliminated with the same integer-scaled scheme as KeyEchelon.
struct VarEchelon {
  using IRow = std::vector<std::pair<int, Int>>;
  std::map<int, IRow> rows;  // pivot var -> primitive row

  static void reduce(IRow& v) {
    Int g = 0;
    for (const auto& [j, c] : v) {
      g = gcd(g, c);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& [j, c] : v) c /= g;
  }

  static IRow combine(const IRow& a, const Int& fa, const IRow& b, const Int& fb) {
    IRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.emplace_back(a[i].first, fa * a[i].second);
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -fb * b[j].second);
        ++j;
      } else {
        Int c = fa * a[i].second - fb * b[j].second;
        if (c != 0) out.emplace_back(a[i].first, std::move(c));
        ++i, ++j;
      }
    }
    return out;
  }

  void insert(std::map<int, Int> r) {
    IRow v;
    v.reserve(r.size());
    for (auto& [j, c] : r)
      if (c != 0) v.emplace_back(j, std::move(c));
    reduce(v);
    while (!v.empty()) {
      auto it = rows.find(v.front().first);
      if (it == rows.end()) break;
      const IRow& p = it->second;
      Int g = gcd(v.front().second, p.front().second);
      v = combine(v, p.front().second / g, p, v.front().second / g);
      reduce(v);
    }
    if (v.empty()) return;
    if (v.front().second < 0)
      for (auto& [j, c] : v) c = -c;
    int pivot = v.front().first;
    rows.emplace(pivot, std::move(v));
  }

  long long rank() const { return static_cast<long long>(rows.size()); }

  // Kernel of the row system as primitive integer vectors over 0..K-1, one
  // per free variable, oriented so the free coordinate is positive. Back
  // substitution stays in integers: to divide by a pivot coefficient b the
  // whole vector is rescaled by b/gcd first.
  std::vector<std::vector<Int>> kernel(int K) const {
    std::vector<char> isPivot(K, 0);
    for (const auto& [p, row] : rows) isPivot[p] = 1;
    std::vector<std::vector<Int>> out;
    for (int f = 0; f < K; ++f) {
      if (isPivot[f]) continue;
      std::vector<Int> x(K, Int(0));
      x[f] = 1;
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        Int s = 0;
        for (const auto& [v, c] : it->second)
          if (v != it->first) s += c * x[v];
        if (s == 0) continue;
        const Int& b = it->second.front().second;  // positive by construction
        Int g = gcd(s, b);
        Int scale = b / g;
        if (scale != 1)
          for (auto& xv : x)
            if (xv != 0) xv *= scale;
        x[it->first] = -(s / g);
      }
      Int g = 0;
      for (const auto& xv : x) {
        g = gcd(g, xv);
        if (g == 1) break;
      }
      if (g > 1)
        for (auto& xv : x) xv /= g;
      out.push_back(std::move(x));
    }
    return out;
  }
};

long long rank_int_matrix(const std::vector<std::vector<Int>>& m) {
  // Sparse rows over column indices, eliminated with the same integer-scaled
  // scheme as KeyEchelon (cross-multiplied cofactors, per-step content gcd).
  using IRow = std::vector<std::pair<int, Int>>;
  auto reduce = [](IRow& v) {
    Int g = 0;
    for (const auto& [j, c] : v) {
      g = gcd(g, c);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& [j, c] : v) c /= g;
  };
  auto combine = [](const IRow& a, const Int& fa, const IRow& b, const Int& fb) {
    IRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.emplace_back(a[i].first, fa * a[i].second);
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -fb * b[j].second);
        ++j;
      } else {
        Int c = fa * a[i].second - fb * b[j].second;
        if (c != 0) out.emplace_back(a[i].first, std::move(c));
        ++i, ++j;
      }
    }
    return out;
  };
  std::map<int, IRow> rows;  // pivot column -> primitive row
  for (const auto& mrow : m) {
    IRow v;
    for (int j = 0; j < static_cast<int>(mrow.size()); ++j)
      if (mrow[j] != 0) v.emplace_back(j, mrow[j]);
    reduce(v);
    while (!v.empty()) {
      auto it = rows.find(v.front().first);
      if (it == rows.end()) break;
      const IRow& p = it->second;
      Int g = gcd(v.front().second, p.front().second);
      v = combine(v, p.front().second / g, p, v.front().second / g);
      reduce(v);
    }
    if (!v.empty()) {
      int pivot = v.front().first;
      rows.emplace(pivot, std::move(v));
    }
  }
  return static_cast<long long>(rows.size());
}

// Solves G X = B with G square nonsingular (Gaussian elimination, partial
// pivoting by first nonzero entry).
std::vector<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> g,
                                           std::vector<std::vector<Rat>> b) {
  int k = static_cast<int>(g.size());
  int m = k == 0 ? 0 : static_cast<int>(b[0].size());
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (!(g[r][col] == 0)) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Gram matrix");
    std::swap(g[col], g[piv]);
    std::swap(b[col], b[piv]);
    Rat d = g[col][col];
    for (int j = col; j < k; ++j) g[col][j] /= d;
    for (int j = 0; j < m; ++j) b[col][j] /= d;
    for (int r = 0; r < k; ++r) {
      if (r == col || g[r][col] == 0) continue;
      Rat f = g[r][col];
      for (int j = col; j < k; ++j) g[r][j] -= f * g[col][j];
      for (int j = 0; j < m; ++j) b[r][j] -= f * b[col][j];
    }
  }
  return b;
}

// ===========================================================================
// Tableau sides: shapes, symmetrizer groups, canonical fillings.
// ===========================================================================

struct SideSpec {
  Partition shape;
  int size = 0;
  bool dual = false;      // letters contribute -eps_a to the torus weight
  uint32_t oddMask = 0;   // bit (a-1) set: letter a exists in the odd space
  std::vector<int> rowLen;
  std::vector<std::vector<int>> rowPerms;                 // dest arrays
  std::vector<std::pair<std::vector<int>, int>> colPerms;  // dest, sgn
};

// Applies a place permutation (dest[s] = target slot of the letter at s) with
// the sign rule: -1 for every crossing pair of odd letters.
WordVec apply_perm(const WordVec& w, const std::vector<int>& dest, int& sign) {
  int m = static_cast<int>(w.size());
  WordVec out(m);
  int inv = 0;
  for (int s = 0; s < m; ++s) {
    out[dest[s]] = w[s];
    if (w[s] & 1)
      for (int t = s + 1; t < m; ++t)
        if ((w[t] & 1) && dest[s] > dest[t]) ++inv;
  }
  sign = (inv & 1) ? -1 : 1;
  return out;
}

// Enumerates the full product group of permutations of the given slot groups,
// as dest arrays over `size` slots; signs are ordinary permutation signs.
void product_group(const std::vector<std::vector<int>>& groups, int size,
                   std::vector<std::pair<std::vector<int>, int>>& out) {
  std::vector<int> base(size);
  std::iota(base.begin(), base.end(), 0);
  out.clear();
  out.push_back({base, 1});
  for (const auto& slots : groups) {
    if (slots.size() < 2) continue;
    std::vector<int> idx(slots.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> perms;
    do {
      int inv = 0;
      for (size_t s = 0; s < idx.size(); ++s)
        for (size_t t = s + 1; t < idx.size(); ++t)
          if (idx[s] > idx[t]) ++inv;
      std::vector<int> dest(size);
      std::iota(dest.begin(), dest.end(), 0);
      for (size_t s = 0; s < slots.size(); ++s) dest[slots[s]] = slots[idx[s]];
      perms.push_back({std::move(dest), (inv & 1) ? -1 : 1});
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::vector<std::pair<std::vector<int>, int>> next;
    next.reserve(out.size() * perms.size());
    for (const auto& [d1, s1] : out)
      for (const auto& [d2, s2] : perms) {
        std::vector<int> comp(size);
        for (int s = 0; s < size; ++s) comp[s] = d2[d1[s]];
        next.push_back({std::move(comp), s1 * s2});
      }
    out = std::move(next);
  }
}

SideSpec build_side(const Partition& shape, bool dual, uint32_t oddMask) {
  SideSpec sd;
  sd.shape = shape;
  sd.dual = dual;
  sd.oddMask = oddMask;
  sd.rowLen.assign(shape.begin(), shape.end());
  sd.size = 0;
  for (int r : sd.rowLen) sd.size += r;

  std::vector<std::vector<int>> rowSlots, colSlots;
  int slot = 0;
  for (size_t r = 0; r < sd.rowLen.size(); ++r) {
    rowSlots.emplace_back();
    for (int c = 0; c < sd.rowLen[r]; ++c) {
      if (static_cast<size_t>(c) >= colSlots.size()) colSlots.emplace_back();
      rowSlots[r].push_back(slot);
      colSlots[c].push_back(slot);
      ++slot;
    }
  }
  long long groupSize = 1;
  for (int r : sd.rowLen) {
    for (int t = 2; t <= r; ++t) groupSize *= t;
    if (groupSize > 2000000) throw ResourceLimitError(groupSize);
  }
  long long colGroupSize = 1;
  for (const auto& col : colSlots) {
    for (size_t t = 2; t <= col.size(); ++t) colGroupSize *= static_cast<long long>(t);
    if (colGroupSize > 2000000) throw ResourceLimitError(colGroupSize);
  }
  std::vector<std::pair<std::vector<int>, int>> rp;
  product_group(rowSlots, sd.size, rp);
  sd.rowPerms.reserve(rp.size());
  for (auto& [d, s] : rp) sd.rowPerms.push_back(std::move(d));  // signs unused
  product_group(colSlots, sd.size, sd.colPerms);
  return sd;
}

// Canonical fillings: within each row the codes are non-decreasing and odd
// codes never repeat (a repeated odd letter in a row symmetrizes to zero).
struct FillEnum {
  const SideSpec& sd;
  int n;
  std::vector<int> cnt;  // remaining count per letter (1-based)
  int oddLeft = 0;
  WordVec cur;
  std::vector<WordVec>* out = nullptr;
  long long count = 0;
  long long cap = -1;  // stop early when counting past the cap
  bool capped = false;

  FillEnum(const SideSpec& sd_, int n_) : sd(sd_), n(n_), cur(sd_.size) {}

  void run(const std::vector<int>& content, int odd, std::vector<WordVec>* sink,
           long long capIn) {
    cnt = content;
    oddLeft = odd;
    out = sink;
    cap = capIn;
    count = 0;
    capped = false;
    int total = 0;
    for (int a = 1; a <= n; ++a) total += cnt[a];
    if (total != sd.size || odd < 0 || odd > sd.size) return;
    rec(0, 0, 0, 0);
  }

 private:
  void rec(int row, int pos, int minCode, int slot) {
    if (capped) return;
    if (row == static_cast<int>(sd.rowLen.size())) {
      if (oddLeft != 0) return;
      ++count;
      if (cap >= 0 && count > cap) {
        capped = true;
        return;
      }
      if (out) out->push_back(cur);
      return;
    }
    if (pos == sd.rowLen[row]) {
      rec(row + 1, 0, 0, slot);
      return;
    }
    int cellsLeft = sd.size - slot;
    if (oddLeft > cellsLeft) return;
    for (int a = 1; a <= n; ++a) {
      if (cnt[a] == 0) continue;
      int evenCode = a << 1;
      // even letter (repeats allowed)
      if (evenCode >= minCode) {
        --cnt[a];
        cur[slot] = static_cast<uint8_t>(evenCode);
        rec(row, pos + 1, evenCode, slot + 1);
        ++cnt[a];
      }
      // odd letter (no repeats within the row)
      int oddCode = evenCode | 1;
      if (oddLeft > 0 && (sd.oddMask >> (a - 1) & 1) && oddCode > minCode) {
        --cnt[a];
        --oddLeft;
        cur[slot] = static_cast<uint8_t>(oddCode);
        rec(row, pos + 1, oddCode, slot + 1);
        ++oddLeft;
        ++cnt[a];
      }
      if (capped) return;
    }
  }
};

// Image of the word under the side's Young symmetrizer (row-symmetrize, then
// column-antisymmetrize), with graded signs. Keys are side-local.
SV symmetrize_side(const SideSpec& sd, const WordVec& w0) {
  std::vector<std::pair<Key, Int>> rowAcc;
  rowAcc.reserve(sd.rowPerms.size());
  for (const auto& perm : sd.rowPerms) {
    int s;
    WordVec w = apply_perm(w0, perm, s);
    rowAcc.emplace_back(pack_word(w), s);
  }
  SV rows = flatten_vec(std::move(rowAcc));
  std::vector<std::pair<Key, Int>> out;
  out.reserve(rows.size() * sd.colPerms.size());
  for (const auto& [k, c] : rows) {
    WordVec w = unpack_word(k, sd.size);
    for (const auto& [perm, sg] : sd.colPerms) {
      int s;
      WordVec w2 = apply_perm(w, perm, s);
      out.emplace_back(pack_word(w2), c * sg * s);
    }
  }
  return flatten_vec(std::move(out));
}

// ===========================================================================
// Symmetric group characters (Murnaghan-Nakayama), for central idempotents.
// ===========================================================================

std::string encode_pt(const std::vector<int>& v) {
  std::string s;
  for (int x : v) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

long long mn_character(const Partition& shape, std::vector<int> type) {
  static std::map<std::string, long long> memo;
  std::sort(type.begin(), type.end(), std::greater<int>());
  while (!type.empty() && type.back() == 0) type.pop_back();
  int total = 0;
  for (int t : type) total += t;
  if (total != partition_size(shape)) return 0;
  if (type.empty()) return 1;
  std::string key = encode_pt(shape) + "|" + encode_pt(type);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int r = type[0];
  std::vector<int> rest(type.begin() + 1, type.end());
  // beta numbers
  int l = static_cast<int>(shape.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = shape[i] + (l - 1 - i);
  std::set<int> bset(beta.begin(), beta.end());
  long long sum = 0;
  for (int b : beta) {
    if (b < r || bset.count(b - r)) continue;
    int height = 0;
    for (int x : bset)
      if (x > b - r && x < b) ++height;
    std::set<int> nset = bset;
    nset.erase(b);
    nset.insert(b - r);
    std::vector<int> nb(nset.begin(), nset.end());
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition ns;
    for (int i = 0; i < l; ++i) {
      int part = nb[i] - (l - 1 - i);
      if (part > 0) ns.push_back(part);
    }
    long long sub = mn_character(ns, rest);
    sum += (height & 1) ? -sub : sub;
  }
  memo[key] = sum;
  return sum;
}

// ===========================================================================
// Isotypic candidates on the odd letters of one side.
// ===========================================================================

struct Candidate {
  Partition nu;          // subshape of the side shape, |nu| = #odd letters
  Partition valueShape;  // nu' : the GL shape of the odd letters' value action
  bool good = true;
  long long kappa = 0;   // Casimir eigenvalue of the value action
};

long long kappa_of(const Partition& c, int n) {
  long long k = 0;
  for (size_t t = 0; t < c.size(); ++t)
    k += static_cast<long long>(c[t]) * (c[t] + n + 1 - 2 * (static_cast<long long>(t) + 1));
  return k;
}

std::vector<Candidate> make_candidates(const Partition& shape, int k, int n,
                                       bool filter, int goodRows) {
  std::vector<Candidate> out;
  for (const auto& nu : subpartitions_of_size(shape, k)) {
    Candidate c;
    c.nu = nu;
    c.valueShape = conjugate(nu);
    c.good = !filter || nu.empty() || nu[0] <= goodRows;
    c.kappa = kappa_of(c.valueShape, n);
    out.push_back(std::move(c));
  }
  return out;
}

// ===========================================================================
// The engine: blocks of the graded symmetrizer image per torus weight, with
// optional compression to the extreme (Cartan) components.
// ===========================================================================

struct Engine {
  int n = 0;
  SideSpec A, B;  // B.size == 0 for one-sided models
  int S = 0;      // total slots
  bool compress = false;
  int goodA = 0, goodB = 0;  // max allowed nu_1 / delta_1 when compressing
  Limits limits;
  bool withLabels = false;
  bool withDiffs = false;

  int positions() const { return A.size + B.size + 1; }

  void init() {
    S = A.size + B.size;
    if (S > kMaxSlots || n > kMaxLetters) throw ResourceLimitError(S);
  }

  // ---- elementary operators on sparse vectors ----

  SV apply_D(const SV& v) const {
    std::vector<std::pair<Key, Int>> acc;
    acc.reserve(v.size() * S);
    for (const auto& [key, c] : v) {
      WordVec w = unpack_word(key, S);
      int oddBefore = 0;
      for (int s = 0; s < S; ++s) {
        uint8_t code = w[s];
        if (code & 1) {
          ++oddBefore;
          continue;
        }
        int letter = code >> 1;
        const SideSpec& sd = s < A.size ? A : B;
        if (!(sd.oddMask >> (letter - 1) & 1)) continue;
        WordVec w2 = w;
        w2[s] = code | 1;
        acc.emplace_back(pack_word(w2), (oddBefore & 1) ? -c : c);
      }
    }
    return flatten_vec(std::move(acc));
  }

  // Value-action Casimir on the odd letters of slots [lo, hi).
  SV apply_casimir(const SV& v, int lo, int hi) const {
    std::vector<std::pair<Key, Int>> acc;
    acc.reserve(v.size() * 4);
    for (const auto& [key, c] : v) {
      WordVec w = unpack_word(key, S);
      std::vector<int> odd;
      for (int s = lo; s < hi; ++s)
        if (w[s] & 1) odd.push_back(s);
      acc.emplace_back(key, Int(static_cast<long long>(odd.size()) * n) * c);
      for (size_t x = 0; x < odd.size(); ++x)
        for (size_t y = x + 1; y < odd.size(); ++y) {
          WordVec w2 = w;
          std::swap(w2[odd[x]], w2[odd[y]]);
          acc.emplace_back(pack_word(w2), 2 * c);
        }
    }
    return flatten_vec(std::move(acc));
  }

  // (Id - P_shape) on the value action of the odd letters of [lo, hi).
  SVR apply_central_complement(const SVR& v, const Partition& valueShape, int lo,
                               int hi) const {
    int k = partition_size(valueShape);
    long long fact = 1;
    for (int t = 2; t <= k; ++t) fact *= t;
    long long fdim = mn_character(valueShape, std::vector<int>(k, 1));
    std::map<Key, Rat> acc;
    for (const auto& [key, c] : v) acc[key] += c;
    for (const auto& [key, c] : v) {
      WordVec w = unpack_word(key, S);
      std::vector<int> odd;
      for (int s = lo; s < hi; ++s)
        if (w[s] & 1) odd.push_back(s);
      if (static_cast<int>(odd.size()) != k)
        throw std::logic_error("odd-letter count mismatch in isotypic projection");
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      std::vector<uint8_t> letters(k);
      for (int t = 0; t < k; ++t) letters[t] = w[odd[t]];
      std::sort(idx.begin(), idx.end());
      do {
        // cycle type of idx
        std::vector<char> seen(k, 0);
        std::vector<int> type;
        for (int t = 0; t < k; ++t) {
          if (seen[t]) continue;
          int len = 0, u = t;
          while (!seen[u]) {
            seen[u] = 1;
            u = idx[u];
            ++len;
          }
          type.push_back(len);
        }
        long long chi = mn_character(valueShape, type);
        if (chi == 0) continue;
        WordVec w2 = w;
        for (int t = 0; t < k; ++t) w2[odd[t]] = letters[idx[t]];
        acc[pack_word(w2)] -= c * Rat(chi * fdim, fact);
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return flatten(acc);
  }

  // Kills every bad isotypic component on one side, keeping the good part of
  // the span intact (good components are only rescaled).
  SV apply_good_filter(SV v, const std::vector<Candidate>& cands, int lo, int hi) const {
    std::map<long long, std::pair<bool, bool>> groups;  // kappa -> (good, bad)
    for (const auto& c : cands) {
      auto& g = groups[c.kappa];
      (c.good ? g.first : g.second) = true;
    }
    for (const auto& [kap, g] : groups) {
      if (!g.second || g.first) continue;  // only pure-bad eigenvalues here
      SV w = apply_casimir(v, lo, hi);
      std::map<Key, Int> acc;
      for (auto& [k, c] : w) acc[k] += c;
      for (auto& [k, c] : v) acc[k] -= Int(kap) * c;
      v = flatten(acc);
      if (v.empty()) return v;
    }
    bool mixed = false;
    for (const auto& c : cands)
      if (!c.good && groups[c.kappa].first) mixed = true;
    if (!mixed) return v;
    SVR vr = to_rational(v);
    for (const auto& c : cands)
      if (!c.good && groups[c.kappa].first) {
        vr = apply_central_complement(vr, c.valueShape, lo, hi);
        if (vr.empty()) return {};
      }
    return scale_to_int(vr);
  }

  // ---- per-weight block computation ----

  struct WBlock {
    std::vector<std::vector<SV>> basis;              // [position][vec]
    std::vector<std::vector<std::string>> labels;    // [position][vec]
    std::vector<long long> dims;                     // [position]
    std::vector<long long> ranks;                    // [k]: rank of d_k
    std::vector<std::vector<std::tuple<int, int, Rat>>> diffs;  // [k]
  };

  std::string render_label(const SV& v, int i, int j) const {
    if (v.empty()) return {};
    Key lead = v.back().first;
    WordVec w = unpack_word(lead, S);
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    auto side = [&](const SideSpec& sd, int base, const char* name) {
      if (sd.size == 0) return;
      os << " " << name << "[";
      int slot = base;
      for (size_t r = 0; r < sd.rowLen.size(); ++r) {
        if (r) os << " | ";
        for (int c = 0; c < sd.rowLen[r]; ++c, ++slot) {
          if (c) os << ' ';
          uint8_t code = w[slot];
          if (code & 1) os << '~';
          os << (code >> 1);
        }
      }
      os << "]";
    };
    side(A, 0, "A");
    side(B, A.size, "B");
    return os.str();
  }

  // Enumerates the generating symmetrizer images of one (i, j) sub-block and
  // appends an independent spanning set (after optional compression).
  void sub_block(const Weight& w, int i, int j, std::vector<SV>& outBasis,
                 std::vector<std::string>& outLabels, long long& genBudget) const {
    auto candA = make_candidates(A.shape, i, n, compress, goodA);
    auto candB = make_candidates(B.shape, j, n, compress, goodB);
    if (candA.empty() || candB.empty()) return;
    if (compress) {
      bool anyGoodA = false, anyGoodB = false;
      for (const auto& c : candA) anyGoodA |= c.good;
      for (const auto& c : candB) anyGoodB |= c.good;
      if (!anyGoodA || !anyGoodB) return;
    }

    // contents: alpha on side A, beta on side B with sA*alpha + sB*beta = w
    std::vector<std::pair<std::vector<int>, std::vector<int>>> contents;
    {
      std::vector<int> alpha(n + 1, 0), beta(n + 1, 0);
      if (B.size == 0) {
        bool ok = true;
        int tot = 0;
        for (int a = 1; a <= n; ++a) {
          int x = A.dual ? -w[a - 1] : w[a - 1];
          if (x < 0) ok = false;
          alpha[a] = x;
          tot += x;
        }
        if (ok && tot == A.size) contents.push_back({alpha, beta});
      } else {
        // A counts +, B counts -: alpha - beta = w, both nonnegative.
        std::vector<int> bmin(n + 1, 0);
        int needed = 0;
        for (int a = 1; a <= n; ++a) {
          bmin[a] = std::max(0, -w[a - 1]);
          needed += bmin[a];
        }
        if (needed <= B.size) {
          std::vector<int> cur(n + 1, 0);
          std::function<void(int, int)> gen = [&](int a, int left) {
            if (a == n + 1) {
              if (left != 0) return;
              auto al = cur;
              bool ok = true;
              for (int t = 1; t <= n; ++t) {
                al[t] = cur[t] + w[t - 1];
                if (al[t] < 0) ok = false;
              }
              int atot = 0;
              for (int t = 1; t <= n; ++t) atot += al[t];
              if (ok && atot == A.size) contents.push_back({al, cur});
              return;
            }
            for (int v = bmin[a]; v <= left; ++v) {
              cur[a] = v;
              gen(a + 1, left - v);
            }
            cur[a] = 0;
          };
          gen(1, B.size);
        }
      }
    }
    if (contents.empty()) return;

    KeyEchelon ech;
    std::vector<SV> indep;
    FillEnum fa(A, n), fb(B, n);

    for (const auto& [alpha, beta] : contents) {
      long long ca = 0, cb = 0;
      {
        fa.run(alpha, i, nullptr, genBudget);
        if (fa.capped) throw ResourceLimitError(limits.maxBlockBasis + 1);
        ca = fa.count;
        if (ca == 0) continue;
        fb.run(beta, j, nullptr, genBudget);
        if (fb.capped) throw ResourceLimitError(limits.maxBlockBasis + 1);
        cb = fb.count;
        if (cb == 0) continue;
      }
      if (ca * cb > genBudget) throw ResourceLimitError(ca * cb);
      genBudget -= ca * cb;

      std::vector<WordVec> wordsA, wordsB;
      fa.run(alpha, i, &wordsA, -1);
      fb.run(beta, j, &wordsB, -1);

      std::vector<std::vector<std::pair<Key, Int>>> symA, symB;
      symA.reserve(wordsA.size());
      for (const auto& wa : wordsA) {
        auto m = symmetrize_side(A, wa);
        std::vector<std::pair<Key, Int>> fl;
        for (auto& [k, c] : m)
          if (c != 0) fl.emplace_back(k, c);
        symA.push_back(std::move(fl));
      }
      if (B.size > 0) {
        symB.reserve(wordsB.size());
        for (const auto& wb : wordsB) {
          auto m = symmetrize_side(B, wb);
          std::vector<std::pair<Key, Int>> fl;
          for (auto& [k, c] : m)
            if (c != 0) fl.emplace_back(k, c);
          symB.push_back(std::move(fl));
        }
      } else {
        symB.push_back({{Key(0), Int(1)}});
      }

      for (const auto& va : symA) {
        if (va.empty()) continue;
        for (const auto& vb : symB) {
          if (vb.empty()) continue;
          std::map<Key, Int> prod;
          for (const auto& [ka, caf] : va)
            for (const auto& [kb, cbf] : vb) prod[ka | (kb << (5 * A.size))] += caf * cbf;
          SV vec = flatten(prod);
          if (vec.empty()) continue;
          if (ech.insert(vec)) indep.push_back(std::move(vec));
        }
      }
    }
    if (indep.empty()) return;

    std::vector<SV> result;
    if (!compress) {
      result = std::move(indep);
    } else {
      // intersect with the kernels of all individual odd-odd contractions
      int K = static_cast<int>(indep.size());
      std::map<std::pair<int, Key>, std::map<int, Int>> rows;
      for (int idx = 0; idx < K; ++idx) {
        for (const auto& [key, c] : indep[idx]) {
          WordVec wv = unpack_word(key, S);
          std::vector<int> oddPrefix(S + 1, 0);
          for (int s = 0; s < S; ++s) oddPrefix[s + 1] = oddPrefix[s] + ((wv[s] & 1) ? 1 : 0);
          for (int p = 0; p < A.size; ++p) {
            if (!(wv[p] & 1)) continue;
            for (int q = A.size; q < S; ++q) {
              if (!(wv[q] & 1) || (wv[q] >> 1) != (wv[p] >> 1)) continue;
              WordVec res = wv;
              res[p] = 0;
              res[q] = 0;
              int between = oddPrefix[q] - oddPrefix[p + 1];
              Int term(c);
              if (between & 1) term = -term;
              rows[{p * 32 + q, pack_word(res)}][idx] += term;
            }
          }
        }
      }
      VarEchelon ve;
      for (auto& [rk, row] : rows) ve.insert(std::move(row));
      auto kern = ve.kernel(K);
      bool anyBadA = false, anyBadB = false;
      for (const auto& c : candA) anyBadA |= !c.good;
      for (const auto& c : candB) anyBadB |= !c.good;
      KeyEchelon ech2;
      for (const auto& coords : kern) {
        std::map<Key, Int> acc;
        for (int t = 0; t < K; ++t) {
          if (coords[t] == 0) continue;
          for (const auto& [k, c] : indep[t]) acc[k] += coords[t] * c;
        }
        SV u = flatten(acc);
        reduce_content(u);
        if (u.empty()) continue;
        if (anyBadA) u = apply_good_filter(std::move(u), candA, 0, A.size);
        if (!u.empty() && anyBadB) u = apply_good_filter(std::move(u), candB, A.size, S);
        if (u.empty()) continue;
        if (ech2.insert(u)) result.push_back(std::move(u));
      }
    }
    for (auto& vec : result) {
      if (withLabels) outLabels.push_back(render_label(vec, i, j));
      outBasis.push_back(std::move(vec));
    }
  }

  WBlock block(const Weight& w) const {
    int P = positions();
    WBlock out;
    out.basis.resize(P);
    out.labels.resize(P);
    out.dims.assign(P, 0);
    out.ranks.assign(std::max(0, P - 1), 0);
    out.diffs.resize(std::max(0, P - 1));

    long long genBudget = limits.maxBlockBasis;
    for (int k = 0; k < P; ++k) {
      for (int i = std::max(0, k - B.size); i <= std::min(k, A.size); ++i)
        sub_block(w, i, k - i, out.basis[k], out.labels[k], genBudget);
      out.dims[k] = static_cast<long long>(out.basis[k].size());
    }

    // pairings of D against the next position's basis, via an inverted
    // index over that basis's keys so only actual nonzeros are touched
    std::vector<std::vector<std::vector<Int>>> M(std::max(0, P - 1));
    for (int k = 0; k + 1 < P; ++k) {
      int dk = static_cast<int>(out.basis[k].size());
      int dk1 = static_cast<int>(out.basis[k + 1].size());
      M[k].assign(dk1, std::vector<Int>(dk, Int(0)));
      if (dk == 0 || dk1 == 0) continue;
      std::map<Key, std::vector<std::pair<int, const Int*>>> index;
      for (int r = 0; r < dk1; ++r)
        for (const auto& [key, c] : out.basis[k + 1][r]) index[key].emplace_back(r, &c);
      for (int b = 0; b < dk; ++b) {
        SV dv = apply_D(out.basis[k][b]);
        for (const auto& [key, c] : dv) {
          auto it = index.find(key);
          if (it == index.end()) continue;
          for (const auto& [r, rc] : it->second) M[k][r][b] += c * (*rc);
        }
      }
      out.ranks[k] = rank_int_matrix(M[k]);
    }

    if (withDiffs) {
      std::vector<std::vector<std::vector<Rat>>> X(std::max(0, P - 1));
      for (int k = 0; k + 1 < P; ++k) {
        int dk = static_cast<int>(out.basis[k].size());
        int dk1 = static_cast<int>(out.basis[k + 1].size());
        if (dk == 0 || dk1 == 0) continue;
        std::vector<std::vector<Rat>> gram(dk1, std::vector<Rat>(dk1));
        for (int r = 0; r < dk1; ++r)
          for (int s = r; s < dk1; ++s) {
            gram[r][s] = Rat(dot(out.basis[k + 1][r], out.basis[k + 1][s]));
            gram[s][r] = gram[r][s];
          }
        std::vector<std::vector<Rat>> rhs(dk1, std::vector<Rat>(dk));
        for (int r = 0; r < dk1; ++r)
          for (int b = 0; b < dk; ++b) rhs[r][b] = Rat(M[k][r][b]);
        X[k] = solve_square(std::move(gram), std::move(rhs));
        for (int r = 0; r < dk1; ++r)
          for (int b = 0; b < dk; ++b)
            if (!(X[k][r][b] == 0)) out.diffs[k].emplace_back(r, b, X[k][r][b]);
      }
      for (int k = 0; k + 2 < P; ++k) {
        if (X[k].empty() || X[k + 1].empty()) continue;
        int rows = static_cast<int>(X[k + 1].size());
        int mid = static_cast<int>(X[k].size());
        int cols = static_cast<int>(X[k][0].size());
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c) {
            Rat s(0);
            for (int m = 0; m < mid; ++m) s += X[k + 1][r][m] * X[k][m][c];
            if (!(s == 0)) throw std::logic_error("differential does not square to zero");
          }
      }
    }
    return out;
  }

  // ---- weight enumeration ----

  std::set<Weight, std::greater<Weight>> all_weights() const {
    std::set<Weight, std::greater<Weight>> ws;
    std::vector<int> alpha(n, 0);
    std::function<void(int, int, std::function<void()>)> gen =
        [&](int a, int left, std::function<void()> done) {
          if (a == n) {
            if (left == 0) done();
            return;
          }
          for (int v = 0; v <= left; ++v) {
            alpha[a] = v;
            gen(a + 1, left - v, done);
          }
          alpha[a] = 0;
        };
    if (B.size == 0) {
      gen(0, A.size, [&]() {
        Weight w(n);
        for (int a = 0; a < n; ++a) w[a] = A.dual ? -alpha[a] : alpha[a];
        ws.insert(w);
      });
    } else {
      std::vector<std::vector<int>> alphas;
      gen(0, A.size, [&]() { alphas.push_back(alpha); });
      std::vector<std::vector<int>> betas;
      gen(0, B.size, [&]() { betas.push_back(alpha); });
      for (const auto& al : alphas)
        for (const auto& be : betas) {
          Weight w(n);
          for (int a = 0; a < n; ++a) w[a] = al[a] - be[a];
          ws.insert(w);
        }
    }
    return ws;
  }

  std::vector<Weight> dominant_weights() const {
    std::vector<Weight> out;
    int total = (A.dual ? -A.size : A.size) + (B.size ? -B.size : 0);
    int hi = A.dual ? 0 : A.size;
    int lo = -(B.size + (A.dual ? A.size : 0));
    Weight cur(n);
    std::function<void(int, int, int)> gen = [&](int t, int prev, int left) {
      if (t == n) {
        if (left == 0) {
          // feasibility: positive part within A, negative within B
          int pos = 0, neg = 0;
          for (int x : cur) (x > 0 ? pos += x : neg -= x);
          if (!A.dual && pos <= A.size && neg <= B.size) out.push_back(cur);
          if (A.dual && neg <= A.size && pos == 0) out.push_back(cur);
        }
        return;
      }
      for (int v = std::min(prev, left - (n - t - 1) * lo); v >= lo; --v) {
        if (left - v > (n - t - 1) * std::min(prev, v)) break;
        cur[t] = v;
        gen(t + 1, v, left - v);
      }
    };
    gen(0, hi, total);
    return out;
  }
};

// ===========================================================================
// Model construction.
// ===========================================================================

Int dim_in(const Partition& p, int d) {
  if (static_cast<int>(p.size()) > d) {
    for (size_t t = static_cast<size_t>(d); t < p.size(); ++t)
      if (p[t] > 0) return 0;
  }
  Weight w(d, 0);
  for (int t = 0; t < d && t < static_cast<int>(p.size()); ++t) w[t] = p[t];
  if (d == 0) return 1;
  return weyl_dimension(w);
}

Int summand_dim(const TermSummand& ts, const std::map<std::string, int>& spaceDims) {
  Int d = ts.mult;
  for (const auto& [space, wt] : ts.factors) {
    auto it = spaceDims.find(space);
    if (it == spaceDims.end()) throw std::logic_error("unknown factor space " + space);
    bool partitionLike = true;
    for (int x : wt)
      if (x < 0) partitionLike = false;
    if (partitionLike) {
      Partition p;
      for (int x : wt)
        if (x != 0) p.push_back(x);
      std::sort(p.begin(), p.end(), std::greater<int>());
      d *= dim_in(p, it->second);
    } else {
      if (static_cast<int>(wt.size()) != it->second)
        throw std::logic_error("weight length mismatch in term summand");
      d *= weyl_dimension(wt);
    }
  }
  return d;
}

std::vector<int> trimmed(const Partition& p) {
  std::vector<int> v;
  for (int x : p)
    if (x != 0) v.push_back(x);
  return v;
}

}  // namespace

struct ModelState {
  bool twoSided = false;
  bool compressed = false;
  FlagContext ctx{0, 0, 0};
  bool hasCtx = false;
  Partition lambda, mu;
  TwoTermComplex phi;  // one-sided models only
};

namespace {

ChainComplexModel materialize(Engine& eng, std::vector<std::vector<TermSummand>> summands,
                              std::vector<Int> dims, std::shared_ptr<const ModelState> state) {
  eng.withDiffs = true;
  eng.withLabels = true;
  ChainComplexModel model;
  model.positions = eng.positions();
  model.termSummands = std::move(summands);
  model.termDims = std::move(dims);
  model.state = std::move(state);

  std::vector<Int> totals(model.positions, 0);
  for (const auto& w : eng.all_weights()) {
    auto blk = eng.block(w);
    bool nonzero = false;
    for (long long d : blk.dims) nonzero |= d > 0;
    if (!nonzero) continue;
    WeightBlock wb;
    wb.weight = w;
    wb.dims = blk.dims;
    wb.basisLabels = std::move(blk.labels);
    wb.diffs = std::move(blk.diffs);
    for (int k = 0; k < model.positions; ++k) totals[k] += blk.dims[k];
    model.blocks.push_back(std::move(wb));
  }
  for (int k = 0; k < model.positions; ++k)
    if (totals[k] != model.termDims[k])
      throw std::logic_error("term dimension mismatch against the combinatorial prediction");
  return model;
}

uint32_t mask_range(int lo, int hi) {  // letters lo..hi inclusive, 1-based
  uint32_t m = 0;
  for (int a = lo; a <= hi; ++a) m |= 1u << (a - 1);
  return m;
}

Engine h0_engine(const FlagContext& ctx, const Partition& lambda, const Partition& mu,
                 const Limits& limits) {
  Engine eng;
  eng.n = ctx.n;
  eng.A = build_side(lambda, false, mask_range(1, ctx.n));
  eng.B = build_side(mu, true, mask_range(1, ctx.n));
  eng.compress = true;
  eng.goodA = ctx.n - ctx.r2;
  eng.goodB = ctx.r1;
  eng.limits = limits;
  eng.init();
  return eng;
}

std::vector<std::vector<TermSummand>> h0_summands(const FlagContext& ctx,
                                                  const Partition& lambda,
                                                  const Partition& mu) {
  int L = static_cast<int>(partition_size(lambda));
  int M = static_cast<int>(partition_size(mu));
  std::vector<std::vector<TermSummand>> out(L + M + 1);
  for (int i = 0; i <= L; ++i) {
    for (const auto& nu : subpartitions_of_size(lambda, i)) {
      if (!nu.empty() && nu[0] > ctx.n - ctx.r2) continue;
      for (const auto& a : subpartitions_of_size(lambda, L - i)) {
        long long cl = lr_coefficient(lambda, a, nu);
        if (cl == 0) continue;
        for (int j = 0; j <= M; ++j) {
          for (const auto& de : subpartitions_of_size(mu, j)) {
            if (!de.empty() && de[0] > ctx.r1) continue;
            for (const auto& c : subpartitions_of_size(mu, M - j)) {
              long long cm = lr_coefficient(mu, c, de);
              if (cm == 0) continue;
              Weight cart;
              {
                auto top = pad_to(conjugate(nu), ctx.n - ctx.r2);
                auto bot = dual_weight(pad_to(conjugate(de), ctx.r1));
                cart = top;
                cart.insert(cart.end(), ctx.r2 - ctx.r1, 0);
                cart.insert(cart.end(), bot.begin(), bot.end());
              }
              TermSummand ts;
              ts.factors = {{"W", trimmed(a)}, {"W*", trimmed(c)}, {"W", cart}};
              ts.mult = cl * cm;
              out[i + j].push_back(std::move(ts));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<Int> dims_of_summands(const std::vector<std::vector<TermSummand>>& summands,
                                  const std::map<std::string, int>& spaceDims) {
  std::vector<Int> dims;
  dims.reserve(summands.size());
  for (const auto& terms : summands) {
    Int d = 0;
    for (const auto& ts : terms) d += summand_dim(ts, spaceDims);
    dims.push_back(d);
  }
  return dims;
}

// Peels off highest weights in lexicographic order. The lex-largest weight
// with a nonzero count is necessarily a highest weight of some constituent
// (anything dominating it would be lex-larger), so its count is the
// multiplicity; subtract that many copies of the dominant part of its
// character and repeat.
RepSum decompose_dominant_character(std::map<Weight, long long, std::greater<Weight>> dom,
                                    int n) {
  RepSum out;
  while (!dom.empty()) {
    auto it = dom.begin();
    if (it->second == 0) {
      dom.erase(it);
      continue;
    }
    if (it->second < 0)
      throw std::logic_error("character decomposition failed: negative residual");
    Weight gamma = it->first;
    long long m = it->second;
    out.add(gamma, m);

    // All dominant weights dominated by gamma (same total, prefix sums bounded
    // by gamma's prefix sums); exactly these carry nonzero weight multiplicity.
    int total = 0;
    std::vector<int> gpref(n + 1, 0);
    for (int t = 0; t < n; ++t) {
      total += gamma[t];
      gpref[t + 1] = gpref[t] + gamma[t];
    }
    Weight cur(n);
    std::function<void(int, int, int)> rec = [&](int t, int prev, int sumLeft) {
      if (t == n - 1) {
        int hi = std::min(prev, gpref[n] - (total - sumLeft));
        if (sumLeft <= hi) {
          cur[t] = sumLeft;
          long long k = weight_multiplicity(gamma, cur);
          if (k != 0) dom[cur] -= m * k;
        }
        return;
      }
      int hi = std::min(prev, gpref[t + 1] - (total - sumLeft));
      int rem = n - t - 1;
      for (int v = hi; static_cast<long long>(sumLeft) - v <= static_cast<long long>(rem) * v;
           --v) {
        cur[t] = v;
        rec(t + 1, v, sumLeft - v);
      }
    };
    if (n == 1) {
      // gamma itself is the only dominated weight
      dom[gamma] -= m;
    } else {
      rec(0, gamma[0], total);
    }
  }
  return out;
}

void check_bundle_rows(const FlagContext& ctx, const Partition& lambda, const Partition& mu) {
  if (!ctx.valid()) throw std::invalid_argument("invalid flag context");
  if (static_cast<int>(partition_rows(lambda)) > ctx.r2)
    throw std::invalid_argument("lambda has more rows than rank of R2");
  if (static_cast<int>(partition_rows(mu)) > ctx.n - ctx.r1)
    throw std::invalid_argument("mu has more rows than rank of W/R1");
}

}  // namespace

// ===========================================================================
// Public API.
// ===========================================================================

ChainComplexModel schur_complex(const Partition& lambda, const TwoTermComplex& phi,
                                const Limits& limits) {
  if (!is_partition_vec(lambda)) throw std::invalid_argument("lambda is not a partition");
  if (phi.evenDim < 0 || phi.oddDim < 0 || phi.oddDim > phi.evenDim)
    throw std::invalid_argument("two-term complex needs 0 <= oddDim <= evenDim");

  Engine eng;
  eng.n = phi.evenDim;
  bool dual = phi.model == TwoTermComplex::Model::SubDualSide;
  uint32_t mask = dual ? mask_range(1, phi.oddDim)
                       : mask_range(phi.evenDim - phi.oddDim + 1, phi.evenDim);
  eng.A = build_side(lambda, dual, mask);
  eng.B = build_side({}, false, 0);
  eng.limits = limits;
  eng.init();

  const char* evenName = "B";
  const char* oddName = "C";
  if (phi.model == TwoTermComplex::Model::QuotientSide) evenName = "W", oddName = "W/R2";
  if (phi.model == TwoTermComplex::Model::SubDualSide) evenName = "W*", oddName = "R1*";

  int L = static_cast<int>(partition_size(lambda));
  std::vector<std::vector<TermSummand>> summands(L + 1);
  for (int i = 0; i <= L; ++i)
    for (const auto& nu : subpartitions_of_size(lambda, i))
      for (const auto& a : subpartitions_of_size(lambda, L - i)) {
        long long c = lr_coefficient(lambda, a, nu);
        if (c == 0) continue;
        TermSummand ts;
        ts.factors = {{evenName, trimmed(a)}, {oddName, trimmed(conjugate(nu))}};
        ts.mult = c;
        summands[i].push_back(std::move(ts));
      }
  std::map<std::string, int> spaceDims{{evenName, phi.evenDim}, {oddName, phi.oddDim}};
  auto dims = dims_of_summands(summands, spaceDims);

  auto state = std::make_shared<ModelState>();
  state->twoSided = false;
  state->lambda = lambda;
  state->phi = phi;
  return materialize(eng, std::move(summands), std::move(dims), state);
}

ChainComplexModel total_complex(const FlagContext& ctx, const Partition& lambda,
                                const Partition& mu, const Limits& limits) {
  if (!is_partition_vec(lambda) || !is_partition_vec(mu))
    throw std::invalid_argument("lambda/mu must be partitions");
  check_bundle_rows(ctx, lambda, mu);

  Engine eng;
  eng.n = ctx.n;
  eng.A = build_side(lambda, false, mask_range(ctx.r2 + 1, ctx.n));
  eng.B = build_side(mu, true, ctx.r1 >= 1 ? mask_range(1, ctx.r1) : 0);
  eng.limits = limits;
  eng.init();

  int L = static_cast<int>(partition_size(lambda));
  int M = static_cast<int>(partition_size(mu));
  std::vector<std::vector<TermSummand>> summands(L + M + 1);
  for (int i = 0; i <= L; ++i)
    for (const auto& nu : subpartitions_of_size(lambda, i))
      for (const auto& a : subpartitions_of_size(lambda, L - i)) {
        long long cl = lr_coefficient(lambda, a, nu);
        if (cl == 0) continue;
        for (int j = 0; j <= M; ++j)
          for (const auto& de : subpartitions_of_size(mu, j))
            for (const auto& c : subpartitions_of_size(mu, M - j)) {
              long long cm = lr_coefficient(mu, c, de);
              if (cm == 0) continue;
              TermSummand ts;
              ts.factors = {{"W", trimmed(a)},
                            {"W/R2", trimmed(conjugate(nu))},
                            {"W*", trimmed(c)},
                            {"R1*", trimmed(conjugate(de))}};
              ts.mult = cl * cm;
              summands[i + j].push_back(std::move(ts));
            }
      }
  std::map<std::string, int> spaceDims{
      {"W", ctx.n}, {"W/R2", ctx.n - ctx.r2}, {"W*", ctx.n}, {"R1*", ctx.r1}};
  auto dims = dims_of_summands(summands, spaceDims);

  auto state = std::make_shared<ModelState>();
  state->twoSided = true;
  state->ctx = ctx;
  state->hasCtx = true;
  state->lambda = lambda;
  state->mu = mu;
  return materialize(eng, std::move(summands), std::move(dims), state);
}

ChainComplexModel h0_complex(const ChainComplexModel& tot, const FlagContext& ctx,
                             const Limits& limits) {
  if (!tot.state || !tot.state->hasCtx)
    throw std::invalid_argument("h0_complex needs a model built by total_complex");
  if (!(tot.state->ctx == ctx))
    throw std::invalid_argument("context does not match the one the model was built on");
  const Partition& lambda = tot.state->lambda;
  const Partition& mu = tot.state->mu;

  Engine eng = h0_engine(ctx, lambda, mu, limits);
  auto summands = h0_summands(ctx, lambda, mu);
  std::map<std::string, int> spaceDims{{"W", ctx.n}, {"W*", ctx.n}};
  auto dims = dims_of_summands(summands, spaceDims);

  auto state = std::make_shared<ModelState>(*tot.state);
  state->compressed = true;
  return materialize(eng, std::move(summands), std::move(dims), state);
}

CohomologyTable cohomology_definitive(const FlagContext& ctx, const Partition& lambda,
                                      const Partition& mu, const Limits& limits) {
  if (!is_partition_vec(lambda) || !is_partition_vec(mu))
    throw std::invalid_argument("lambda/mu must be partitions");
  check_bundle_rows(ctx, lambda, mu);

  Engine eng = h0_engine(ctx, lambda, mu, limits);
  int P = eng.positions();
  std::vector<std::map<Weight, long long, std::greater<Weight>>> chars(P);
  for (const auto& w : eng.dominant_weights()) {
    auto blk = eng.block(w);
    for (int k = 0; k < P; ++k) {
      long long h = blk.dims[k];
      if (k < P - 1) h -= blk.ranks[k];
      if (k > 0) h -= blk.ranks[k - 1];
      if (h < 0) throw std::logic_error("negative homology dimension");
      if (h > 0) chars[k][w] = h;
    }
  }
  CohomologyTable out;
  for (int k = 0; k < P; ++k) {
    if (chars[k].empty()) continue;
    RepSum reps = decompose_dominant_character(std::move(chars[k]), ctx.n);
    for (const auto& [w, m] : reps.terms) out.add(k, w, m);
  }
  return out;
}

RepSum character_decompose(const std::map<Weight, long long>& character, int n) {
  std::map<Weight, long long, std::greater<Weight>> dom;
  Int totalCount = 0;
  for (const auto& [w, m] : character) {
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("weight length mismatch in character");
    Weight sorted = w;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    auto it = character.find(sorted);
    long long domCount = it == character.end() ? 0 : it->second;
    if (domCount != m)
      throw std::invalid_argument("character is not symmetric under permutations");
    if (sorted == w && m != 0) dom[w] = m;
    totalCount += m;
  }
  RepSum out = decompose_dominant_character(std::move(dom), n);
  Int dimSum = 0;
  for (const auto& [w, m] : out.terms) dimSum += Int(m) * weyl_dimension(w);
  if (dimSum != totalCount)
    throw std::invalid_argument("character decomposition failed: dimension mismatch");
  return out;
}

std::vector<std::vector<TermSummand>> truncated_complex_terms(const FlagContext& ctx,
                                                              const Partition& lambda) {
  if (!is_partition_vec(lambda)) throw std::invalid_argument("lambda is not a partition");
  if (!ctx.valid()) throw std::invalid_argument("invalid flag context");
  int L = static_cast<int>(partition_size(lambda));
  std::vector<std::vector<TermSummand>> out(L + 1);
  for (int i = 0; i <= L; ++i)
    for (const auto& nu : subpartitions_of_size(lambda, i)) {
      if (!nu.empty() && nu[0] > ctx.n - ctx.r2) continue;
      for (const auto& a : subpartitions_of_size(lambda, L - i)) {
        long long c = lr_coefficient(lambda, a, nu);
        if (c == 0) continue;
        TermSummand ts;
        ts.factors = {{"W", trimmed(a)}, {"W/R1", trimmed(conjugate(nu))}};
        ts.mult = c;
        out[i].push_back(std::move(ts));
      }
    }
  return out;
}

CohomologyOutcome cohomology_flag(const FlagContext& ctx, const Partition& lambda,
                                  const Partition& mu, Method method, const Limits& limits) {
  if (!is_partition_vec(lambda) || !is_partition_vec(mu))
    throw std::invalid_argument("lambda/mu must be partitions");
  check_bundle_rows(ctx, lambda, mu);

  if (method == Method::Definitive)
    return {cohomology_definitive(ctx, lambda, mu, limits), "definitive"};

  // Degenerate contexts: one of the filtration halves is the bundle itself.
  if (ctx.r1 == 0 || ctx.r1 == ctx.r2)
    return {cohomology_B1(ctx, lambda, mu), "degenerate"};
  if (ctx.r2 == ctx.n) return {cohomology_B2(ctx, lambda, mu), "degenerate"};

  if (method == Method::Auto) {
    // Hook-shaped lambda: closed form, when applicable.
    auto asHook = [](const Partition& p) -> std::optional<std::pair<int, int>> {
      if (p.empty() || p[0] < 2) return std::nullopt;
      for (size_t t = 1; t < p.size(); ++t)
        if (p[t] != 1) return std::nullopt;
      return std::make_pair(p[0] - 1, static_cast<int>(p.size()) - 1);
    };
    if (auto hk = asHook(lambda)) {
      auto [a, b] = *hk;
      if (a >= 1 && a <= ctx.n - ctx.r2 && b < ctx.r2) {
        auto t = hook_cohomology(ctx, a, b, mu);
        if (t) return {*t, "hook"};
      }
    }
    if (auto hk = asHook(mu)) {
      auto [a, b] = *hk;
      FlagContext dctx = ctx.dualContext();
      if (a >= 1 && a <= dctx.n - dctx.r2 && b < dctx.r2) {
        auto t = hook_cohomology(dctx, a, b, lambda);
        if (t) return {duality(ctx, *t), "hook-dual"};
      }
    }
  }

  CohomologyTable b1 = cohomology_B1(ctx, lambda, mu);
  CohomologyTable b2 = cohomology_B2(ctx, lambda, mu);
  CohomologyTable rec = reconcile(b1, b2);
  if (rec.status == CohomologyTable::Status::Exact || method == Method::SplitOnly)
    return {rec, "split"};

  // For n ≤ 4 with lambda_1, mu_1 ≤ 3 the cohomology is concentrated in a
  // single degree; under that hypothesis the filtration caps and the Euler
  // characteristic usually pin the table without the direct computation.
  if (concentration_range(ctx, lambda, mu))
    if (auto conc = concentrate_single_degree(b1, b2)) return {*conc, "split-concentrated"};

  CohomologyTable def = cohomology_definitive(ctx, lambda, mu, limits);
  // Cross-checks against the filtration bounds.
  for (const auto& [deg, reps] : def.byDegree)
    for (const auto& [w, m] : reps.terms) {
      auto capOf = [&](const CohomologyTable& t) -> long long {
        auto it = t.byDegree.find(deg);
        if (it == t.byDegree.end()) return 0;
        auto jt = it->second.terms.find(w);
        return jt == it->second.terms.end() ? 0 : jt->second;
      };
      if (m > capOf(b1) || m > capOf(b2))
        throw std::logic_error("exact cohomology exceeds a filtration bound");
    }
  if (!(def.euler() == b1.euler()))
    throw std::logic_error("Euler characteristic mismatch between methods");
  return {def, "definitive"};
}

}  // namespace a3res
