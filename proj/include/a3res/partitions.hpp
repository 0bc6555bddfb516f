#pragma once

#include <optional>
#include <string>
#include <vector>

namespace a3res {

/// A partition: weakly decreasing positive integers, stored without trailing zeros.
using Partition = std::vector<int>;

/// A GL(n) dominant (or arbitrary torus) weight: integer sequence of full length n.
using Weight = std::vector<int>;

/// Validates and normalizes: strips trailing zeros, rejects negative or increasing data.
/// Throws std::invalid_argument on bad input.
Partition make_partition(std::vector<int> parts);

/// True if the vector is weakly decreasing and non-negative (trailing zeros allowed).
bool is_partition_vec(const std::vector<int>& p);

/// 1-based part access; returns 0 beyond the length.
int part_at(const Partition& p, int i);

/// Sum of the parts.
int partition_size(const Partition& p);

/// Number of nonzero parts.
int partition_rows(const Partition& p);

/// Column lengths of the Young diagram.
Partition conjugate(const Partition& p);

/// Side of the largest square inside the diagram, with the split into
/// arms (parts right of the square) and legs (parts below the square).
struct DurfeeSplit {
  int u;
  Partition arms;  ///< (p_1 - u, ..., p_u - u), zeros stripped
  Partition legs;  ///< (p_{u+1}, p_{u+2}, ...)
};
DurfeeSplit durfee_split(const Partition& p);
int durfee(const Partition& p);

bool contains(const Partition& outer, const Partition& inner);
bool fits_in_box(const Partition& p, int rows, int cols);

/// All partitions of t inside a rows x cols box, lexicographically descending.
std::vector<Partition> partitions_of(int t, int rows, int cols);

/// All partitions (any size) inside a rows x cols box.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// All sub-partitions of p with the given size.
std::vector<Partition> subpartitions_of_size(const Partition& p, int t);

/// Result of weight normalization: cohomological degree plus dominant weight.
struct BottResult {
  int degree;
  Weight weight;
  bool operator==(const BottResult&) const = default;
};

/// Normalizes an integer sequence under the exchange rule
/// sigma_i . delta = (..., delta_{i+1} - 1, delta_i + 1, ...).
/// With rho = (m-1, ..., 1, 0): absent iff delta+rho has a repeated entry;
/// otherwise degree = inversion count of delta+rho and
/// weight = sort_desc(delta+rho) - rho.
std::optional<BottResult> bott_normalize(const std::vector<int>& delta);

/// Weakly decreasing test for full-length weights.
bool is_dominant(const Weight& w);

/// Partition padded with zeros to length n. Throws if the partition is longer than n.
Weight pad_to(const Partition& p, int n);

/// Dual (contragredient) weight: (-w_n, ..., -w_1).
Weight dual_weight(const Weight& w);

/// "3,1" style rendering; empty vector renders as "".
std::string join_csv(const std::vector<int>& v);

/// Parses "3,1" (empty string -> empty vector); nullopt on malformed input.
std::optional<std::vector<int>> parse_csv_ints(const std::string& s);

}  // namespace a3res
