#pragma once

// Partitions and compositions stored as plain integer vectors.

#include <string>
#include <vector>

#include <gmpxx.h>

namespace nabla {

using Partition = std::vector<int>;
using Composition = std::vector<int>;

int size_of(const Partition& p);
bool is_partition(const std::vector<int>& p);
Partition conjugate(const Partition& p);
// n(lambda) = sum (i-1) lambda_i
int n_stat(const Partition& p);
// lambda <= mu in dominance order (same size assumed)
bool dominated_by(const Partition& lambda, const Partition& mu);
mpz_class z_lambda(const Partition& p);
// Nonzero entries sorted decreasingly.
Partition sort_to_partition(const std::vector<int>& v);
// Multiplicities of equal entries, as a partition.
Partition multiplicities(const std::vector<int>& v);

// All partitions of n in reverse lexicographic order, so (n) comes first.
// Reverse lex order is a linear extension of dominance.
const std::vector<Partition>& partitions_of(int n);
// Index of p inside partitions_of(|p|).
int partition_index(const Partition& p);

// Arm and leg of cell (i, j) (0-based row, column) of p.
int arm(const Partition& p, int i, int j);
int leg(const Partition& p, int i, int j);

std::string to_string(const std::vector<int>& v);

}  // namespace nabla
