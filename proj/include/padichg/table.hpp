#pragma once

#include <string>
#include <vector>

#include "padichg/hyperseries.hpp"

namespace padichg {

// One table position: the family a = (i/N, j/N), b = (k/N) at the prime p,
// evaluated at alpha = 1.  Canonical ordering 1 <= i <= j, i+j <= k <= N.
struct TableRow {
  long p = 0;
  long N = 0;
  long i = 0;
  long j = 0;
  long k = 0;
};

struct TableEntry {
  TableRow row;
  int prec = 0;        // digits m
  mpz_class modulus;   // p^m
  mpz_class value;     // least non-negative residue
};

bool operator<(const TableRow& x, const TableRow& y);
bool operator==(const TableRow& x, const TableRow& y);

// The 69 published rows, in their canonical (p, N, i, j, k) order.
const std::vector<TableRow>& published_rows();

// All canonical rows for one (p, N) with N | p-1: 1 <= i <= j, i+j <= k <= N.
// This can be a strict superset of the published selection for that pair.
std::vector<TableRow> enumerate_rows(long p, long N);

HGParams row_params(const TableRow& row);

TableEntry compute_row(const TableRow& row, int m);

// Computes every row (all-or-nothing: the first per-row error, in row order,
// is rethrown).  threads <= 0 picks the hardware concurrency.
std::vector<TableEntry> compute_table(const std::vector<TableRow>& rows, int m, int threads);

std::string table_csv(const std::vector<TableEntry>& entries);

}  // namespace padichg
