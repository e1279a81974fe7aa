#include "padichg/table.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace padichg {

namespace {

long key_of(const TableRow& r, int pos) {
  switch (pos) {
    case 0: return r.p;
    case 1: return r.N;
    case 2: return r.i;
    case 3: return r.j;
    default: return r.k;
  }
}

}  // namespace

bool operator<(const TableRow& x, const TableRow& y) {
  for (int pos = 0; pos < 5; ++pos) {
    if (key_of(x, pos) != key_of(y, pos)) return key_of(x, pos) < key_of(y, pos);
  }
  return false;
}

bool operator==(const TableRow& x, const TableRow& y) {
  return x.p == y.p && x.N == y.N && x.i == y.i && x.j == y.j && x.k == y.k;
}

const std::vector<TableRow>& published_rows() {
  static const std::vector<TableRow> rows = {
      {3, 2, 1, 1, 2},
      {5, 2, 1, 1, 2},
      {5, 4, 1, 1, 2},  {5, 4, 1, 1, 3},  {5, 4, 1, 1, 4},  {5, 4, 1, 2, 3},
      {5, 4, 1, 2, 4},  {5, 4, 1, 3, 4},
      {7, 2, 1, 1, 2},
      {7, 3, 1, 1, 2},  {7, 3, 1, 1, 3},  {7, 3, 1, 2, 3},
      {7, 6, 1, 1, 2},  {7, 6, 1, 1, 3},  {7, 6, 1, 1, 4},  {7, 6, 1, 1, 5},
      {7, 6, 1, 1, 6},  {7, 6, 1, 2, 3},  {7, 6, 1, 2, 4},  {7, 6, 1, 2, 5},
      {7, 6, 1, 2, 6},  {7, 6, 1, 3, 4},  {7, 6, 1, 3, 5},  {7, 6, 1, 3, 6},
      {7, 6, 1, 4, 5},  {7, 6, 1, 4, 6},  {7, 6, 1, 5, 6},  {7, 6, 2, 3, 5},
      {7, 6, 2, 3, 6},
      {11, 2, 1, 1, 2},
      {11, 5, 1, 1, 2}, {11, 5, 1, 1, 3}, {11, 5, 1, 1, 4}, {11, 5, 1, 1, 5},
      {11, 5, 1, 2, 3}, {11, 5, 1, 2, 4}, {11, 5, 1, 2, 5}, {11, 5, 1, 3, 4},
      {11, 5, 1, 3, 5}, {11, 5, 1, 4, 5}, {11, 5, 2, 2, 4}, {11, 5, 2, 2, 5},
      {11, 5, 2, 3, 5},
      {13, 2, 1, 1, 2},
      {13, 3, 1, 1, 2}, {13, 3, 1, 1, 3}, {13, 3, 1, 2, 3},
      {13, 4, 1, 1, 2}, {13, 4, 1, 1, 3}, {13, 4, 1, 1, 4}, {13, 4, 1, 2, 3},
      {13, 4, 1, 2, 4}, {13, 4, 1, 3, 4},
      {13, 6, 1, 1, 2}, {13, 6, 1, 1, 3}, {13, 6, 1, 1, 4}, {13, 6, 1, 1, 5},
      {13, 6, 1, 1, 6}, {13, 6, 1, 2, 3}, {13, 6, 1, 2, 4}, {13, 6, 1, 2, 5},
      {13, 6, 1, 2, 6}, {13, 6, 1, 3, 4}, {13, 6, 1, 3, 5}, {13, 6, 1, 4, 5},
      {13, 6, 1, 4, 6}, {13, 6, 1, 5, 6}, {13, 6, 2, 3, 5}, {13, 6, 2, 3, 6},
  };
  return rows;
}

std::vector<TableRow> enumerate_rows(long p, long N) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (N < 2) throw std::invalid_argument("N must be at least 2");
  if ((p - 1) % N != 0) throw std::invalid_argument("N must divide p-1");
  std::vector<TableRow> rows;
  for (long i = 1; i < N; ++i)
    for (long j = i; j < N; ++j)
      for (long k = i + j; k <= N; ++k) rows.push_back({p, N, i, j, k});
  return rows;
}

HGParams row_params(const TableRow& row) {
  return make_hg_params({frac(row.i, row.N), frac(row.j, row.N)}, {frac(row.k, row.N)}, row.p);
}

TableEntry compute_row(const TableRow& row, int m) {
  if (row.i < 1 || row.i > row.j) throw std::invalid_argument("need 1 <= i <= j");
  if (row.k < row.i + row.j || row.k > row.N)
    throw std::invalid_argument("need i+j <= k <= N");
  SpecialValueResult r = special_value(row_params(row), Rational(1), m);
  TableEntry e;
  e.row = row;
  e.prec = m;
  e.modulus = r.modulus;
  e.value = r.residue;
  return e;
}

std::vector<TableEntry> compute_table(const std::vector<TableRow>& rows, int m, int threads) {
  if (threads <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    threads = hc == 0 ? 1 : static_cast<int>(hc);
  }
  std::vector<TableEntry> out(rows.size());
  if (threads == 1 || rows.size() < 2) {
    for (std::size_t r = 0; r < rows.size(); ++r) out[r] = compute_row(rows[r], m);
    return out;
  }

  std::vector<std::exception_ptr> errors(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t r = next.fetch_add(1);
      if (r >= rows.size()) return;
      try {
        out[r] = compute_row(rows[r], m);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), rows.size());
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  // all-or-nothing, deterministic: the first failing row wins
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (errors[r]) std::rethrow_exception(errors[r]);
  return out;
}

std::string table_csv(const std::vector<TableEntry>& entries) {
  std::ostringstream os;
  os << "p,N,i,j,k,modulus,value\n";
  for (const auto& e : entries) {
    os << e.row.p << ',' << e.row.N << ',' << e.row.i << ',' << e.row.j << ',' << e.row.k << ','
       << e.modulus.get_str() << ',' << e.value.get_str() << '\n';
  }
  return os.str();
}

}  // namespace padichg
