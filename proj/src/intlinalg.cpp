#include "affkl/intlinalg.hpp"

#include <stdexcept>

namespace affkl {

namespace {

std::int64_t checked(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("integer overflow in lattice computation");
  return static_cast<std::int64_t>(x);
}

// col_dst -= q * col_src on both the working matrix and the transform
void col_axpy(IntMatrix& e, IntMatrix& u, int dst, int src, std::int64_t q) {
  for (auto& row : e) row[dst] = checked(static_cast<__int128>(row[dst]) - static_cast<__int128>(q) * row[src]);
  for (auto& row : u) row[dst] = checked(static_cast<__int128>(row[dst]) - static_cast<__int128>(q) * row[src]);
}

void col_swap(IntMatrix& e, IntMatrix& u, int a, int b) {
  for (auto& row : e) std::swap(row[a], row[b]);
  for (auto& row : u) std::swap(row[a], row[b]);
}

void col_negate(IntMatrix& e, IntMatrix& u, int a) {
  for (auto& row : e) row[a] = -row[a];
  for (auto& row : u) row[a] = -row[a];
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const std::vector<std::int64_t>& b) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_integer: dimension mismatch");
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  IntMatrix e = a;
  IntMatrix u(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;

  int c = 0;
  std::vector<int> pivot_col(m, -1);
  for (int i = 0; i < m && c < n; ++i) {
    for (int j = c + 1; j < n; ++j) {
      while (e[i][j] != 0) {
        col_axpy(e, u, c, j, e[i][c] / e[i][j]);
        col_swap(e, u, c, j);
      }
    }
    if (e[i][c] != 0) {
      if (e[i][c] < 0) col_negate(e, u, c);
      pivot_col[i] = c++;
    }
  }

  std::vector<std::int64_t> y(n, 0);
  int seen = 0;
  for (int i = 0; i < m; ++i) {
    __int128 s = 0;
    const int upto = pivot_col[i] >= 0 ? pivot_col[i] : seen;
    for (int k = 0; k < upto; ++k) s += static_cast<__int128>(e[i][k]) * y[k];
    const __int128 r = static_cast<__int128>(b[i]) - s;
    if (pivot_col[i] >= 0) {
      if (r % e[i][pivot_col[i]] != 0) return std::nullopt;
      y[pivot_col[i]] = checked(r / e[i][pivot_col[i]]);
      seen = pivot_col[i] + 1;
    } else if (r != 0) {
      return std::nullopt;
    }
  }

  IntegerSolution sol;
  sol.particular.assign(n, 0);
  for (int r = 0; r < n; ++r) {
    __int128 s = 0;
    for (int k = 0; k < n; ++k) s += static_cast<__int128>(u[r][k]) * y[k];
    sol.particular[r] = checked(s);
  }
  for (int k = c; k < n; ++k) {
    std::vector<std::int64_t> col(n);
    for (int r = 0; r < n; ++r) col[r] = u[r][k];
    sol.kernel.push_back(std::move(col));
  }
  return sol;
}

std::optional<std::vector<std::int64_t>> canonical_integer_solution(const IntMatrix& a,
                                                                    const std::vector<std::int64_t>& b) {
  auto sol = solve_integer(a, b);
  if (!sol) return std::nullopt;
  if (sol->kernel.empty()) return sol->particular;

  const int n = static_cast<int>(sol->particular.size());
  std::int64_t bound = 0;
  for (auto x : sol->particular) bound = std::max<std::int64_t>(bound, x < 0 ? -x : x);

  auto satisfies = [&](const std::vector<std::int64_t>& x) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      __int128 s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<__int128>(a[i][j]) * x[j];
      if (s != b[i]) return false;
    }
    return true;
  };

  constexpr double kBudget = 2e7;
  for (std::int64_t box = 0; box <= bound; ++box) {
    double points = 1;
    for (int j = 0; j < n; ++j) points *= static_cast<double>(2 * box + 1);
    if (points > kBudget) break;
    std::vector<std::int64_t> x(n, -box);
    while (true) {
      if (satisfies(x)) return x;
      int j = n - 1;
      while (j >= 0 && x[j] == box) x[j--] = -box;
      if (j < 0) break;
      ++x[j];
    }
  }
  return sol->particular;
}

}  // namespace affkl
