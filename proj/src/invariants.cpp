#include "mvbraid/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mvbraid {

namespace {

struct Overflow {};

// Checked arithmetic for int64; exact for BigInt.
std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t neg(std::int64_t a) { return sub(0, a); }
BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
BigInt neg(const BigInt& a) { return -a; }

template <class T>
T absval(const T& a) {
  return a < 0 ? neg(a) : a;
}

template <class T>
Matrix<T> identity(std::size_t n) {
  Matrix<T> m(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
struct Work {
  Matrix<T> a, left, right;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(left[i], left[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : right) std::swap(r[i], r[j]);
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] = add(a[i][c], mul(q, a[j][c]));
    for (std::size_t c = 0; c < rows; ++c) left[i][c] = add(left[i][c], mul(q, left[j][c]));
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] = add(a[r][i], mul(q, a[r][j]));
    for (std::size_t r = 0; r < cols; ++r) right[r][i] = add(right[r][i], mul(q, right[r][j]));
  }
  void negate_row(std::size_t i) {
    for (auto& v : a[i]) v = neg(v);
    for (auto& v : left[i]) v = neg(v);
  }
};

template <class T>
Work<T> reduce(const IntMatrix& m, std::size_t cols) {
  Work<T> w;
  w.rows = m.size();
  w.cols = cols;
  w.a.assign(w.rows, std::vector<T>(cols, T(0)));
  for (std::size_t i = 0; i < w.rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) w.a[i][j] = T(m[i][j]);
  w.left = identity<T>(w.rows);
  w.right = identity<T>(cols);

  const std::size_t steps = std::min(w.rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero absolute value in the trailing block, first by position.
      bool found = false;
      std::size_t pr = 0, pc = 0;
      T best(0);
      for (std::size_t i = t; i < w.rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (w.a[i][j] == 0) continue;
          T v = absval(w.a[i][j]);
          if (!found || v < best) {
            found = true;
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (!found) return w;
      if (pr != t) w.swap_rows(pr, t);
      if (pc != t) w.swap_cols(pc, t);
      const T p = w.a[t][t];

      bool residue = false;
      for (std::size_t i = t + 1; i < w.rows; ++i) {
        if (w.a[i][t] == 0) continue;
        T q = w.a[i][t] / p;
        w.add_row(i, t, neg(q));
        if (w.a[i][t] != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.a[t][j] == 0) continue;
        T q = w.a[t][j] / p;
        w.add_col(j, t, neg(q));
        if (w.a[t][j] != 0) residue = true;
      }
      if (residue) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < w.rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.a[i][j] % p != 0) {
            w.add_row(t, i, T(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.a[t][t] < 0) w.negate_row(t);
  }
  return w;
}

Matrix<BigInt> to_big(const Matrix<std::int64_t>& m) {
  Matrix<BigInt> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) out[i].emplace_back(v);
  return out;
}

template <class T>
SmithForm finish(Work<T>&& w, bool promoted) {
  SmithForm s;
  s.promoted = promoted;
  if constexpr (std::is_same_v<T, BigInt>) {
    s.reduced = std::move(w.a);
    s.left = std::move(w.left);
    s.right = std::move(w.right);
  } else {
    s.reduced = to_big(w.a);
    s.left = to_big(w.left);
    s.right = to_big(w.right);
  }
  for (std::size_t i = 0; i < std::min(w.rows, w.cols); ++i) s.diagonal.push_back(s.reduced[i][i]);
  return s;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  std::size_t cols = m.empty() ? 0 : m.front().size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  try {
    return finish(reduce<std::int64_t>(m, cols), false);
  } catch (const Overflow&) {
    return finish(reduce<BigInt>(m, cols), true);
  }
}

bool verify_smith(const IntMatrix& m, const SmithForm& s) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m.front().size();
  if (s.left.size() != rows || s.right.size() != cols || s.reduced.size() != rows) return false;
  // Off-diagonal zeros and divisibility.
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j && s.reduced[i][j] != 0) return false;
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    if (s.diagonal[i] < 0) return false;
    if (s.diagonal[i] == 0 ? s.diagonal[i + 1] != 0 : s.diagonal[i + 1] % s.diagonal[i] != 0) return false;
  }
  Matrix<BigInt> lm(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rows; ++k) {
      if (s.left[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) lm[i][j] += s.left[i][k] * m[k][j];
    }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt v = 0;
      for (std::size_t k = 0; k < cols; ++k) v += lm[i][k] * s.right[k][j];
      if (v != s.reduced[i][j]) return false;
    }
  return true;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m;
  for (const auto& r : p.relators()) {
    std::vector<std::int64_t> row(p.generators().size(), 0);
    for (const auto& l : r.word()) {
      int g = p.generator_index(l.gen);
      if (g < 0) throw MissingImage(l.gen);
      row[static_cast<std::size_t>(g)] += l.exp;
    }
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  AbelianInvariants a;
  const std::size_t gens = p.generators().size();
  if (p.relators().empty() || gens == 0) {
    a.rank = gens;
    return a;
  }
  const auto m = relation_matrix(p);
  auto s = smith_normal_form(m);
  if (!verify_smith(m, s)) throw std::logic_error("Smith normal form check failed");
  std::size_t nonzero = 0;
  for (const auto& d : s.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) a.torsion.push_back(d);
  }
  a.rank = gens - nonzero;
  return a;
}

AbelianInvariants direct_sum(const std::vector<AbelianInvariants>& parts) {
  // Abelianise the block-diagonal relation matrix of cyclic factors.
  std::size_t rank = 0;
  std::vector<BigInt> cyclic;
  for (const auto& p : parts) {
    rank += p.rank;
    cyclic.insert(cyclic.end(), p.torsion.begin(), p.torsion.end());
  }
  // Invariant factors via prime-power-free merging: repeated gcd/lcm.
  std::sort(cyclic.begin(), cyclic.end());
  for (std::size_t i = 0; i < cyclic.size(); ++i)
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(cyclic[i], cyclic[j]);
      BigInt l = cyclic[i] / g * cyclic[j];
      cyclic[i] = g;
      cyclic[j] = l;
    }
  AbelianInvariants out;
  out.rank = rank;
  for (auto& c : cyclic)
    if (c > 1) out.torsion.push_back(c);
  return out;
}

std::string AbelianInvariants::str() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  else if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
  return s;
}

}  // namespace mvbraid
