#include <wtensor/qlattice.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace wtensor {

namespace {

long inv_mod(long a, long q) {
  // q is a small prime; extended Euclid would also do.
  long r = 1;
  long base = ((a % q) + q) % q;
  for (long e = q - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
  }
  return r;
}

}  // namespace

IntMatrix mod_reduce(IntMatrix m, long q) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = static_cast<int>(((m(i, j) % q) + q) % q);
  return m;
}

IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, long q) {
  IntMatrix out = a * b;
  return mod_reduce(std::move(out), q);
}

IntMatrix mod_rref(IntMatrix m, long q) {
  m = mod_reduce(std::move(m), q);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    m.row(rank).swap(m.row(piv));
    const long inv = inv_mod(m(rank, col), q);
    for (Eigen::Index j = 0; j < cols; ++j)
      m(rank, j) = static_cast<int>(m(rank, j) * inv % q);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, col) == 0) continue;
      const long f = m(r, col);
      for (Eigen::Index j = 0; j < cols; ++j)
        m(r, j) = static_cast<int>((((m(r, j) - f * m(rank, j)) % q) + q) % q);
    }
    ++rank;
  }
  return m.topRows(rank);
}

int mod_rank(const IntMatrix& m, long q) { return static_cast<int>(mod_rref(m, q).rows()); }

IntMatrix mod_nullspace(const IntMatrix& m, long q) {
  const Eigen::Index n = m.cols();
  IntMatrix r = mod_rref(m, q);
  std::vector<Eigen::Index> pivot_col;
  std::vector<char> is_pivot(static_cast<size_t>(n), 0);
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    for (Eigen::Index j = 0; j < n; ++j)
      if (r(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[static_cast<size_t>(j)] = 1;
        break;
      }
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
  IntMatrix basis(static_cast<Eigen::Index>(free_cols.size()), n);
  basis.setZero();
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index fc = free_cols[k];
    basis(static_cast<Eigen::Index>(k), fc) = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) {
      const long v = r(static_cast<Eigen::Index>(i), fc);
      basis(static_cast<Eigen::Index>(k), pivot_col[i]) =
          static_cast<int>(((-v) % q + q) % q);
    }
  }
  return mod_rref(std::move(basis), q);
}

SubspaceLattice::SubspaceLattice(const QParam& q, int n) : q_(q), n_(n) {
  if (!q.prime || q.q > 5)
    throw std::invalid_argument("subspace enumeration requires prime q in {2,3,5}");
  if (n < 0 || n > 4) throw std::invalid_argument("subspace enumeration requires n <= 4");

  // Enumerate RREF bases directly: choose pivot columns, then free entries.
  std::vector<std::pair<std::vector<int>, IntMatrix>> keyed;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> piv(static_cast<size_t>(k));
    std::function<void(int, int)> choose = [&](int start, int depth) {
      if (depth == k) {
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        for (int r = 0; r < k; ++r)
          for (int c = piv[static_cast<size_t>(r)] + 1; c < n; ++c) {
            bool pivot_col = false;
            for (int rr = 0; rr < k; ++rr)
              if (piv[static_cast<size_t>(rr)] == c) pivot_col = true;
            if (!pivot_col) free_pos.emplace_back(r, c);
          }
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
          IntMatrix m(k, n);
          m.setZero();
          for (int r = 0; r < k; ++r) m(r, piv[static_cast<size_t>(r)]) = 1;
          for (size_t i = 0; i < free_pos.size(); ++i)
            m(free_pos[i].first, free_pos[i].second) = vals[i];
          std::vector<int> key;
          key.push_back(k);
          for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) key.push_back(m(r, c));
          keyed.emplace_back(std::move(key), std::move(m));
          size_t pos = 0;
          while (pos < vals.size() && ++vals[pos] == q_.q) vals[pos++] = 0;
          if (pos == vals.size()) break;
        }
        return;
      }
      for (int c = start; c < n; ++c) {
        piv[static_cast<size_t>(depth)] = c;
        choose(c + 1, depth + 1);
      }
    };
    choose(0, 0);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  subs_.reserve(keyed.size());
  by_dim_.assign(static_cast<size_t>(n) + 1, {});
  for (auto& [key, m] : keyed) {
    Subspace s;
    s.n = n;
    s.dim = static_cast<int>(m.rows());
    s.basis = m;
    index_[key] = subs_.size();
    by_dim_[static_cast<size_t>(s.dim)].push_back(subs_.size());
    subs_.push_back(std::move(s));
  }

  // Containment: V <= U iff stacking changes nothing about U's row space.
  leq_.assign(subs_.size(), std::vector<char>(subs_.size(), 0));
  for (size_t vi = 0; vi < subs_.size(); ++vi)
    for (size_t ui = 0; ui < subs_.size(); ++ui) {
      if (subs_[vi].dim > subs_[ui].dim) continue;
      IntMatrix stacked(subs_[vi].basis.rows() + subs_[ui].basis.rows(), n);
      stacked << subs_[vi].basis, subs_[ui].basis;
      leq_[vi][ui] = (mod_rank(stacked, q_.q) == subs_[ui].dim) ? 1 : 0;
    }
}

size_t SubspaceLattice::index_of_span(const IntMatrix& m) const {
  IntMatrix r = mod_rref(m, q_.q);
  std::vector<int> key;
  key.push_back(static_cast<int>(r.rows()));
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) key.push_back(r(i, j));
  auto it = index_.find(key);
  if (it == index_.end()) throw std::logic_error("index_of_span: not in lattice (internal)");
  return it->second;
}

int SubspaceLattice::intersection_dim(size_t i, size_t j) const {
  IntMatrix stacked(subs_[i].basis.rows() + subs_[j].basis.rows(), n_);
  stacked << subs_[i].basis, subs_[j].basis;
  const int sum_rank = mod_rank(stacked, q_.q);
  return subs_[i].dim + subs_[j].dim - sum_rank;
}

}  // namespace wtensor
