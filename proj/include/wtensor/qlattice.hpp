#pragma once

#include <wtensor/counts.hpp>
#include <wtensor/matrix.hpp>

#include <map>
#include <vector>

namespace wtensor {

// ---- F_q linear algebra on integer matrices (entries reduced mod q) ----

IntMatrix mod_reduce(IntMatrix m, long q);
IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, long q);
// Reduced row echelon form; returns the nonzero rows only (rank many).
IntMatrix mod_rref(IntMatrix m, long q);
int mod_rank(const IntMatrix& m, long q);
// RREF basis of the right kernel {v : m v = 0}, rows are basis vectors.
IntMatrix mod_nullspace(const IntMatrix& m, long q);

// A subspace of F_q^n in canonical form: RREF basis rows.
struct Subspace {
  int n = 0;
  int dim = 0;
  IntMatrix basis;  // dim x n (0 x n for the zero space)
};

// All subspaces of F_q^n with containment precomputed. Deterministic order:
// by dimension, then lexicographically by the flattened RREF basis.
class SubspaceLattice {
 public:
  // Throws std::invalid_argument for non-prime q, q > 5, or n > 4.
  SubspaceLattice(const QParam& q, int n);

  const QParam& q() const { return q_; }
  int n() const { return n_; }
  size_t size() const { return subs_.size(); }
  const Subspace& operator[](size_t i) const { return subs_[i]; }
  // subs[vi] <= subs[ui]?
  bool leq(size_t vi, size_t ui) const { return leq_[vi][ui] != 0; }
  size_t zero_index() const { return 0; }
  size_t full_index() const { return subs_.size() - 1; }
  const std::vector<size_t>& by_dim(int d) const { return by_dim_[static_cast<size_t>(d)]; }
  // Index of the subspace spanned by the rows of m (any spanning set).
  size_t index_of_span(const IntMatrix& m) const;
  int intersection_dim(size_t i, size_t j) const;

 private:
  QParam q_;
  int n_;
  std::vector<Subspace> subs_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<size_t>> by_dim_;
  std::map<std::vector<int>, size_t> index_;
};

}  // namespace wtensor
