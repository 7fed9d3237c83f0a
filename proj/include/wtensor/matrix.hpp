#pragma once

#include <wtensor/poly.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

// Register RingPoly as an Eigen scalar so matrices over Z[lam] get the whole
// expression toolkit (products, scalar multiples, Zero/Identity) for free.
namespace Eigen {
template <>
struct NumTraits<wtensor::RingPoly> : GenericNumTraits<wtensor::RingPoly> {
  typedef wtensor::RingPoly Real;
  typedef wtensor::RingPoly NonInteger;
  typedef wtensor::RingPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 20,
    MulCost = 40,
  };
  static inline wtensor::RingPoly epsilon() { return wtensor::RingPoly(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace wtensor {

using PolyMatrix = Eigen::Matrix<RingPoly, Eigen::Dynamic, Eigen::Dynamic>;
using PolyVector = Eigen::Matrix<RingPoly, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::MatrixXi;

// Kronecker product, row-major block layout: out(i*pb+k, j*qb+l) = a(i,j)*b(k,l).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Out = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Out out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.derived().eval();
  return out;
}

template <typename DerivedA, typename DerivedB>
bool mat_eq(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a.derived()(i, j) == b.derived()(i, j))) return false;
  return true;
}

PolyMatrix poly_mat(std::initializer_list<std::initializer_list<long>> rows);

// Row-major polynomial-string serialization of a matrix (CLI interchange).
std::vector<std::string> mat_to_strings(const PolyMatrix& m);
PolyMatrix mat_from_strings(const std::vector<std::string>& flat, Eigen::Index rows,
                            Eigen::Index cols);

std::string mat_str(const PolyMatrix& m);

}  // namespace wtensor
