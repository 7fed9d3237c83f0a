#include <wtensor/matrix.hpp>

#include <sstream>

namespace wtensor {

PolyMatrix poly_mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  PolyMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw std::invalid_argument("poly_mat: ragged rows");
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = RingPoly(v);
    ++i;
  }
  return m;
}

std::vector<std::string> mat_to_strings(const PolyMatrix& m) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j).str());
  return out;
}

PolyMatrix mat_from_strings(const std::vector<std::string>& flat, Eigen::Index rows,
                            Eigen::Index cols) {
  if (static_cast<Eigen::Index>(flat.size()) != rows * cols)
    throw std::invalid_argument("matrix literal: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(flat.size()));
  PolyMatrix m(rows, cols);
  size_t k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = RingPoly::parse(flat[k++]);
  return m;
}

std::string mat_str(const PolyMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

}  // namespace wtensor
