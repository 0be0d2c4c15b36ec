#include "fano/matrix.hpp"

namespace fano {

bool is_positive_definite(const Matrix<Rational>& m) {
  if (!m.is_symmetric()) throw InvalidArgument("is_positive_definite: matrix is not symmetric");
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (determinant(m.submatrix(0, 0, k, k)).sign() <= 0) return false;
  return true;
}

}  // namespace fano
