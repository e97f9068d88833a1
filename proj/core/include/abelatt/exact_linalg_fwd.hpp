#pragma once

#include "abelatt/numeric.hpp"

namespace abelatt {

template <class T>
class DenseMatrix;

using RatMatrix = DenseMatrix<Rat>;
using IntMatrix = DenseMatrix<Int>;

}  // namespace abelatt
