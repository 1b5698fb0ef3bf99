#include "nilforge/catalog.hpp"

namespace nilforge::catalog {

std::vector<RationalMatrix> n20_generators() {
  return {RationalMatrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}),
          RationalMatrix::from_rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}})};
}

std::vector<RationalMatrix> n11_generators() {
  return {RationalMatrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}),
          RationalMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}})};
}

std::vector<RationalMatrix> n02_generators() {
  return {RationalMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}),
          RationalMatrix::from_rows({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}})};
}

MetricAlgebra n20() {
  return algebra_from_J(n20_generators(), SignatureForm::standard(4, 0), SignatureForm::standard(2, 0));
}

MetricAlgebra n11() {
  return algebra_from_J(n11_generators(), SignatureForm::standard(2, 2), SignatureForm::standard(1, 1));
}

MetricAlgebra n02() {
  return algebra_from_J(n02_generators(), SignatureForm::standard(2, 2), SignatureForm::standard(0, 2));
}

MetricAlgebra heisenberg() {
  return MetricAlgebra(NilpotentAlgebra2(2, {RationalMatrix::from_rows({{0, 1}, {-1, 0}})},
                                         SignatureForm::standard(2, 0), SignatureForm::standard(1, 0)));
}

}  // namespace nilforge::catalog
