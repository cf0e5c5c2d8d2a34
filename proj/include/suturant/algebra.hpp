#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace suturant {

using Vec = std::vector<int64_t>;
using IntMat = std::vector<std::vector<int64_t>>;  // rows = output dim, cols = input dim

// Finite-dimensional Hopf superalgebra given by integer structure constants.
// mul_sc[(i*D + j)*D + k]  : coefficient of e_k in e_i e_j
// comul_sc[(i*D + j)*D + k]: coefficient of e_j (x) e_k in Delta(e_i)
// antipode_sc[i*D + j]     : coefficient of e_j in S(e_i)
struct PresentedAlgebra {
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<int> parity;
  std::vector<int64_t> mul_sc;
  std::vector<int64_t> comul_sc;
  std::vector<int64_t> antipode_sc;
  Vec counit_vec;
  int unit_index = 0;
  int coeff_modulus = 0;

  int64_t mul(int i, int j, int k) const { return mul_sc[(i * dim + j) * dim + k]; }
  int64_t comul(int i, int j, int k) const { return comul_sc[(i * dim + j) * dim + k]; }
  int64_t antipode(int i, int j) const { return antipode_sc[i * dim + j]; }
};

// B sits inside H; its basis element k equals b^{b_powers[k]}.
struct RelativeIntegralData {
  std::vector<int> b_basis;
  IntMat i_b_matrix;   // D x |B|
  IntMat pi_b_matrix;  // |B| x D
  IntMat mu_matrix;    // |B| x D
  Vec glike_b;         // element of B
  int glike_b_order = 1;
  std::vector<int> b_powers;
  int mu_parity = 0;
};

// a* is stored as exponents into a cyclic group of order astar_order.
// iota is kept unnormalized; the true cointegral is (iota_num / iota_den) * iota_matrix.
struct RelativeCointegralData {
  std::vector<int> a_basis;
  IntMat pi_a_matrix;  // |A| x D
  IntMat i_a_matrix;   // D x |A|
  IntMat iota_matrix;  // D x |A|
  std::vector<int64_t> astar;
  int astar_order = 1;
  int iota_parity = 0;
  int64_t iota_num = 1;
  int64_t iota_den = 1;
};

struct HopfPackage {
  PresentedAlgebra algebra;
  RelativeIntegralData integral;
  RelativeCointegralData cointegral;
  std::string name;
};

struct TensorTerm {
  int64_t coeff;
  std::vector<int> idx;
};

struct AxiomResult {
  std::string name;
  bool passed;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_passed() const;
  const AxiomResult* find(const std::string& name) const;
};

HopfPackage build_hn(int n);
HopfPackage build_cyclic_group_algebra(int m);

Vec basis_vector(int dim, int i);
Vec apply(const IntMat& m, const Vec& v);
Vec multiply(const PresentedAlgebra& h, const Vec& x, const Vec& y);
Vec antipode(const PresentedAlgebra& h, const Vec& x);

// Delta^{(k)}(x): k = 0 gives the counit, k = 1 the identity.
std::vector<TensorTerm> coproduct_power(const HopfPackage& pkg, const Vec& x, int k);

AxiomReport check_axioms(const HopfPackage& pkg);

}  // namespace suturant
