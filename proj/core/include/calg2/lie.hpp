#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "calg2/exterior.hpp"
#include "calg2/linalg.hpp"

namespace calg2 {

// Lie algebra given by its Chevalley-Eilenberg data de^1..de^n.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<Form> d_one);

  static LieAlgebra from_salamon(std::string_view text, int dim = -1);
  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  const std::vector<Form>& d_one() const { return d_one_; }
  const Form& de(int i) const { return d_one_.at(static_cast<std::size_t>(i - 1)); }
  bool is_abelian() const;

  // d extended to all degrees as an antiderivation.
  template <class S>
  BasicForm<S> differential(const BasicForm<S>& a) const;
  Form d(const Form& a) const { return differential(a); }

  // Columns are d of the lexicographic monomials of degree k.
  QMatrix differential_matrix(int degree) const;

  std::string salamon() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.d_one_ == b.d_one_; }

 private:
  int dim_ = 0;
  std::vector<Form> d_one_;
};

template <class S>
BasicForm<S> LieAlgebra::differential(const BasicForm<S>& a) const {
  if (a.dim() != dim_) throw std::invalid_argument("differential: form lives in the wrong dimension");
  if (a.degree() == dim_) return BasicForm<S>(dim_, dim_);
  BasicForm<S> r(dim_, a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> idx = m.indices();
    // d e^{i1..ik} = sum_j (-1)^j e^{i1..} ^ de^{ij} ^ e^{..ik}
    std::uint16_t left = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      std::uint16_t bit = static_cast<std::uint16_t>(1u << (idx[j] - 1));
      std::uint16_t right = static_cast<std::uint16_t>(m.mask() & ~left & ~bit);
      for (const auto& [p, q] : d_one_[static_cast<std::size_t>(idx[j] - 1)].terms()) {
        int s1 = wedge_sign(MultiIndex::from_mask(left), p);
        if (!s1) continue;
        MultiIndex lp = MultiIndex::from_mask(static_cast<std::uint16_t>(left | p.mask()));
        int s2 = wedge_sign(lp, MultiIndex::from_mask(right));
        if (!s2) continue;
        int s = s1 * s2 * ((j % 2) ? -1 : 1);
        S t = S(q) * c;
        r.add_term(MultiIndex::from_mask(static_cast<std::uint16_t>(lp.mask() | right)), s > 0 ? t : -t);
      }
      left = static_cast<std::uint16_t>(left | bit);
    }
  }
  return r;
}

bool is_jacobi(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

// Vectors X with X -| de^i = 0 for all i.
Subspace center(const LieAlgebra& g);
bool is_central(const LieAlgebra& g, const Vector& x);

struct CentralQuotient {
  LieAlgebra quotient;
  Form eta;        // on g, eta(xi) = 1
  Form curvature;  // d eta as a 2-form on the quotient
  // f^1..f^{n-1} spanning the annihilator of xi, then eta; all on g.
  std::vector<Form> adapted_coframe;
  int pivot = 0;  // 1-based coordinate used to normalize xi
};

CentralQuotient central_quotient(const LieAlgebra& g, const Vector& xi);
LieAlgebra central_extension(const LieAlgebra& h, const Form& gamma);
LieAlgebra direct_sum_with_line(const LieAlgebra& h);

// Structure constants of g in the coframe f^i = coframe[i-1].
LieAlgebra change_coframe(const LieAlgebra& g, const std::vector<Form>& coframe);

// Coefficient matrix A with f^i = sum_j A_ij e^j.
QMatrix coframe_matrix(const std::vector<Form>& coframe);

}  // namespace calg2
