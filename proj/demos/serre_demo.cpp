// Decomposes the projectives R_y of the A2 quiver at 2i+j and prints the Serre identity in K.

#include <iostream>

#include "klr/klr.hpp"

int main() {
  using namespace klr;
  KRing kr(catalog_quiver("A2"));
  const Quiver& q = kr.quiver();
  DimVector nu({2, 1});
  const FiniteQuotient& fq = kr.quotient(nu);

  std::cout << "R0 for " << nu.str(q) << ": dim " << fq.r0().dim() << ", radical " << fq.radical_dim() << "\n";
  for (const auto& L : fq.simples()) std::cout << "  simple " << L.label << "  grdim " << L.grdim.str() << "\n";

  std::cout << "projectives:\n";
  for (const auto& y : divided_sequences(nu)) std::cout << "  [R" << y.str(q) << "] = " << kr.gamma(y).str() << "\n";

  KClass lhs = kr.gamma(DivSeq::parse(q, "i^2,j"));
  lhs += kr.gamma(DivSeq::parse(q, "j,i^2"));
  KClass rhs = kr.gamma(DivSeq::parse(q, "i,j,i"));
  std::cout << "[R(i^2,j)] + [R(j,i^2)] = " << lhs.str() << "\n"
            << "[R(i,j,i)]              = " << rhs.str() << "\n"
            << (lhs == rhs ? "equal" : "NOT equal") << "; f_dim = " << f_dim(q, nu) << "\n";
  return lhs == rhs ? 0 : 1;
}
