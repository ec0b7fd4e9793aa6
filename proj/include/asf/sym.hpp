#pragma once
#include "asf/linalg.hpp"

namespace asf {

// 𝒮_n = Sym^n(X_*(T) ⊗ ℚ) with the monomial basis in the coordinate
// cocharacters; ∂_χ is the derivation with ∂_χ(v_i) = ⟨χ, e_i⟩
std::vector<std::vector<int>> sym_monomials(int rank, int n);
int sym_dim(int rank, int n);
int sym_index(std::vector<std::vector<int>> const &monos, std::vector<int> const &m);

// matrix of ∂_χ : 𝒮_n → 𝒮_{n−1}, rows indexed by the target basis
QMat derivation(QVec const &chi, int rank, int n);

// basis (rows) of ker(∂_α^d) ∩ 𝒮_n
QMat ker_power_derivation(QVec const &alpha, int rank, int d, int n);

Int binomial(int n, int k);

} // namespace asf
