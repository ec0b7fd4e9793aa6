#pragma once
#include "asf/fan.hpp"
#include "asf/sym.hpp"
#include <map>
#include <string>

namespace asf {

// the only trace of γ the engine sees: α ↦ val(α(γ)), symmetric in ±α
struct ValuationProfile
{
	std::vector<int> vals; // indexed like datum.roots
	bool equivalued = false;
	int operator()(int root_index) const { return vals[root_index]; }
};

ValuationProfile constant_profile(RootDatum const &datum, int s);
ValuationProfile profile_from_positive(RootDatum const &datum,
                                       std::vector<int> const &positive_vals);

// one 𝒮-degree of the Prop-10.3-style presentation of H_•^T(𝔛_γ^H(D)):
// ambient Γ(D) ⊗ 𝒮_n modulo the R_{α,d} relation span
struct DegreePiece
{
	QMat rel_rref;              // reduced rows spanning the relation subspace
	std::vector<int> pivots;    // pivot columns of rel_rref
	std::vector<int> free_cols; // ambient indices giving a quotient basis
	int ambient_dim = 0;
	Int quotient_dim() const { return Int(free_cols.size()); }
};

struct HomologyPresentation
{
	Fan const *fan = nullptr;
	TorusDivisor d;
	std::vector<LatticePoint> reps; // Γ(D) basis (X_*(S) = 0)
	std::vector<int> h_pos_roots;   // Φ_+^H as datum root indices
	ValuationProfile prof;
	int cutoff = 0;                   // degrees 0..cutoff computed
	std::vector<DegreePiece> degrees; // indexed by 𝒮-degree n
	bool purity_assumed = true;

	// quotient coordinates of an ambient vector in degree n
	QVec project(int n, QVec v) const;
};

struct BettiTable
{
	std::vector<Int> b; // b[n] = dim H_{2n}
	Int total() const;
	std::string to_json(std::vector<std::string> const &assumptions) const;
};

// span (rows) of R_{α,d} inside Γ(D) ⊗ 𝒮_n; basis index = rep * dim𝒮_n + mono
QMat relation_space(Fan const &fan, std::vector<LatticePoint> const &reps,
                    TorusDivisor const &d, int alpha_root, int dd, int n);

HomologyPresentation equivariant_homology(Fan const &fan, TorusDivisor const &d,
                                          ValuationProfile const &prof,
                                          std::vector<int> const &h_pos_roots);

BettiTable ordinary_homology(HomologyPresentation const &pres);

} // namespace asf
