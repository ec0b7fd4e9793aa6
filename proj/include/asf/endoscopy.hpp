#pragma once
#include "asf/homology.hpp"
#include "asf/laurent.hpp"

namespace asf {

// s ∈ T̂ of finite order, as a homomorphism X_*(T) → ℚ/ℤ on the standard basis
struct TorusPoint
{
	QVec value;
};

int torus_point_order(TorusPoint const &s);
// Φ_s^∨ = {α^∨ : α^∨(s) = 1}, returned as sorted datum root indices
std::vector<int> centralizer_subsystem(RootDatum const &datum, TorusPoint const &s);

// 𝓔_s: maximal Φ_{s′} over the coset s·Ker(T̂ → Ŝ), with the τ-permutation
struct EndoscopicStratum
{
	std::vector<std::vector<int>> systems; // Φ_i as sorted root-index sets
	std::vector<int> tau;                  // τ(Φ_i) = Φ_{tau[i]}
};

EndoscopicStratum strata(RootDatum const &datum, Fan const &fan, TorusPoint const &s,
                         ZMat const *tau_on_costar = nullptr);

// Φ_I = ∩_{i∈I} Φ_i, with Φ_∅ = Φ^G
std::vector<int> stratum_subsystem(RootDatum const &datum, EndoscopicStratum const &st,
                                   std::vector<int> const &i_set);
// d_I = Σ_{α ∈ Φ_+^G − Φ_+^{G_I}} prof(α)
int subsystem_codim_degree(RootDatum const &datum, std::vector<int> const &sys,
                           ValuationProfile const &prof);

// Δ_{H′}^H = Π ∂_α^{prof(α)} over Φ_+^H − Φ_+^{H′}, for Φ^{H′} ⊆ Φ^H
struct TransferFactor
{
	std::vector<int> roots; // positive root indices in the difference
	std::vector<int> exps;
	int degree = 0;
};

TransferFactor transfer_factor(RootDatum const &datum, std::vector<int> const &h,
                               std::vector<int> const &hp, ValuationProfile const &prof);
// matrix of Δ on 𝒮_n → 𝒮_{n−degree}
QMat transfer_matrix(RootDatum const &datum, TransferFactor const &delta, int n);

// induced map on equivariant graded pieces L^H_n → L^{H′}_{n−deg} in quotient
// coordinates; checks relations land in relations
QMat apply_transfer(TransferFactor const &delta, HomologyPresentation const &src,
                    HomologyPresentation const &dst, int n);

// §11.4 Koszul complex on ⊕_{K⊆I} 𝒮 e_K at fixed output 𝒮-degree window:
// position k holds ⊕_{|K|=k} 𝒮_{n − (d_{J∪K} − d_J)}; d∘d = 0 asserted
struct KoszulComplex
{
	std::vector<std::vector<std::vector<int>>> terms; // per position, the K's
	std::vector<QMat> diff;                           // position k → k+1
};

KoszulComplex koszul_complex(RootDatum const &datum, EndoscopicStratum const &st,
                             std::vector<int> const &j_set, std::vector<int> const &i_set,
                             ValuationProfile const &prof, int n);

// homology presentation over 𝒜 = ℚ(ζ_N)[X_*(S)] for rank-1 X_*(S)
struct LaurentHomology
{
	CycField const *F = nullptr;
	Fan const *fan = nullptr;
	TorusDivisor d;
	std::vector<int> h_pos_roots;
	ValuationProfile prof;
	std::vector<LatticePoint> reps; // Γ(D) basis over 𝒜
	int cutoff = 0;
	std::vector<LModule> equivariant; // per 𝒮-degree, ambient = |reps|·dim 𝒮_n
	std::vector<LModule> ordinary;    // L_n = joint kernel of the ∂_χ
};

LaurentHomology laurent_homology(Fan const &fan, TorusDivisor const &d,
                                 ValuationProfile const &prof,
                                 std::vector<int> const &h_pos_roots, CycField const &f);

// ambient transfer map between equivariant pieces, with relation compatibility
LMat apply_transfer_laurent(TransferFactor const &delta, LaurentHomology const &src,
                            LaurentHomology const &dst, int n);

// character value of κ on the X_*(S) generator
Cyc kappa_character(Fan const &fan, TorusPoint const &kappa, CycField const &f);

// trace polynomial Σ_n q^n Σ_p (−1)^p dim Tor_p(κ, L_n); truncation method
// cross-checked against the Smith-form localization
std::vector<Int> tor_trace(LaurentHomology const &lh, Cyc const &c);

} // namespace asf
