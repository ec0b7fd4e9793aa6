#pragma once
#include "asf/fan.hpp"
#include <optional>

namespace asf {

// Cox homogeneous coordinate ring of the toric variety of Σ_M^G: one
// variable y_σ per ray, graded by Cl(Y) = ℤ^Σ(1) / (principal divisors).
// The section λ ↦ lift used for coset representatives is non-canonical;
// `variant` selects between two choices so tests can check independence.
struct CoxRing
{
	Fan const *fan = nullptr;
	int variant = 0;
	ZMat principal; // rows: (e_i) = divisor of the i-th cocharacter basis vector
};

CoxRing make_cox(Fan const &fan, int variant = 0);

// [D1] = [D2] in Cl(Y)?
bool same_class(CoxRing const &a, TorusDivisor const &d1, TorusDivisor const &d2);

struct GradedPieceBasis
{
	TorusDivisor deg;
	bool mod_s = false;
	std::vector<LatticePoint> basis; // monomials y^{λ+D}
};

GradedPieceBasis graded_piece(CoxRing const &a, TorusDivisor const &d, bool mod_s);

struct Cohomology
{
	std::vector<Int> h; // h[i] = dim H^i(Y, Õ(D))
	Int euler() const;
};

// weight-by-weight Čech cohomology over the cover {U_P}, P ∈ 𝓟(M);
// requires X_*(S) = 0 (bounded weight support)
Cohomology sheaf_cohomology(CoxRing const &a, TorusDivisor const &d);

// a term c·y^{λ + deg} of a homogeneous element of A[deg]
struct ModuleTerm
{
	Rat coeff;
	ZVec lambda; // in X_*(T), with (λ) + deg ≥ 0
};

// finitely presented graded A-module L = coker(⊕_j A(−R_j) → ⊕_i A(−G_i))
struct GradedModule
{
	std::vector<TorusDivisor> gens; // degrees G_i
	std::vector<TorusDivisor> rels; // degrees R_j
	// entry[j][i] ∈ A[R_j − G_i]
	std::vector<std::vector<std::vector<ModuleTerm>>> entry;
};

GradedModule module_from_json(CoxRing const &a, std::string const &text);

struct ModuleCohomology
{
	Int piece_dim = 0;           // dim L[D], always exact
	std::optional<Int> h0;       // sheaf-level h^0 when certified
	std::vector<bool> vanishing; // vanishing[i] (i ≥ 1): certified h^i = 0
	bool injective_cover = false;
};

ModuleCohomology module_sheaf_cohomology(CoxRing const &a, GradedModule const &m,
                                         TorusDivisor const &d);

} // namespace asf
