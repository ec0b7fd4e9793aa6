#pragma once
#include "asf/cyclotomic.hpp"
#include <optional>

namespace asf {

// 𝒜 = ℚ(ζ_N)[u, u^{−1}], the group algebra of X_*(S) for rank-1 S
struct LP
{
	CycField const *F = nullptr;
	int lo = 0;
	std::vector<Cyc> c; // Σ c[i] u^{lo+i}, normalized: c.front(), c.back() ≠ 0
};

LP lp_zero(CycField const &f);
LP lp_const(CycField const &f, Cyc const &x);
LP lp_u(CycField const &f, int k); // u^k
LP lp_normalize(LP p);
bool lp_is_zero(LP const &p);
bool lp_eq(LP const &a, LP const &b);
int lp_span(LP const &p); // degree spread, −1 for 0
LP lp_add(LP const &a, LP const &b);
LP lp_sub(LP const &a, LP const &b);
LP lp_neg(LP const &a);
LP lp_mul(LP const &a, LP const &b);
LP lp_pow(LP const &a, int n);
// a = q·b + r with span(r) < span(b) (units of 𝒜 absorbed)
LP lp_divmod(LP const &a, LP const &b, LP *rem);
Cyc lp_eval(LP const &p, Cyc const &x); // x invertible
std::string to_string(LP const &p);

using LMat = std::vector<std::vector<LP>>; // row-major, maps 𝒜^cols → 𝒜^rows

LMat lmat_identity(CycField const &f, int n);
LMat lmat_mul(LMat const &a, LMat const &b);

// Smith normal form s = u·a·v with u, v invertible over 𝒜
struct Snf
{
	LMat s, u, v;
	std::vector<LP> diag; // nonzero diagonal entries
};
Snf snf(LMat const &a);

// columns spanning ker(a) ⊆ 𝒜^cols
LMat syzygies(LMat const &a);
// solve a·x = b
std::optional<std::vector<LP>> lsolve(LMat const &a, std::vector<LP> const &b);
bool in_column_span(LMat const &a, std::vector<LP> const &b);

// finitely presented 𝒜-module coker(rel : 𝒜^k → 𝒜^ambient)
struct LModule
{
	CycField const *F = nullptr;
	int ambient = 0;
	LMat rel; // ambient × k
};

bool module_is_zero(LModule const &m);
// is ∇^j · M = 0 for some j ≤ maxpow? returns smallest such j
std::optional<int> annihilated_by_power(LModule const &m, LP const &nabla, int maxpow);

// kernel of the morphism M1 → M2 induced by phi (ambient2 × ambient1);
// returns its presentation, and the generator matrix into M1's ambient
LModule kernel_module(LMat const &phi, LModule const &m1, LModule const &m2, LMat *gens);
// cokernel of the same morphism
LModule coker_module(LMat const &phi, LModule const &m2);

// Tor_p(ℚ(ζ)_c, M) dimensions against the character u ↦ c, via SNF
int tor_dim_snf(LModule const &m, Cyc const &c, int p);
// primary method: 𝓘-adic truncation with stabilization (returns {tor0, tor1})
std::pair<int, int> tor_truncated(LModule const &m, Cyc const &c, int max_power);

// dense linear algebra over ℚ(ζ_N)
using CMat = std::vector<std::vector<Cyc>>;
int cmat_rref(CMat &a, std::vector<int> *pivots);
int cmat_rank(CMat a);
CMat cmat_kernel(CMat const &a); // rows = basis of right kernel

} // namespace asf
