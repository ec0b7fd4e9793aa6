#pragma once
#include "asf/rootdata.hpp"
#include <string>

namespace asf {

struct Ray
{
	ParabolicSubgroup par; // maximal proper parabolic Q with σ = a_Q^{G,+}
	ZVec gen;              // primitive generator ϖ_σ ∈ X^*(T)
	std::string id;        // canonical label from the nilradical root set
};

struct FanCone
{
	ParabolicSubgroup par;
	std::vector<int> rays; // indices into Fan::rays
};

struct Fan
{
	RootDatum const *g = nullptr;
	LeviSubgroup m;
	std::vector<Ray> rays;
	std::vector<FanCone> cones;
	std::vector<int> maximal; // cone indices with Levi exactly M
	int dim = 0;              // dim a_M^G

	// X_*(S) = integer kernel of the ray evaluation map
	ZMat s_lattice;
	// Λ = image of X_*(T) in a_M^G: rational basis rows + integer preimages
	QMat lambda_basis;
	ZMat lambda_preimage;

	int ray_index(std::string const &id) const;
	Rat eval_ray(int ray, QVec const &lam) const; // ϖ_σ(λ)
};

Fan build_fan(RootDatum const &datum, LeviSubgroup const &M);

// divisors on the fan, rational internally, aligned with fan.rays
struct TorusDivisor
{
	QVec n; // coefficient per ray
	bool operator==(TorusDivisor const &o) const { return n == o.n; }
};

TorusDivisor zero_divisor(Fan const &fan);
TorusDivisor divisor_add(TorusDivisor const &a, TorusDivisor const &b);
TorusDivisor divisor_neg(TorusDivisor const &a);
bool divisor_is_integral(TorusDivisor const &d);
bool divisor_leq(TorusDivisor const &a, TorusDivisor const &b); // a ≤ b per ray
bool divisor_tau_stable(Fan const &fan, TorusDivisor const &d);

// (λ) = Σ ϖ_σ(λ) D_σ
TorusDivisor divisor_of_cocharacter(Fan const &fan, QVec const &lam);

struct OrthogonalFamily
{
	// aligned with fan.maximal; each point lies in a_M^G ⊆ ℚ^rank
	std::vector<QVec> points;
};

// dual basis {α_σ^∨} ⊆ a_M^G of the ray generators Π_P of a maximal cone
QMat cone_dual_basis(Fan const &fan, int max_cone);

bool is_orthogonal_family(Fan const &fan, OrthogonalFamily const &fam);
bool family_positive(Fan const &fan, OrthogonalFamily const &fam);

TorusDivisor family_to_divisor(Fan const &fan, OrthogonalFamily const &fam);
OrthogonalFamily divisor_to_family(Fan const &fan, TorusDivisor const &d);
OrthogonalFamily dominant_family(Fan const &fan, QVec const &lam);

struct Regularity
{
	Rat d, delta;
	bool positive, very_positive;
};
Regularity regularity(Fan const &fan, OrthogonalFamily const &fam);

struct Polytope
{
	Fan const *fan = nullptr;
	std::vector<QVec> vertices; // μ_P^D, aligned with fan.maximal
	QVec bound;                 // halfspace ϖ_σ(x) ≤ bound[σ], aligned with rays
};

Polytope polytope(Fan const &fan, TorusDivisor const &d);
bool polytope_contains(Polytope const &p, QVec const &x);
// is x in the convex hull of the vertices? (exact; dim a_M^G ≤ 2 supported)
bool hull_contains(Polytope const &p, QVec const &x);

struct LatticePoint
{
	QVec point; // in a_M^G
	ZVec lift;  // a preimage in X_*(T) under p_M^G (canonical section)
};

// points of the Λ-sublattice inside the polytope
std::vector<LatticePoint> lattice_points(Polytope const &p);

// Γ(D) representatives: λ ∈ X_*(T)/X_*(S) with (λ) + D ≥ 0, via the section
std::vector<LatticePoint> gamma_basis(Fan const &fan, TorusDivisor const &d);

// decompose μ ∈ X_*(T) as lift(rep) + (element of X_*(S));
// returns (rep index within reps, coordinates in s_lattice)
std::optional<std::pair<int, ZVec>> split_off_s(Fan const &fan,
                                                std::vector<LatticePoint> const &reps,
                                                ZVec const &mu);

} // namespace asf
