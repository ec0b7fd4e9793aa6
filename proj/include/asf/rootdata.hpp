#pragma once
#include "asf/linalg.hpp"
#include <string>

namespace asf {

// Root datum for a split connected reductive group, given by simple
// (co)roots in dual bases of X^*(T) ≅ ℤ^rank and X_*(T) ≅ ℤ^rank; the
// pairing is the standard dot product. The full root set is generated by
// the simple reflections. A finite-order lattice automorphism of X_*(T)
// (acting on X^* by the transpose inverse) carries the Frobenius.
struct RootDatum
{
	int rank = 0;
	std::vector<ZVec> roots;   // all roots, in X^* coordinates
	std::vector<ZVec> coroots; // coroots[i] matches roots[i]
	std::vector<int> simple;   // indices of the simple roots
	std::vector<int> neg;      // neg[i] = index of -roots[i]
	std::vector<int> positive; // indices, nonneg combos of simples
	ZMat frob;                 // τ on X_*(T) (identity when split)

	// Weyl group, BFS order from the identity; costar acts on X_*,
	// star on X^* (same group element at the same index)
	std::vector<QMat> weyl_costar;
	std::vector<QMat> weyl_star;

	bool is_positive(int root_index) const;
	int root_index(ZVec const &alpha) const;
	int frob_root(int root_index) const; // index of τ-image of a root
};

Rat pairing(QVec const &chi, QVec const &lam);

RootDatum build_root_datum(int rank, ZMat const &simple_roots, ZMat const &simple_coroots,
                           ZMat const &frobenius = {});
RootDatum root_datum_from_json(std::string const &text);
RootDatum sl2_datum();
RootDatum sl3_datum();
RootDatum product_datum(RootDatum const &a, RootDatum const &b);

struct LeviSubgroup
{
	RootDatum const *datum = nullptr;
	std::vector<int> levi_roots; // sorted indices of Φ^M
	QMat a_TM;                   // span of Φ^M coroots (rows)
	QMat a_G;                    // {x : α(x)=0 ∀α∈Φ} (rows)
	QMat a_MG;                   // a_M ∩ span(Φ^∨) (rows)
	QMat proj_MG;                // p_M^G : a_T → a_M^G
	QMat dual_MG;                // basis of (a_M^G)^* inside X^*⊗ℚ

	bool is_torus() const { return levi_roots.empty(); }
	bool is_full() const { return (int)levi_roots.size() == (int)datum->roots.size(); }
};

struct ParabolicSubgroup
{
	std::vector<int> levi_roots; // sorted
	std::vector<int> nilrad;     // sorted
	bool operator==(ParabolicSubgroup const &o) const
	{
		return levi_roots == o.levi_roots && nilrad == o.nilrad;
	}
	std::vector<int> all_roots() const; // levi ∪ nilrad, sorted
	bool contains(ParabolicSubgroup const &p) const;
};

LeviSubgroup make_levi(RootDatum const &datum, std::vector<int> levi_roots);
std::vector<LeviSubgroup> enumerate_levis(RootDatum const &datum);

// 𝓕^G(M): all parabolics whose Levi contains M (Levi = M gives 𝓟^G(M))
std::vector<ParabolicSubgroup> enumerate_parabolics(LeviSubgroup const &M);
std::vector<ParabolicSubgroup> minimal_parabolics(LeviSubgroup const &M); // 𝓟^G(M)

// p_M^L for nested Levis Φ^L ⊆ Φ^M: projector onto a_M^G along a_T^M ⊕ a_G,
// restricting to a_L^G → a_M^G; satisfies p_M^L ∘ p_L^G = p_M^G
QMat levi_projector(RootDatum const &datum, std::vector<int> const &m_roots,
                    std::vector<int> const &l_roots);

// simple roots of the positive system of the first Borel inside P,
// intersected with Φ^{N_P} (the set Δ_P, evaluated on a_{M_P})
std::vector<int> delta_of_parabolic(RootDatum const &datum, ParabolicSubgroup const &P);

// the P-dominant Weyl translate of λ (first Weyl element in BFS order that
// makes λ dominant for the canonical Borel inside P)
QVec dominant_translate(RootDatum const &datum, ParabolicSubgroup const &P, QVec const &lam);

} // namespace asf
