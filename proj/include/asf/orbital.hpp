#pragma once
#include "asf/bruteforce.hpp"
#include "asf/endoscopy.hpp"

namespace asf {

// v_D(x) = #{λ ∈ Λ_Σ | (λ) + D_M^G(x) ≤ D}, with x given by its divisor
Int weight(Fan const &fan, TorusDivisor const &D, TorusDivisor const &dx);

// exact interpolation: fits an integer polynomial through all but the last
// sample and uses the last as a consistency witness; throws on mismatch
std::vector<Int> fit_int_polynomial(std::vector<std::pair<Int, Int>> const &pts);

Int eval_poly(std::vector<Int> const &poly, Int const &q);

// Δ_s(γ) = Π (−1)^{prof(α)} over symmetric τ-orbit representatives with
// α^∨(s) ≠ 1; τ acts on X_*(T)
int transfer_sign(RootDatum const &datum, ValuationProfile const &prof, ZMat const &tau,
                  TorusPoint const &s);

struct OrbitalResult
{
	std::vector<Int> poly; // J_D(γ) (or J_D^κ) as a polynomial in q
	std::vector<std::string> assumptions;
};

// Lefschetz/Tor mode: trace polynomial of the homology engine; κ-twisted
// Tor trace when X_*(S) has rank one (κ may be null for the trivial character)
OrbitalResult orbital_integral_lefschetz(Fan const &fan, TorusDivisor const &D,
                                         ValuationProfile const &prof,
                                         std::vector<int> const &h_pos,
                                         TorusPoint const *kappa = nullptr);

// brute-force mode at a fixed q: normalized exhaustive count (all split-torus
// constants are 1; blocks inside M are counted on the h_B = 0 slice)
Int orbital_integral_bruteforce(RootDatum const &g, Fan const &fan, GammaData const &gamma,
                                TorusDivisor const &D, Fq const &f);

struct FlInstance
{
	TorusDivisor d;
	std::vector<Int> lhs, rhs; // polynomials in q
	bool equal = false;
};

struct FlReport
{
	bool hypotheses_met = true;
	EndoscopicStratum strata;
	std::vector<int> d_i; // d_I for the singleton strata, aligned with systems
	std::vector<FlInstance> instances;
	std::vector<std::string> assumptions;
};

// Δ_κ(γ) J_D^{G,κ}(γ) = Σ_{∅≠I} (−1)^{|I|−1} q^{d_I} J_D^{G_I,κ}(γ),
// both sides symbolic in q via the Tor-trace engine (split configurations)
FlReport fundamental_lemma_check(RootDatum const &g, Fan const &fan,
                                 ValuationProfile const &prof, TorusPoint const &kappa,
                                 std::vector<TorusDivisor> const &family);

} // namespace asf
