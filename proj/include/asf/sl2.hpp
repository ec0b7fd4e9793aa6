#pragma once
#include "asf/homology.hpp"
#include <map>

namespace asf {

struct Sl2Truncation
{
	int n_b = 0;  // n_B
	int n_bb = 0; // n_B̄
	int d = 0;    // val(α(γ))
};

// cell dimensions per index n (nonempty cells only)
std::map<int, int> sl2_cells(Sl2Truncation const &t);

BettiTable sl2_betti(Sl2Truncation const &t);

struct MomentGraph
{
	std::vector<int> vertices;                    // fixed points t_l
	std::vector<std::tuple<int, int, int>> edges; // (l, m, label l+m)
};

MomentGraph sl2_moment_graph(Sl2Truncation const &t);

// the §9.5-style GKM presentation, independent of the springer engine:
// graded dimensions of the quotient and its 𝒟^+-annihilator
struct Sl2Gkm
{
	std::vector<Int> quotient_dims; // per 𝒮-degree
	BettiTable betti;
};

Sl2Gkm sl2_gkm(Sl2Truncation const &t);

// Σ_n q^{dim C_n} as coefficient list in q
std::vector<Int> sl2_point_count(Sl2Truncation const &t);

// §1.3 closed form (with the i < d reading)
BettiTable sl2_closed_form(int d, int m);

} // namespace asf
