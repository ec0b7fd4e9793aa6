#pragma once
#include "asf/fan.hpp"
#include <array>
#include <map>
#include <string>

namespace asf {

// 𝔽_q via full multiplication tables; prime powers through an irreducible
// modulus found by search, elements encoded 0..q−1 in base p
struct Fq
{
	int p = 0, k = 1, q = 0;
	std::vector<int> mul_table; // q*q
	std::vector<int> inv_table; // q, 0 ↦ 0
	std::vector<int> neg_table; // q
	std::vector<int> add_table; // q*q
};

Fq make_fq(int q);
inline int fq_add(Fq const &f, int a, int b) { return f.add_table[a * f.q + b]; }
inline int fq_mul(Fq const &f, int a, int b) { return f.mul_table[a * f.q + b]; }
inline int fq_neg(Fq const &f, int a) { return f.neg_table[a]; }
inline int fq_inv(Fq const &f, int a) { return f.inv_table[a]; }

// truncated Laurent series over 𝔽_q: c[i] is the ε^{i−w} coefficient
struct FqSeries
{
	int w = 0;
	std::vector<int> c; // length 2w
};

FqSeries ser_zero(int w);
FqSeries ser_mono(int w, int coef, int exp);
FqSeries ser_add(Fq const &f, FqSeries const &a, FqSeries const &b);
FqSeries ser_neg(Fq const &f, FqSeries const &a);
FqSeries ser_mul(Fq const &f, FqSeries const &a, FqSeries const &b); // throws on underflow
bool ser_is_zero(FqSeries const &a);
int ser_val(FqSeries const &a); // INT_MAX for 0 up to precision

// element of a product of SL(2)'s over F = 𝔽_q((ε)), one 2×2 block per factor
struct Sl2Block
{
	std::array<FqSeries, 4> e; // row-major (a b; c d)
};

struct TruncatedLaurentMatrix
{
	Fq const *F = nullptr;
	int w = 0;
	std::vector<Sl2Block> blocks;
};

TruncatedLaurentMatrix tlm_identity(Fq const &f, int w, int nblocks);
Sl2Block block_mul(Fq const &f, Sl2Block const &a, Sl2Block const &b);
Sl2Block block_inverse(Fq const &f, Sl2Block const &a); // adjugate; det = 1 assumed
TruncatedLaurentMatrix tlm_mul(TruncatedLaurentMatrix const &a,
                               TruncatedLaurentMatrix const &b);

// γ = diag(ε^{d_j}, −ε^{d_j}) per block: the split regular element with
// val(α_j(γ)) = d_j in large characteristic
struct GammaData
{
	std::vector<int> d; // one valuation per block
};

bool ad_integral(TruncatedLaurentMatrix const &x, GammaData const &gamma);

// D_M^G(x) from the highest-weight minors; for SL(2)-products each ray
// functional is ±e_j^* and reads a row valuation of block j
TorusDivisor truncation_divisor_of_point(TruncatedLaurentMatrix const &x, Fan const &fan);

// Cartan invariant: dominant μ = Σ m_j α_j^∨/... as a cocharacter (m_j ≥ 0)
ZVec cartan_invariant(TruncatedLaurentMatrix const &x);

int recommended_precision(Fan const &fan, TorusDivisor const &d, GammaData const &gamma);

struct FiberEnumeration
{
	std::vector<TruncatedLaurentMatrix> points;
	std::map<std::string, Int> per_cell; // Iwahori cell label "l_1,…,l_r"
	Int count = 0;
};

// exhaustive 𝔽_q-points of 𝔛_γ^G(D) per Iwasawa cell; blocks inside M carry
// no ray conditions and are normalized to the fundamental domain h_B = 0 of
// the free X_*(S)-translation action
FiberEnumeration enumerate_truncated_fiber(RootDatum const &g, Fan const &fan,
                                           GammaData const &gamma, TorusDivisor const &D,
                                           Fq const &f);

// Prop-8.3-style test: the truncated fiber equals the union of the Cartan
// strata whose μ-orbit meets 𝔓(D) under p_M^G
bool cartan_strata_check(RootDatum const &g, Fan const &fan, GammaData const &gamma,
                         TorusDivisor const &D, Fq const &f);

} // namespace asf
