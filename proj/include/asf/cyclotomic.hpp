#pragma once
#include "asf/rational.hpp"
#include <string>

namespace asf {

// ℚ(ζ_N) = ℚ[x]/Φ_N(x), exact arithmetic
struct CycField
{
	int N = 1;
	std::vector<Rat> modulus; // Φ_N, monic, degree = φ(N)
	int deg = 1;
};

CycField make_cyc_field(int N);

struct Cyc
{
	CycField const *F = nullptr;
	std::vector<Rat> c; // length F->deg

	bool is_zero() const;
	bool operator==(Cyc const &o) const { return c == o.c; }
};

Cyc cyc(CycField const &f, Rat const &x);
Cyc zeta(CycField const &f, int power = 1); // ζ_N^power
Cyc operator+(Cyc const &a, Cyc const &b);
Cyc operator-(Cyc const &a, Cyc const &b);
Cyc operator-(Cyc const &a);
Cyc operator*(Cyc const &a, Cyc const &b);
Cyc cyc_inv(Cyc const &a);
std::string to_string(Cyc const &a);

} // namespace asf
