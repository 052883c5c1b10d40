#pragma once

#include <cstdint>
#include <vector>

namespace fuchs::modp {

// Dense row-major square or rectangular matrices over F_p, p an odd prime below 2^32.
using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;
// Coefficients, low degree first; the zero polynomial is empty.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
Poly poly_mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p);
Poly poly_div(Poly f, const Poly& g, std::uint64_t p);
Poly poly_gcd(Poly f, Poly g, std::uint64_t p);
Poly poly_powmod(Poly base, std::uint64_t exponent, const Poly& modulus, std::uint64_t p);
std::uint64_t poly_eval(const Poly& f, std::uint64_t x, std::uint64_t p);

// Characteristic polynomial det(xI - M) via Hessenberg reduction.
Poly charpoly(Mat m, std::uint64_t p);
// Distinct roots in F_p, ascending.
std::vector<std::uint64_t> roots(const Poly& f, std::uint64_t p);
// Basis of {y : M y = 0}, in reduced column form.
std::vector<Vec> kernel(Mat m, std::uint64_t p);
// Gauss-Jordan on vectors as rows; returns a reduced basis and its pivot positions.
std::vector<Vec> reduce_basis(std::vector<Vec> vectors, std::uint64_t p, std::vector<std::size_t>& pivots);

}  // namespace fuchs::modp
