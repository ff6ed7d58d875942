#pragma once

// Semisimple classes of SL(n, q) and Sp(2n, q), and adjoint orbits of
// sp(2n, q), encoded as characteristic polynomials; and the map Phi to Weyl
// group class labels.

#include <string>
#include <vector>

#include "cellini/finite_field.hpp"
#include "cellini/measure.hpp"
#include "cellini/weyl.hpp"

namespace cellini {

enum class ClassKind { SL, Sp, SpLie };
std::string to_string(ClassKind k);

/// Monic degree-n polynomials with constant term 1, in code order; q^{n-1} <= 10^6.
std::vector<ff::FqPoly> enumerate_sl(const ff::Fq& f, int n);
/// Monic degree-2n f with f(0) != 0, f equal to its reciprocal conjugate, and
/// z - 1, z + 1 of even multiplicity. q^{2n} <= 10^7. Throws InvariantError
/// unless exactly q^n polynomials qualify.
std::vector<ff::FqPoly> enumerate_sp(const ff::Fq& f, int n);
/// g(z^2) for every monic g of degree n; q odd, q^n <= 10^6.
std::vector<ff::FqPoly> enumerate_sp_lie(const ff::Fq& f, int n);

/// Parts deg(f_i) repeated a_i times.
ClassLabel phi_A(ff::Factorizer& fz, const ff::FqPoly& f);
/// Pairs {phi, conj(phi)} with multiplicity r add r to lambda_{deg phi};
/// a self-conjugate phi of degree d with multiplicity 2r+s adds r to
/// lambda_d and s to mu_{d/2}. Throws InvariantError on unpaired factors.
ClassLabel phi_C(ff::Factorizer& fz, const ff::FqPoly& f);
/// Same bookkeeping with sign_conjugate; z counts toward lambda_1 only.
ClassLabel phi_C_lie(ff::Factorizer& fz, const ff::FqPoly& f);

/// Uniform distribution over the enumerated classes pushed through Phi.
ClassMeasure class_distribution(ClassKind kind, int n, int q);

/// Number of enumerated classes.
std::size_t class_count(ClassKind kind, int n, int q);

}  // namespace cellini
