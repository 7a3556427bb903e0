#pragma once

#include <cstddef>
#include <cstdint>

namespace rdp {

enum class KernelKind { Triangular, Uniform, Epanechnikov };

// Data-parallel inner loops for the local polynomial fits. Every entry point
// has a scalar reference implementation and, on x86-64 machines with AVX2, a
// vectorized variant selected once at startup. The two paths are equivalence
// tested; elementwise kernels (weights, residuals) match bit for bit, the
// reductions match to rounding because lane accumulation reassociates sums.
namespace kernels {

constexpr int kMaxOrder = 5;  // fit order 4 plus one for bias correction

enum class Isa { Scalar, Avx2 };

Isa active_isa();
bool isa_supported(Isa isa);
// Test hook: pin the dispatch to one implementation. Throws if unsupported.
void force_isa(Isa isa);
void reset_isa();

// k[i] = K(u[i]); zero outside |u| <= 1.
void kernel_weights(KernelKind kind, const double* u, double* k, std::size_t n);

// Weighted design moments for a degree-`order` fit:
//   s[j] = sum_i k[i] * u[i]^j          j = 0..2*order
//   t[j] = sum_i k[i] * y[i] * u[i]^j   j = 0..order
// Records with k[i] == 0 contribute exactly nothing.
void weighted_poly_moments(const double* u, const double* k, const double* y,
                           std::size_t n, int order, double* s, double* t);

// Sandwich meat moments: m[j] = sum_i (k[i]*e[i])^2 * u[i]^j, j = 0..2*order.
void weighted_score_moments(const double* u, const double* k, const double* e,
                            std::size_t n, int order, double* m);

// r[i] = y[i] - sum_j b[j] * u[i]^j (Horner), b has order+1 coefficients.
void poly_residuals(const double* u, const double* y, const double* b, int order,
                    std::size_t n, double* r);

}  // namespace kernels

// Single-point kernel weight, shared definition with the array variants.
double kernel_weight(KernelKind kind, double u);

const char* kernel_name(KernelKind k);

}  // namespace rdp
