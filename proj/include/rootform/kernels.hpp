#pragma once

#include <cstddef>
#include <string_view>

namespace rootform::kernels {

/// Contiguous-array kernels behind the dense matrix operations. Every entry
/// has a scalar reference implementation; AVX2 (x86-64) and NEON (aarch64)
/// variants are selected once at startup when the CPU supports them.
///
/// rot applies the plane rotation
///   x' = c*x - s*y
///   y' = s*x + c*y
/// to both vectors simultaneously.
struct KernelTable {
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum_sq)(const double* x, std::size_t n);
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    void (*scal)(double alpha, double* x, std::size_t n);
    void (*rot)(double* x, double* y, std::size_t n, double c, double s);
};

/// Portable reference implementation; always available.
const KernelTable& scalar_table() noexcept;

/// Architecture variants; nullptr when not compiled in or not supported by
/// the running CPU.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

/// The table picked at startup: best supported variant, overridable with
/// ROOTFORM_KERNELS=scalar|avx2|neon (unsupported requests fall back).
const KernelTable& active() noexcept;

/// Name of the active variant ("scalar", "avx2", "neon").
std::string_view active_name() noexcept;

} // namespace rootform::kernels
