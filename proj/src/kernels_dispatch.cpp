#include "rootform/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace rootform::kernels {

namespace {

struct Selection {
    const KernelTable* table;
    std::string_view name;
};

Selection best_supported() noexcept {
    if (const KernelTable* t = avx2_table())
        return {t, "avx2"};
    if (const KernelTable* t = neon_table())
        return {t, "neon"};
    return {&scalar_table(), "scalar"};
}

Selection select() noexcept {
    const char* env = std::getenv("ROOTFORM_KERNELS");
    if (env != nullptr) {
        std::string_view want(env);
        if (want == "scalar")
            return {&scalar_table(), "scalar"};
        if (want == "avx2" && avx2_table() != nullptr)
            return {avx2_table(), "avx2"};
        if (want == "neon" && neon_table() != nullptr)
            return {neon_table(), "neon"};
        // Unknown or unsupported request: ignore and pick the default.
    }
    return best_supported();
}

const Selection& selection() noexcept {
    static const Selection s = select();
    return s;
}

} // namespace

const KernelTable& active() noexcept { return *selection().table; }

std::string_view active_name() noexcept { return selection().name; }

} // namespace rootform::kernels
