#include "kernels_internal.hpp"

#if defined(__aarch64__)
#define QUOTSING_HAVE_NEON 1
#include <arm_neon.h>
#endif

namespace quotsing::kernels {

#ifdef QUOTSING_HAVE_NEON
namespace neon {

void add_mod(const Residue* a, const Residue* b, const Residue* m, Residue* out, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const uint32x4_t sum = vaddq_u32(vld1q_u32(a + i), vld1q_u32(b + i));
    vst1q_u32(out + i, vminq_u32(sum, vsubq_u32(sum, vld1q_u32(m + i))));
  }
  if (i < len) scalar::add_mod(a + i, b + i, m + i, out + i, len - i);
}

std::size_t count_nonzero(const Residue* v, std::size_t len) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const uint32x4_t x = vld1q_u32(v + i);
    count += vaddvq_u32(vshrq_n_u32(vtstq_u32(x, x), 31));
  }
  return count + scalar::count_nonzero(v + i, len - i);
}

bool any_below(const Residue* rows, std::size_t stride, std::size_t count, const Residue* v) {
  for (std::size_t r = 0; r < count; ++r) {
    const Residue* row = rows + r * stride;
    uint32x4_t above = vdupq_n_u32(0);
    for (std::size_t i = 0; i < stride; i += 4) {
      above = vorrq_u32(above, vcgtq_u32(vld1q_u32(row + i), vld1q_u32(v + i)));
    }
    if (vmaxvq_u32(above) == 0) return true;
  }
  return false;
}

void gather_add(const std::uint64_t* base, const std::uint64_t* src, const std::uint32_t* index,
                std::uint64_t* out, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const uint64x2_t gathered = vcombine_u64(vcreate_u64(src[index[i]]), vcreate_u64(src[index[i + 1]]));
    vst1q_u64(out + i, vaddq_u64(vld1q_u64(base + i), gathered));
  }
  if (i < len) scalar::gather_add(base + i, src, index + i, out + i, len - i);
}

}  // namespace neon

const KernelTable* neon_table() {
  static const KernelTable table{Isa::Neon, neon::add_mod, neon::count_nonzero, neon::any_below,
                                 neon::gather_add};
  return &table;
}

#else

const KernelTable* neon_table() { return nullptr; }

#endif

}  // namespace quotsing::kernels
