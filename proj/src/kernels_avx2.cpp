#include "kernels_internal.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define QUOTSING_HAVE_AVX2 1
#include <immintrin.h>
#endif

namespace quotsing::kernels {

#ifdef QUOTSING_HAVE_AVX2
namespace avx2 {

#define QUOTSING_TARGET_AVX2 __attribute__((target("avx2,popcnt")))

QUOTSING_TARGET_AVX2
void add_mod(const Residue* a, const Residue* b, const Residue* m, Residue* out, std::size_t len) {
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i sum = _mm256_add_epi32(va, vb);
    // sum - m wraps above sum exactly when sum < m, so the unsigned min picks
    // the reduced value in both cases.
    const __m256i reduced = _mm256_min_epu32(sum, _mm256_sub_epi32(sum, vm));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), reduced);
  }
  if (i < len) scalar::add_mod(a + i, b + i, m + i, out + i, len - i);
}

QUOTSING_TARGET_AVX2
std::size_t count_nonzero(const Residue* v, std::size_t len) {
  std::size_t count = 0;
  std::size_t i = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 8 <= len; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const int zero_mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero)));
    count += 8 - static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(zero_mask)));
  }
  return count + scalar::count_nonzero(v + i, len - i);
}

QUOTSING_TARGET_AVX2
bool any_below(const Residue* rows, std::size_t stride, std::size_t count, const Residue* v) {
  for (std::size_t r = 0; r < count; ++r) {
    const Residue* row = rows + r * stride;
    __m256i above = _mm256_setzero_si256();
    for (std::size_t i = 0; i < stride; i += 8) {
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
      const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
      // Signed compare is exact because all lanes are below 2^31.
      above = _mm256_or_si256(above, _mm256_cmpgt_epi32(x, y));
    }
    if (_mm256_testz_si256(above, above)) return true;
  }
  return false;
}

QUOTSING_TARGET_AVX2
void gather_add(const std::uint64_t* base, const std::uint64_t* src, const std::uint32_t* index,
                std::uint64_t* out, std::size_t len) {
  std::size_t i = 0;
  const auto* table = reinterpret_cast<const long long*>(src);
  for (; i + 4 <= len; i += 4) {
    const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(index + i));
    const __m256i gathered = _mm256_i32gather_epi64(table, idx, 8);
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_add_epi64(b, gathered));
  }
  if (i < len) scalar::gather_add(base + i, src, index + i, out + i, len - i);
}

#undef QUOTSING_TARGET_AVX2

}  // namespace avx2

const KernelTable* avx2_table() {
  static const KernelTable table{Isa::Avx2, avx2::add_mod, avx2::count_nonzero, avx2::any_below,
                                 avx2::gather_add};
  return &table;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace quotsing::kernels
