#include "kernels_internal.hpp"

namespace quotsing::kernels {
namespace scalar {

void add_mod(const Residue* a, const Residue* b, const Residue* m, Residue* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const Residue s = a[i] + b[i];
    out[i] = s >= m[i] ? s - m[i] : s;
  }
}

std::size_t count_nonzero(const Residue* v, std::size_t len) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < len; ++i) count += v[i] != 0;
  return count;
}

bool any_below(const Residue* rows, std::size_t stride, std::size_t count, const Residue* v) {
  for (std::size_t r = 0; r < count; ++r) {
    const Residue* row = rows + r * stride;
    bool below = true;
    for (std::size_t i = 0; i < stride; ++i) {
      if (row[i] > v[i]) {
        below = false;
        break;
      }
    }
    if (below) return true;
  }
  return false;
}

void gather_add(const std::uint64_t* base, const std::uint64_t* src, const std::uint32_t* index,
                std::uint64_t* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = base[i] + src[index[i]];
}

}  // namespace scalar

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, scalar::add_mod, scalar::count_nonzero,
                                 scalar::any_below, scalar::gather_add};
  return table;
}

}  // namespace quotsing::kernels
