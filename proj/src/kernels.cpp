#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"
#include "quotsing/error.hpp"

namespace quotsing::kernels {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool is_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2") &&
             __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::Neon:
      return neon_table() != nullptr;
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  if (!is_supported(isa)) {
    throw Error(ErrorCode::Precondition,
                std::string("instruction set not available: ") + to_string(isa));
  }
  switch (isa) {
    case Isa::Avx2: return *avx2_table();
    case Isa::Neon: return *neon_table();
    case Isa::Scalar: break;
  }
  return scalar_table();
}

namespace {

const KernelTable* detect() {
  if (const char* env = std::getenv("QUOTSING_ISA")) {
    const std::string_view name(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa) && is_supported(isa)) return &table_for(isa);
    }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (is_supported(isa)) return &table_for(isa);
  }
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{detect()};
  return current;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void force(Isa isa) { slot().store(&table_for(isa), std::memory_order_release); }

void RowBlock::push(std::span<const Residue> row) {
  const std::size_t offset = data_.size();
  data_.resize(offset + stride_, 0);
  std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(offset));
}

bool RowBlock::any_below(std::span<const Residue> v) const {
  if (data_.empty()) return false;
  probe_.assign(stride_, 0);
  std::copy(v.begin(), v.end(), probe_.begin());
  return active().any_below(data_.data(), stride_, size(), probe_.data());
}

}  // namespace quotsing::kernels
