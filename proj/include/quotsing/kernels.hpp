#pragma once

// Data-parallel inner loops used by the enumeration code. Every kernel has a
// scalar reference implementation; SIMD variants (AVX2 on x86-64, NEON on
// AArch64) are selected at runtime and must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace quotsing::kernels {

// Residues and exponent entries are stored as uint32 lanes. All kernels
// assume values (and moduli) are below 2^31.
using Residue = std::uint32_t;

// Rows handed to any_below() are zero-padded to a multiple of this width.
inline constexpr std::size_t kLaneWidth = 8;

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa);

struct KernelTable {
  Isa isa;
  // out[i] = (a[i] + b[i]) mod m[i], for a[i], b[i] < m[i].
  void (*add_mod)(const Residue* a, const Residue* b, const Residue* m, Residue* out,
                  std::size_t len);
  std::size_t (*count_nonzero)(const Residue* v, std::size_t len);
  // True iff some row r of rows[count][stride] satisfies r <= v componentwise.
  // stride is a multiple of kLaneWidth.
  bool (*any_below)(const Residue* rows, std::size_t stride, std::size_t count,
                    const Residue* v);
  // out[i] = base[i] + src[index[i]]; out may alias base.
  void (*gather_add)(const std::uint64_t* base, const std::uint64_t* src,
                     const std::uint32_t* index, std::uint64_t* out, std::size_t len);
};

const KernelTable& scalar_table();
// nullptr when the variant is not compiled for this target.
const KernelTable* avx2_table();
const KernelTable* neon_table();

bool is_supported(Isa isa);
const KernelTable& table_for(Isa isa);

// Best supported table, unless overridden by force() or QUOTSING_ISA.
const KernelTable& active();
void force(Isa isa);

inline std::size_t padded_width(std::size_t n) {
  return (n + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
}

inline void add_mod(std::span<const Residue> a, std::span<const Residue> b,
                    std::span<const Residue> m, std::span<Residue> out) {
  active().add_mod(a.data(), b.data(), m.data(), out.data(), out.size());
}

inline std::size_t count_nonzero(std::span<const Residue> v) {
  return active().count_nonzero(v.data(), v.size());
}

inline void gather_add(std::span<const std::uint64_t> base, std::span<const std::uint64_t> src,
                       std::span<const std::uint32_t> index, std::span<std::uint64_t> out) {
  active().gather_add(base.data(), src.data(), index.data(), out.data(), out.size());
}

// A block of zero-padded rows supporting the domination scan.
class RowBlock {
 public:
  explicit RowBlock(std::size_t width) : width_(width), stride_(padded_width(width)) {}

  void push(std::span<const Residue> row);
  std::size_t size() const { return stride_ == 0 ? 0 : data_.size() / stride_; }
  std::size_t width() const { return width_; }

  // True iff some stored row is <= v componentwise. |v| == width().
  bool any_below(std::span<const Residue> v) const;

 private:
  std::size_t width_;
  std::size_t stride_;
  std::vector<Residue> data_;
  mutable std::vector<Residue> probe_;
};

}  // namespace quotsing::kernels
