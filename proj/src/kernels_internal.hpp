#pragma once

#include "quotsing/kernels.hpp"

namespace quotsing::kernels::scalar {

void add_mod(const Residue* a, const Residue* b, const Residue* m, Residue* out, std::size_t len);
std::size_t count_nonzero(const Residue* v, std::size_t len);
bool any_below(const Residue* rows, std::size_t stride, std::size_t count, const Residue* v);
void gather_add(const std::uint64_t* base, const std::uint64_t* src, const std::uint32_t* index,
                std::uint64_t* out, std::size_t len);

}  // namespace quotsing::kernels::scalar
