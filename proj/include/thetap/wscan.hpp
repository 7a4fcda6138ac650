#pragma once

#include <cstdint>
#include <optional>

#include "thetap/rootdata.hpp"

namespace thetap {

struct WeylElement;
struct TorusTorsion;

// Full-group scan kernels. The Weyl group is indexed (perm-major, flip-minor)
// and scanned as a flat range, which makes the reduction data-parallel: the
// best (length, lex) match is an associative min, so the OpenMP variant
// returns bit-identical results to the serial reference.
std::optional<WeylElement> transport_scan_serial(const BasedRootDatum& d,
                                                 const TorusTorsion& src,
                                                 const TorusTorsion& dst);
std::optional<WeylElement> transport_scan_parallel(const BasedRootDatum& d,
                                                   const TorusTorsion& src,
                                                   const TorusTorsion& dst);
// Dispatches to the parallel kernel when it is worth it.
std::optional<WeylElement> transport_scan(const BasedRootDatum& d,
                                          const TorusTorsion& src,
                                          const TorusTorsion& dst);

namespace detail {
void decode_weyl(const BasedRootDatum& d, std::uint64_t index, int* perm,
                 int* flip);
}

}  // namespace thetap
