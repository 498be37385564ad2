#pragma once

#include <ostream>

#include "sqw/partition.hpp"
#include "sqw/poly.hpp"

namespace sqw {

inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const SymPoly& p, std::ostream* os) { *os << p.str(); }

}  // namespace sqw
