#pragma once

/// Group operators seen as operators on group algebras.

#include "hopfrb/constructions.hpp"
#include "hopfrb/rb_group.hpp"
#include "hopfrb/rb_hopf.hpp"

namespace hopfrb {

/// The permutation-like matrix e_g -> e_{f(g)}.
inline LinearMap linearize(const GroupMap& m, std::size_t codomain, Field f) {
  LinearMap out(f, codomain, m.size());
  for (Elem g = 0; g < m.size(); ++g) out(m(g), g) = Scalar::one(f);
  return out;
}

struct LinearizedRb {
  HopfData H;
  LinearMap B;
};

inline LinearizedRb linearize_rb(const GroupTable& g, const GroupMap& b, Field f) {
  require_map(b, g.order(), g.order());
  return {group_algebra(g, f), linearize(b, g.order(), f)};
}

}  // namespace hopfrb
