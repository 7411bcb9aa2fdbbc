#pragma once

#include "conelike/numerics.hpp"

namespace conelike {

// (a z + b) / (c z + d)
struct Mobius {
  complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
};

inline complex mobius_apply(const Mobius& m, complex z) {
  return (m.a * z + m.b) / (m.c * z + m.d);
}

inline complex mobius_deriv(const Mobius& m, complex z) {
  const complex den = m.c * z + m.d;
  return (m.a * m.d - m.b * m.c) / (den * den);
}

inline Mobius mobius_inverse(const Mobius& m) { return {m.d, -m.b, -m.c, m.a}; }

inline Mobius mobius_compose(const Mobius& f, const Mobius& g) {  // f after g
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c,
          f.c * g.b + f.d * g.d};
}

// The unique Moebius map sending (z1,z2,z3) to (0,1,infinity).
inline Mobius mobius_to_standard(complex z1, complex z2, complex z3) {
  return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

// The unique Moebius map with z_k -> w_k for three finite point pairs.
inline Mobius mobius_through(complex z1, complex z2, complex z3, complex w1, complex w2,
                             complex w3) {
  return mobius_compose(mobius_inverse(mobius_to_standard(w1, w2, w3)),
                        mobius_to_standard(z1, z2, z3));
}

}  // namespace conelike
