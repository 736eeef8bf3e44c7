#pragma once

#include "manakov/types.hpp"

namespace manakov {

// Matrix exponential of a 4x4 complex matrix, relative accuracy ~1e-12.
// Diagonal Pade(13) core; inputs with ||A||_1 > 0.5 are scaled and squared.
CMat4 expm4(const CMat4& a);

// Inverse of a 3x3 complex matrix by partial-pivot elimination.
// Throws SingularMatrixError (carrying |det|) when |det| <= det_floor.
CMat3 inv3(const CMat3& m, double det_floor = 1e-12);

Complex det3(const CMat3& m);

// Classical adjugate, m * adj(m) = det(m) * I.
CMat3 adjugate3(const CMat3& m);

Complex det4(const CMat4& m);

}  // namespace manakov
