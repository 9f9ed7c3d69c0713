#pragma once

#include <vector>

#include "rmf/liecore.hpp"
#include "rmf/matrix.hpp"
#include "rmf/rational.hpp"

namespace rmf {

/// Cartan part of the Cremmer-Gervais r-matrix on sl(5), in the basis
/// h_1..h_4: entry (k,l) is the coefficient of h_k (x) h_l.
CartanTensor fixture_r0_5();

/// Finite Cartan block of the induced sl(4) structure, in the basis h_1..h_3.
CartanTensor fixture_r0_4_hat();

/// Coefficients of the distinguished Cartan element p of the restricted
/// seaweed in sl(5), over h_1..h_4:  p = sum_k ((5-2k)/5) h_k.
std::vector<Rational> fixture_p5();

/// The 4x4 transition matrix used to present the Lagrangian subalgebra W.
Matrix<Rational> fixture_T();

}  // namespace rmf
