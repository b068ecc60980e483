#pragma once

#include "ncsimo/linalg.hpp"

namespace ncsimo {

// Rate penalties in bits per block. x1_rot is user 1's input in the frame
// where user 2's input lies on the last slot.
double eval_f(const CVector& x1_rot, const CVector& x2, int N);

enum class GCase { A, B, C };
const char* to_string(GCase c);

GCase classify_g(const CVector& x1_rot, const CVector& x2);
double eval_g(const CVector& x1_rot, const CVector& x2, double P, int N);

}  // namespace ncsimo
