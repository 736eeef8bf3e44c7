#pragma once

#include <vector>

#include "manakov/types.hpp"

namespace manakov {

// Unnormalized forward DFT (kernel e^{-2*pi*i*jk/N}); power-of-two lengths only.
std::vector<Complex> fft(const std::vector<Complex>& v);

// Inverse DFT including the 1/N factor, so ifft(fft(v)) == v.
std::vector<Complex> ifft(const std::vector<Complex>& v);

// In-place variants used by the time stepper.
void fft_inplace(std::vector<Complex>& v, bool inverse);

}  // namespace manakov
