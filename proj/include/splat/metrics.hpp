#pragma once

#include "splat/types.hpp"

namespace splat {

// 10 log10(1 / MSE) over all channels of [0,1] images; identical images hit
// the 100 dB cap. Throws on dimension mismatch.
double psnr(const Image& a, const Image& b);

// Mean local SSIM, 11x11 Gaussian window sigma 1.5, k1=0.01, k2=0.03, L=1,
// per channel and averaged; windows fully inside the image. Throws when a
// side is smaller than the window.
double ssim(const Image& a, const Image& b);

}  // namespace splat
