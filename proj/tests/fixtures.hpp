#pragma once

#include "burniat/surface.hpp"

namespace fixture {

using burniat::BurniatSurface;
using burniat::QuarticCurve;

inline BurniatSurface ex1() { return {{QuarticCurve{-1, 0, -1}, QuarticCurve{1, 0, -1}, QuarticCurve{1, 0, 1}}, 2}; }
inline BurniatSurface ex2() { return {{QuarticCurve{-1, 0, -1}, QuarticCurve{1, 2, 2}, QuarticCurve{-2, -2, 1}}, 1}; }
inline BurniatSurface ex3() { return {{QuarticCurve{2, 1, 1}, QuarticCurve{1, -1, 1}, QuarticCurve{1, -1, 4}}, 1}; }
inline BurniatSurface ex4() { return {{QuarticCurve{2, 1, 1}, QuarticCurve{1, 1, 2}, QuarticCurve{1, -1, 1}}, 1}; }

}  // namespace fixture
