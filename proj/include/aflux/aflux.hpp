#ifndef AFLUX_AFLUX_HPP_
#define AFLUX_AFLUX_HPP_

#include "aflux/app.hpp"
#include "aflux/basis.hpp"
#include "aflux/flux.hpp"
#include "aflux/limiter.hpp"
#include "aflux/method_a.hpp"
#include "aflux/method_b.hpp"
#include "aflux/polynomial.hpp"
#include "aflux/quadrature.hpp"
#include "aflux/scheme_core.hpp"
#include "aflux/stability.hpp"
#include "aflux/state.hpp"

#endif  // AFLUX_AFLUX_HPP_
