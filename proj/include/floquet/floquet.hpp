#pragma once

#include "floquet/complex2.hpp"
#include "floquet/csv.hpp"
#include "floquet/decay.hpp"
#include "floquet/dispersion.hpp"
#include "floquet/evolution.hpp"
#include "floquet/exceptional.hpp"
#include "floquet/fft.hpp"
#include "floquet/linfit.hpp"
#include "floquet/quadrature.hpp"
#include "floquet/roots.hpp"
#include "floquet/specfun.hpp"
#include "floquet/spectral_field.hpp"
#include "floquet/stationary_phase.hpp"
#include "floquet/svg.hpp"
#include "floquet/wavepacket.hpp"
