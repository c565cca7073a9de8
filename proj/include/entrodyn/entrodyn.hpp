#ifndef ENTRODYN_ENTRODYN_HPP
#define ENTRODYN_ENTRODYN_HPP

#include "entrodyn/densities.hpp"
#include "entrodyn/errors.hpp"
#include "entrodyn/fokker_planck.hpp"
#include "entrodyn/functionals.hpp"
#include "entrodyn/gaussian.hpp"
#include "entrodyn/grid.hpp"
#include "entrodyn/ou.hpp"
#include "entrodyn/quantum.hpp"
#include "entrodyn/spectral.hpp"

#endif
