#ifndef KCLEAN_KCLEAN_HPP
#define KCLEAN_KCLEAN_HPP

// Core library. JSON encodings live in io.hpp and need nlohmann/json on the include path.

#include "cleanness.hpp"
#include "exponents.hpp"
#include "ideal.hpp"
#include "multicomplex.hpp"
#include "oracles.hpp"
#include "polarization.hpp"
#include "random.hpp"
#include "simplicial.hpp"

#endif
