#ifndef CURVEBETTI_CURVEBETTI_HPP
#define CURVEBETTI_CURVEBETTI_HPP

#include "errors.hpp"
#include "numsg.hpp"
#include "affsg.hpp"
#include "linalg.hpp"
#include "simplicial.hpp"
#include "divisor.hpp"
#include "parallel.hpp"
#include "betti.hpp"
#include "format.hpp"
#include "verify.hpp"

#endif  // CURVEBETTI_CURVEBETTI_HPP
