#ifndef FATPOINT_FATPOINT_HPP
#define FATPOINT_FATPOINT_HPP

#include "fatpoint/binary_forms.hpp"
#include "fatpoint/collinear.hpp"
#include "fatpoint/containment.hpp"
#include "fatpoint/invariants.hpp"
#include "fatpoint/monomial_ideal.hpp"
#include "fatpoint/scheme.hpp"
#include "fatpoint/splittings.hpp"

#endif
