#pragma once

/**
 * @file jnrad.hpp
 * @brief Umbrella header.
 *
 * @code
 * #include <jnrad/jnrad.hpp>
 *
 * auto space = jnrad::SpaceDescriptor::lp(jnrad::Field::Real, 2, jnrad::kInf);
 * jnrad::OperatorTuple T(jnrad::Field::Real, {jnrad::Matrix{{1, 0}, {0, 0}}});
 * auto rr = jnrad::compute_radius(T, space);          // value 1, two orbits
 * auto gens = jnrad::generators(T, space, rr);        // supporting functionals
 * auto sm = jnrad::smoothness(T, space, rr);          // NotSmooth
 * @endcode
 */

#include <jnrad/errors.hpp>
#include <jnrad/io.hpp>
#include <jnrad/lp.hpp>
#include <jnrad/oracle.hpp>
#include <jnrad/orth.hpp>
#include <jnrad/radius.hpp>
#include <jnrad/random.hpp>
#include <jnrad/space.hpp>
#include <jnrad/subdiff.hpp>
#include <jnrad/tuple.hpp>
#include <jnrad/types.hpp>
