#ifndef BASISKIT_BASISKIT_HPP
#define BASISKIT_BASISKIT_HPP

#include "basiskit/basis.hpp"
#include "basiskit/carrier.hpp"
#include "basiskit/errors.hpp"
#include "basiskit/finite_group.hpp"
#include "basiskit/fixtures.hpp"
#include "basiskit/geom_object.hpp"
#include "basiskit/group.hpp"
#include "basiskit/io.hpp"
#include "basiskit/matrix.hpp"
#include "basiskit/matrix_group.hpp"
#include "basiskit/random.hpp"
#include "basiskit/report.hpp"
#include "basiskit/representation.hpp"
#include "basiskit/scalar.hpp"
#include "basiskit/selftest.hpp"

#endif  // BASISKIT_BASISKIT_HPP
