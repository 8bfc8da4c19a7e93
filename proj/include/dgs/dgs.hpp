#pragma once

#include "dgs/census.hpp"
#include "dgs/certify.hpp"
#include "dgs/charpoly.hpp"
#include "dgs/cospectral.hpp"
#include "dgs/errors.hpp"
#include "dgs/factorize.hpp"
#include "dgs/graph.hpp"
#include "dgs/json_io.hpp"
#include "dgs/matrix.hpp"
#include "dgs/modp.hpp"
#include "dgs/snf.hpp"
#include "dgs/walk.hpp"
