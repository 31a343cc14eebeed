#pragma once

#include "latlin/algebra.hpp"
#include "latlin/errors.hpp"
#include "latlin/io.hpp"
#include "latlin/oracle.hpp"
#include "latlin/qinterval.hpp"
#include "latlin/rational.hpp"
#include "latlin/solver.hpp"
#include "latlin/tensor.hpp"
