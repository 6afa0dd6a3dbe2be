#pragma once

#include "errors.hpp"
#include "integer.hpp"
#include "polynomial.hpp"
#include "factor.hpp"
#include "algebraic.hpp"
#include "fields.hpp"
#include "matrix.hpp"
#include "order.hpp"
#include "complex.hpp"
#include "deformation.hpp"
#include "bounds.hpp"
#include "xi.hpp"
#include "json_io.hpp"
#include "random.hpp"
