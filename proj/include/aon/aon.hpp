#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "structure_constants.hpp"
#include "solid.hpp"
#include "idempotent_system.hpp"
#include "character_system.hpp"
#include "correspondences.hpp"
#include "census.hpp"
#include "verify_suite.hpp"
#include "json_io.hpp"
