#pragma once

#include "ellipsograph/bom.hpp"
#include "ellipsograph/clearance.hpp"
#include "ellipsograph/error.hpp"
#include "ellipsograph/export.hpp"
#include "ellipsograph/geometry.hpp"
#include "ellipsograph/run_config.hpp"
#include "ellipsograph/solver.hpp"
#include "ellipsograph/trammel.hpp"
#include "ellipsograph/verify.hpp"
