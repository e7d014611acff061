#pragma once

// Umbrella header.

#include "slideturn/common_tangents.hpp"
#include "slideturn/convex_body.hpp"
#include "slideturn/convex_fn.hpp"
#include "slideturn/errors.hpp"
#include "slideturn/geom.hpp"
#include "slideturn/json_io.hpp"
#include "slideturn/oracles.hpp"
#include "slideturn/parallel_body.hpp"
#include "slideturn/slide_curve.hpp"
#include "slideturn/support_lines.hpp"
#include "slideturn/svg.hpp"
