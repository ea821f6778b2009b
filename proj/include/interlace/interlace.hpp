#pragma once

// Umbrella header: everything except report_json.hpp, which drags in the JSON
// library and is opt-in.

#include "interlace/audit.hpp"
#include "interlace/dense_matrix.hpp"
#include "interlace/eigen.hpp"
#include "interlace/graph.hpp"
#include "interlace/interlacing.hpp"
#include "interlace/io.hpp"
#include "interlace/partition.hpp"
#include "interlace/quotient.hpp"
#include "interlace/search.hpp"
#include "interlace/tolerance.hpp"
