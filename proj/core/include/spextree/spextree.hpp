#pragma once

// Convenience header pulling in the whole library.

#include "spextree/canonical.hpp"
#include "spextree/constructions.hpp"
#include "spextree/covering.hpp"
#include "spextree/embedding.hpp"
#include "spextree/error.hpp"
#include "spextree/extremal.hpp"
#include "spextree/graph.hpp"
#include "spextree/oracle.hpp"
#include "spextree/serialize.hpp"
#include "spextree/spectral.hpp"
#include "spextree/tree.hpp"
#include "spextree/verify.hpp"
