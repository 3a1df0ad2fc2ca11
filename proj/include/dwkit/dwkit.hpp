#pragma once

#include "dwkit/cochain.hpp"
#include "dwkit/error.hpp"
#include "dwkit/group.hpp"
#include "dwkit/invariants.hpp"
#include "dwkit/io.hpp"
#include "dwkit/phase.hpp"
#include "dwkit/rational.hpp"
#include "dwkit/simplicial.hpp"
#include "dwkit/transgression.hpp"
