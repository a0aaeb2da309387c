#pragma once

#include "vcube/types.hpp"
#include "vcube/forest.hpp"
#include "vcube/union_find.hpp"
#include "vcube/complex.hpp"
#include "vcube/hyperplanes.hpp"
#include "vcube/cover.hpp"
#include "vcube/export.hpp"
#include "vcube/cli.hpp"
