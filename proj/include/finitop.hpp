#pragma once

#include "finitop/subset_mask.hpp"
#include "finitop/error.hpp"
#include "finitop/space.hpp"
#include "finitop/point_map.hpp"
#include "finitop/operators.hpp"
#include "finitop/classify.hpp"
#include "finitop/properties.hpp"
#include "finitop/enumerate.hpp"
#include "finitop/json_io.hpp"
#include "finitop/search.hpp"
#include "finitop/theorems.hpp"
#include "finitop/worked_examples.hpp"
