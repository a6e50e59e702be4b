#pragma once

#include "sinebound/audit.hpp"
#include "sinebound/bounds.hpp"
#include "sinebound/compare.hpp"
#include "sinebound/regions.hpp"
#include "sinebound/specfun.hpp"
