#pragma once

#include "anchorpath/error.hpp"
#include "anchorpath/geometry.hpp"
#include "anchorpath/mobility.hpp"
#include "anchorpath/ns2_scenario.hpp"
#include "anchorpath/number_format.hpp"
#include "anchorpath/path_models.hpp"
#include "anchorpath/reports.hpp"
#include "anchorpath/wsn.hpp"
