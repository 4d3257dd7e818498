#pragma once

#include "skillmc/analysis.hpp"
#include "skillmc/checker.hpp"
#include "skillmc/formula.hpp"
#include "skillmc/model.hpp"
#include "skillmc/parser.hpp"
#include "skillmc/ueg.hpp"
