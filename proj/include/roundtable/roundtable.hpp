#pragma once

#include "roundtable/closed_form.hpp"
#include "roundtable/enumerate.hpp"
#include "roundtable/greedy.hpp"
#include "roundtable/matching.hpp"
#include "roundtable/montecarlo.hpp"
#include "roundtable/preferences.hpp"
#include "roundtable/rational.hpp"
#include "roundtable/report.hpp"
#include "roundtable/rng.hpp"
#include "roundtable/stability.hpp"
