#pragma once

#include "coxlab/enumeration.hpp"
#include "coxlab/group.hpp"
#include "coxlab/patterns.hpp"
#include "coxlab/report.hpp"
#include "coxlab/roots.hpp"
#include "coxlab/statistics.hpp"
#include "coxlab/words.hpp"
