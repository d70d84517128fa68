#pragma once

#include "qugame/cgame/bimatrix.hpp"
#include "qugame/cgame/coalition.hpp"
#include "qugame/cgame/equilibria.hpp"
#include "qugame/cgame/evolution.hpp"
#include "qugame/cgame/zero_sum.hpp"
