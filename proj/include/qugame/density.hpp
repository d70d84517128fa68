#pragma once

#include "qugame/density/cloning.hpp"
#include "qugame/density/density_matrix.hpp"
#include "qugame/density/estimation.hpp"
